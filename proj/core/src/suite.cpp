#include "qshuffle/suite.hpp"

#include <algorithm>
#include <chrono>

#include "parallel.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/series.hpp"

namespace qshuffle {

SweepOptions SweepOptions::acceptance() {
  SweepOptions o;
  o.group_bounds = {
      {"letter-commutator", 4},     {"convolution", 3}, {"convolution-corollary", 3},
      {"alternating", 6},           {"doubly-commutator", 4}, {"alternative-form", 3},
  };
  return o;
}

bool SweepResult::pass() const { return failures() == 0; }

std::size_t SweepResult::failures() const {
  const auto bad_reports = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  const auto bad_checks = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; });
  return static_cast<std::size_t>(bad_reports + bad_checks);
}

SweepResult verify_all(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  struct Task {
    const RelationFamily* family;
    std::vector<unsigned> params;
  };
  std::vector<Task> tasks;
  for (const RelationFamily& f : list_families()) {
    if (f.group == "generating-function") {
      tasks.push_back({&f, {options.series_order}});
      continue;
    }
    unsigned bound = f.arity == 2 ? options.bound2 : options.bound1;
    if (auto it = options.group_bounds.find(f.group); it != options.group_bounds.end()) bound = it->second;
    for (auto& p : parameter_range(f.arity, bound)) tasks.push_back({&f, std::move(p)});
  }

  // Longest tasks first keeps the pool busy at the tail.
  std::vector<std::size_t> order(tasks.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto weight = [&](const Task& t) {
    unsigned s = 0;
    for (unsigned p : t.params) s += p;
    return t.family->group == "generating-function" ? 100U + s : s;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(tasks[a]) > weight(tasks[b]); });

  SweepResult result;
  result.reports = detail::parallel_map<VerificationReport>(tasks.size(), options.jobs, [&](std::size_t k) {
    const Task& t = tasks[order[k]];
    if (t.family->group == "generating-function") return verify_series_identity(t.family->id, t.params[0]);
    return verify(t.family->id, t.params);
  });
  std::sort(result.reports.begin(), result.reports.end(), [](const auto& a, const auto& b) {
    return a.id != b.id ? a.id < b.id : a.params < b.params;
  });
  if (options.properties) result.checks = run_property_checks();
  result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace qshuffle
