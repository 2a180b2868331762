#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "qshuffle/errors.hpp"
#include "qshuffle/families.hpp"
#include "qshuffle/json.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/series.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/suite.hpp"

namespace qshuffle::cli {
namespace {

enum class Format { Text, Json };

// Thrown for bad operand combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string millis_text(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(ms < 10 ? 2 : 0) << ms << " ms";
  return s.str();
}

std::string params_text(const std::vector<unsigned>& params) {
  std::string s = "(";
  for (std::size_t k = 0; k < params.size(); ++k) s += (k == 0 ? "" : ", ") + std::to_string(params[k]);
  return s + ")";
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << params_text(r.params) << "  lhs " << r.lhs_terms
      << " terms, rhs " << r.rhs_terms << " terms, " << millis_text(r.millis) << "\n";
  if (!r.pass) {
    out << "  difference";
    if (r.t_power) out << " at t^" << *r.t_power;
    out << ": " << to_string(r.difference) << "\n";
  }
}

struct Operands {
  std::vector<std::string> positional;
  std::vector<std::string> exprs;

  std::vector<FreeElement> elements(std::size_t expected) const {
    std::vector<FreeElement> out;
    for (const auto& s : positional) out.push_back(parse_element(s));
    for (const auto& s : exprs) out.push_back(parse_element(s));
    if (out.size() != expected) {
      throw UsageError("expected " + std::to_string(expected) + " operand(s), got " + std::to_string(out.size()));
    }
    return out;
  }
};

void add_operands(CLI::App* sub, Operands& ops, const std::string& what) {
  sub->add_option("operands", ops.positional, what + " as word literals or elements");
  sub->add_option("--expr", ops.exprs, "Element operand, e.g. \"(1 + q^2)*xxy - xyx\"; may repeat");
}

int emit_element(std::ostream& out, Format f, const FreeElement& v) {
  if (f == Format::Json) {
    out << to_json(v).dump() << "\n";
  } else {
    out << to_string(v) << "\n";
  }
  return kExitOk;
}

int emit_reports(std::ostream& out, Format f, const std::vector<VerificationReport>& reports) {
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  if (f == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << nlohmann::json{{"verdict", pass ? "pass" : "fail"}, {"reports", std::move(arr)}}.dump() << "\n";
  } else {
    for (const auto& r : reports) print_report(out, r);
  }
  return pass ? kExitOk : kExitFailed;
}

int emit_sweep(std::ostream& out, Format f, const SweepResult& s, bool verbose) {
  if (f == Format::Json) {
    out << to_json(s).dump() << "\n";
    return s.pass() ? kExitOk : kExitFailed;
  }
  struct Row {
    std::size_t instances = 0;
    std::size_t passed = 0;
    double millis = 0.0;
    std::string largest;
  };
  std::vector<std::string> ids;
  std::map<std::string, Row> rows;
  for (const auto& r : s.reports) {
    auto [it, fresh] = rows.try_emplace(r.id);
    if (fresh) ids.push_back(r.id);
    Row& row = it->second;
    ++row.instances;
    row.passed += r.pass ? 1 : 0;
    row.millis += r.millis;
    row.largest = params_text(r.params);
  }
  std::size_t id_width = 6;
  for (const auto& id : ids) id_width = std::max(id_width, id.size());
  out << std::left << std::setw(static_cast<int>(id_width)) << "family" << "  " << std::setw(10) << "passed"
      << std::setw(12) << "up to" << "time\n";
  for (const auto& id : ids) {
    const Row& row = rows[id];
    out << std::setw(static_cast<int>(id_width)) << id << "  " << std::setw(10)
        << (std::to_string(row.passed) + "/" + std::to_string(row.instances)) << std::setw(12) << row.largest
        << millis_text(row.millis) << "\n";
  }
  out << std::right;
  std::size_t passed = 0;
  for (const auto& r : s.reports) {
    passed += r.pass ? 1 : 0;
    if (verbose || !r.pass) print_report(out, r);
  }
  for (const auto& c : s.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << "check: " << c.name << "  " << c.cases << " cases, " << millis_text(c.millis)
        << "\n";
    if (!c.pass) out << "  counterexample: " << c.detail << "\n";
  }
  out << "total: " << passed << "/" << s.reports.size() << " instances passed";
  if (!s.checks.empty()) {
    const auto checks_ok = std::count_if(s.checks.begin(), s.checks.end(), [](const auto& c) { return c.pass; });
    out << ", " << checks_ok << "/" << s.checks.size() << " checks passed";
  }
  out << ", " << millis_text(s.millis) << "\n" << (s.pass() ? "PASS" : "FAIL") << "\n";
  return s.pass() ? kExitOk : kExitFailed;
}

Format default_format() {
  const char* env = std::getenv("QSHUFFLE_FORMAT");
  return env != nullptr && std::string_view(env) == "json" ? Format::Json : Format::Text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in the q-shuffle algebra on words in x and y", "qshuffle"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = default_format() == Format::Json ? "json" : "text";
  app.add_option("--format", format_name, "Output format (default from $QSHUFFLE_FORMAT, else text)")
      ->check(CLI::IsMember({"text", "json"}));

  Operands shuffle_ops, mul_ops, comm_ops, trunc_ops;
  auto* shuffle_cmd = app.add_subcommand("shuffle", "q-shuffle product of two operands");
  add_operands(shuffle_cmd, shuffle_ops, "Two operands");

  auto* mul_cmd = app.add_subcommand("free-mul", "Concatenation product of two operands");
  add_operands(mul_cmd, mul_ops, "Two operands");

  int comm_k = 0;
  auto* comm_cmd = app.add_subcommand("commutator", "q^k a*b - q^-k b*a");
  add_operands(comm_cmd, comm_ops, "Two operands");
  comm_cmd->add_option("--k", comm_k, "0, 1 or 2")->check(CLI::IsMember({0, 1, 2}));

  std::vector<std::string> classify_words;
  auto* classify_cmd = app.add_subcommand("classify", "Classify words against the subalgebra generated by x and y");
  classify_cmd->add_option("words", classify_words, "Word literals")->required();

  std::string trunc_side = "left";
  std::string trunc_letter;
  auto* trunc_cmd = app.add_subcommand("truncate", "Strip a letter from one end of every word");
  add_operands(trunc_cmd, trunc_ops, "One operand");
  trunc_cmd->add_option("--side", trunc_side, "left or right")->check(CLI::IsMember({"left", "right"}));
  trunc_cmd->add_option("--letter", trunc_letter, "x or y")->required()->check(CLI::IsMember({"x", "y"}));

  std::string verify_family;
  std::optional<unsigned> verify_max;
  std::vector<unsigned> verify_params;
  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity family");
  verify_cmd->add_option("--family", verify_family, "Family id, see `catalog`")->required();
  auto* max_opt = verify_cmd->add_option("--max", verify_max, "Verify n <= MAX, or i + j <= MAX");
  auto* params_opt = verify_cmd->add_option("--params", verify_params, "One explicit instance, e.g. 2,3")
                         ->delimiter(',')
                         ->expected(0, 2);
  max_opt->excludes(params_opt);

  SweepOptions sweep;
  std::optional<unsigned> sweep_bound;
  std::string sweep_profile = "default";
  bool sweep_no_properties = false;
  bool sweep_verbose = false;
  auto* all_cmd = app.add_subcommand("verify-all", "Verify the whole catalog and run the property checks");
  all_cmd->add_option("--bound", sweep_bound, "Bound for both one- and two-parameter families");
  all_cmd->add_option("--bound1", sweep.bound1, "Largest n for one-parameter families")->capture_default_str();
  all_cmd->add_option("--bound2", sweep.bound2, "Largest i + j for two-parameter families")->capture_default_str();
  all_cmd->add_option("--order", sweep.series_order, "Generating functions through t^ORDER")->capture_default_str();
  all_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  all_cmd->add_option("--profile", sweep_profile, "default, or acceptance for per-group bounds")
      ->check(CLI::IsMember({"default", "acceptance"}));
  all_cmd->add_flag("--no-properties", sweep_no_properties, "Skip the shuffle and classification checks");
  all_cmd->add_flag("--verbose", sweep_verbose, "Print every instance, not just failures");

  std::string series_name;
  std::string series_identity;
  bool series_neg = false;
  unsigned series_order = 8;
  auto* series_cmd = app.add_subcommand("series", "Print a generating function or verify a series identity");
  auto* name_opt = series_cmd->add_option("--name", series_name, "Ghat, G, W- or W+")
                       ->check(CLI::IsMember({"Ghat", "G", "W-", "W+"}));
  auto* ident_opt = series_cmd->add_option("--identity", series_identity, "Series identity id, e.g. S6.1.1");
  series_cmd->add_flag("--neg", series_neg, "Substitute -t for t");
  series_cmd->add_option("--order", series_order, "Truncation order")->capture_default_str();
  name_opt->excludes(ident_opt);

  std::string catalog_group;
  auto* catalog_cmd = app.add_subcommand("catalog", "List identity families");
  catalog_cmd->add_option("--group", catalog_group, "Only families in this group");

  std::vector<const char*> argv{"qshuffle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Format fmt = format_name == "json" ? Format::Json : Format::Text;

  try {
    if (shuffle_cmd->parsed()) {
      auto ops = shuffle_ops.elements(2);
      return emit_element(out, fmt, shuffle(ops[0], ops[1]));
    }
    if (mul_cmd->parsed()) {
      auto ops = mul_ops.elements(2);
      return emit_element(out, fmt, free_mul(ops[0], ops[1]));
    }
    if (comm_cmd->parsed()) {
      auto ops = comm_ops.elements(2);
      return emit_element(out, fmt, commutator_qk(ops[0], ops[1], comm_k));
    }
    if (trunc_cmd->parsed()) {
      auto ops = trunc_ops.elements(1);
      const Side side = trunc_side == "left" ? Side::Left : Side::Right;
      const Letter letter = trunc_letter == "x" ? Letter::X : Letter::Y;
      return emit_element(out, fmt, truncate(side, letter, ops[0]));
    }
    if (classify_cmd->parsed()) {
      nlohmann::json results = nlohmann::json::array();
      for (const auto& text : classify_words) {
        const Word w = Word::parse(text);
        const WordClass c = classify(w);
        if (fmt == Format::Json) {
          results.push_back(to_json(w, c));
        } else if (classify_words.size() == 1) {
          out << c.to_string() << "\n";
        } else {
          out << w.to_string() << ": " << c.to_string() << "\n";
        }
      }
      if (fmt == Format::Json) out << nlohmann::json{{"results", std::move(results)}}.dump() << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const RelationFamily& family = find_family(verify_family);
      if (params_opt->count() > 0 || family.arity == 0) {
        return emit_reports(out, fmt, {verify(family.id, verify_params)});
      }
      if (!verify_max) throw UsageError("verify needs --max or --params for family " + family.id);
      return emit_reports(out, fmt, verify_range(family.id, *verify_max));
    }
    if (all_cmd->parsed()) {
      if (sweep_profile == "acceptance") {
        SweepOptions profile = SweepOptions::acceptance();
        profile.jobs = sweep.jobs;
        profile.series_order = sweep.series_order;
        sweep = std::move(profile);
      }
      if (sweep_bound) {
        sweep.bound1 = *sweep_bound;
        sweep.bound2 = *sweep_bound;
        sweep.group_bounds.clear();
      }
      sweep.properties = !sweep_no_properties;
      return emit_sweep(out, fmt, verify_all(sweep), sweep_verbose);
    }
    if (series_cmd->parsed()) {
      if (!series_identity.empty()) return emit_reports(out, fmt, {verify_series_identity(series_identity, series_order)});
      if (series_name.empty()) throw UsageError("series needs --name or --identity");
      TruncatedSeries s = build_series(*parse_alt_family(series_name), series_order);
      if (series_neg) s = substitute_neg_t(s);
      if (fmt == Format::Json) {
        nlohmann::json j = to_json(s);
        j["name"] = series_name;
        j["negated"] = series_neg;
        out << j.dump() << "\n";
      } else {
        out << to_string(s) << "\n";
      }
      return kExitOk;
    }
    if (catalog_cmd->parsed()) {
      nlohmann::json families = nlohmann::json::array();
      for (const auto& f : list_families()) {
        if (!catalog_group.empty() && f.group != catalog_group) continue;
        if (fmt == Format::Json) {
          families.push_back(to_json(f));
        } else {
          out << f.id << "  [" << f.group << ", " << f.arity << " param" << (f.arity == 1 ? "" : "s") << "]  "
              << f.formula << "\n";
          if (!f.note.empty()) out << "    " << f.note << "\n";
        }
      }
      if (fmt == Format::Json) out << nlohmann::json{{"families", std::move(families)}}.dump() << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qshuffle::cli
