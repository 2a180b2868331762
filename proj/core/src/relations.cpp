#include "qshuffle/relations.hpp"

#include <chrono>
#include <stdexcept>

#include "parallel.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/families.hpp"
#include "qshuffle/series.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle {
namespace {

using E = FreeElement;

Word lit(std::string_view s) { return s.empty() ? Word{} : Word::parse(s); }

/// prefix (block)^n suffix
E da(std::string_view prefix, std::string_view block, unsigned n, std::string_view suffix = "") {
  return E(lit(prefix) + lit(block).power(n) + lit(suffix));
}

E ghat(unsigned k) { return E(alternating(AltFamily::GHat, k)); }
E g(unsigned k) { return E(alternating(AltFamily::G, k)); }
E w(int k) { return E(alternating_w(k)); }

const E kX{Word{Letter::X}};
const E kY{Word{Letter::Y}};

LaurentInt q(int k) { return q_power(k); }
LaurentInt sign(unsigned n) { return n % 2 == 0 ? 1 : -1; }
LaurentInt two_pow(unsigned e) { return pow(q_int(2), e); }

E star(const E& a, const E& b) { return shuffle(a, b); }
E comm(const E& a, const E& b, int k = 0) { return commutator_qk(a, b, k); }

/// sum_{k=0}^{m} (-1)^k term(k)
template <typename Term>
E alt_sum(unsigned m, Term term) {
  E s;
  for (unsigned k = 0; k <= m; ++k) {
    if (k % 2 == 0) {
      s += term(k);
    } else {
      s -= term(k);
    }
  }
  return s;
}

int i(unsigned k) { return static_cast<int>(k); }

class Builder {
 public:
  void add0(std::string id, std::string group, std::string formula, std::function<RelationSides()> fn,
            std::string note = "") {
    push(std::move(id), 0, std::move(group), std::move(formula), std::move(note),
         [fn = std::move(fn)](std::span<const unsigned>) { return fn(); });
  }
  void add1(std::string id, std::string group, std::string formula, std::function<RelationSides(unsigned)> fn,
            std::string note = "") {
    push(std::move(id), 1, std::move(group), std::move(formula), std::move(note),
         [fn = std::move(fn)](std::span<const unsigned> p) { return fn(p[0]); });
  }
  void add2(std::string id, std::string group, std::string formula,
            std::function<RelationSides(unsigned, unsigned)> fn, std::string note = "") {
    push(std::move(id), 2, std::move(group), std::move(formula), std::move(note),
         [fn = std::move(fn)](std::span<const unsigned> p) { return fn(p[0], p[1]); });
  }

  std::vector<RelationFamily> take() { return std::move(families_); }

 private:
  void push(std::string id, unsigned arity, std::string group, std::string formula, std::string note,
            std::function<RelationSides(std::span<const unsigned>)> build) {
    families_.push_back(RelationFamily{std::move(id), arity, std::move(group), std::move(formula),
                                       std::move(note), std::move(build)});
  }

  std::vector<RelationFamily> families_;
};

void add_serre(Builder& b) {
  auto serre = [](const E& a, const E& c) {
    const LaurentInt three = q_int(3);
    auto prod = [](std::initializer_list<const E*> fs) {
      E r = E::one();
      for (const E* f : fs) r = star(r, *f);
      return r;
    };
    E lhs = prod({&a, &a, &a, &c});
    lhs -= three * prod({&a, &a, &c, &a});
    lhs += three * prod({&a, &c, &a, &a});
    lhs -= prod({&c, &a, &a, &a});
    return RelationSides{lhs, E{}};
  };
  b.add0("serre.x", "serre", "x*x*x*y - [3]_q x*x*y*x + [3]_q x*y*x*x - y*x*x*x = 0",
         [=] { return serre(kX, kY); });
  b.add0("serre.y", "serre", "y*y*y*x - [3]_q y*y*x*y + [3]_q y*x*y*y - x*y*y*y = 0",
         [=] { return serre(kY, kX); });
}

void add_letter_commutators(Builder& b) {
  const std::string grp = "letter-commutator";
  const LaurentInt c22 = q(2) - q(-2);
  const LaurentInt c14 = LaurentInt(1) - q(-4);
  const LaurentInt c13 = q(1) - q(-3);
  const LaurentInt c31 = q(3) - q(-1);

  b.add1("P4.xcomm1.1", grp, "[(xxyy)^n, x]_{q^2} = (q^2 - q^-2) (xxyy)^n x", [=](unsigned n) {
    return RelationSides{comm(da("", "xxyy", n), kX, 2), c22 * da("", "xxyy", n, "x")};
  });
  b.add1("P4.xcomm1.2", grp, "[x, (yyxx)^n]_{q^2} = (q^2 - q^-2) x(yyxx)^n", [=](unsigned n) {
    return RelationSides{comm(kX, da("", "yyxx", n), 2), c22 * da("x", "yyxx", n)};
  });
  b.add1("P4.xcomm1.3", grp, "[x, (xxyy)^n xx] = 0", [=](unsigned n) {
    return RelationSides{comm(kX, da("", "xxyy", n, "xx")), E{}};
  });
  b.add1("P4.xcomm1.4", grp, "[(yyxx)^n yy, x] = (1 - q^-4)((yyxx)^n yyx - xyy(xxyy)^n)", [=](unsigned n) {
    return RelationSides{comm(da("", "yyxx", n, "yy"), kX), c14 * (da("", "yyxx", n, "yyx") - da("xyy", "xxyy", n))};
  });

  b.add1("P4.ycomm1.1", grp, "[y, (xxyy)^n]_{q^2} = (q^2 - q^-2) y(xxyy)^n", [=](unsigned n) {
    return RelationSides{comm(kY, da("", "xxyy", n), 2), c22 * da("y", "xxyy", n)};
  });
  b.add1("P4.ycomm1.2", grp, "[(yyxx)^n, y]_{q^2} = (q^2 - q^-2) (yyxx)^n y", [=](unsigned n) {
    return RelationSides{comm(da("", "yyxx", n), kY, 2), c22 * da("", "yyxx", n, "y")};
  });
  b.add1("P4.ycomm1.3", grp, "[y, (xxyy)^n xx] = (1 - q^-4)(yxx(yyxx)^n - (xxyy)^n xxy)", [=](unsigned n) {
    return RelationSides{comm(kY, da("", "xxyy", n, "xx")), c14 * (da("yxx", "yyxx", n) - da("", "xxyy", n, "xxy"))};
  });
  b.add1("P4.ycomm1.4", grp, "[(yyxx)^n yy, y] = 0", [=](unsigned n) {
    return RelationSides{comm(da("", "yyxx", n, "yy"), kY), E{}};
  });

  b.add1("P4.xcomm2.1", grp, "[xyy(xxyy)^n, x]_q = (q - q^-3)(xyy(xxyy)^n x - (xxyy)^(n+1))", [=](unsigned n) {
    return RelationSides{comm(da("xyy", "xxyy", n), kX, 1), c13 * (da("xyy", "xxyy", n, "x") - da("", "xxyy", n + 1))};
  });
  b.add1("P4.xcomm2.2", grp, "[x, yxx(yyxx)^n]_q = 0", [=](unsigned n) {
    return RelationSides{comm(kX, da("yxx", "yyxx", n), 1), E{}};
  });
  b.add1("P4.xcomm2.3", grp, "[x, x(yyxx)^n]_q = (q^3 - q^-1)(xxyy)^n xx", [=](unsigned n) {
    return RelationSides{comm(kX, da("x", "yyxx", n), 1), c31 * da("", "xxyy", n, "xx")};
  });
  b.add1("P4.xcomm2.4", grp, "[y(xxyy)^n, x]_q = (q - q^-3) y(xxyy)^n x", [=](unsigned n) {
    return RelationSides{comm(da("y", "xxyy", n), kX, 1), c13 * da("y", "xxyy", n, "x")};
  });

  // Printed with the arguments transposed; this is the x<->y image of
  // P4.xcomm2.2 and the transposed form fails already at n = 0.
  b.add1("P4.ycomm2.1", grp, "[y, xyy(xxyy)^n]_q = 0", [=](unsigned n) {
    return RelationSides{comm(kY, da("xyy", "xxyy", n), 1), E{}};
  }, "corrected: arguments ordered as [y, xyy(xxyy)^n]_q");
  b.add1("P4.ycomm2.2", grp, "[yxx(yyxx)^n, y]_q = (q - q^-3)(yxx(yyxx)^n y - (yyxx)^(n+1))", [=](unsigned n) {
    return RelationSides{comm(da("yxx", "yyxx", n), kY, 1), c13 * (da("yxx", "yyxx", n, "y") - da("", "yyxx", n + 1))};
  });
  b.add1("P4.ycomm2.3", grp, "[x(yyxx)^n, y]_q = (q - q^-3) x(yyxx)^n y", [=](unsigned n) {
    return RelationSides{comm(da("x", "yyxx", n), kY, 1), c13 * da("x", "yyxx", n, "y")};
  });
  b.add1("P4.ycomm2.4", grp, "[y, y(xxyy)^n]_q = (q^3 - q^-1)(yyxx)^n yy", [=](unsigned n) {
    return RelationSides{comm(kY, da("y", "xxyy", n), 1), c31 * da("", "yyxx", n, "yy")};
  });

  b.add1("P4.xcomm3.1", grp, "[(xxyy)^n xxy, x]_q = 0", [=](unsigned n) {
    return RelationSides{comm(da("", "xxyy", n, "xxy"), kX, 1), E{}};
  });
  b.add1("P4.xcomm3.2", grp, "[x, (yyxx)^n yyx]_q = (q - q^-3)(xyy(xxyy)^n x - (yyxx)^(n+1))", [=](unsigned n) {
    return RelationSides{comm(kX, da("", "yyxx", n, "yyx"), 1), c13 * (da("xyy", "xxyy", n, "x") - da("", "yyxx", n + 1))};
  });
  b.add1("P4.xcomm3.3", grp, "[(xxyy)^n x, x]_q = (q^3 - q^-1)(xxyy)^n xx", [=](unsigned n) {
    return RelationSides{comm(da("", "xxyy", n, "x"), kX, 1), c31 * da("", "xxyy", n, "xx")};
  });
  b.add1("P4.xcomm3.4", grp, "[x, (yyxx)^n y]_q = (q - q^-3) x(yyxx)^n y", [=](unsigned n) {
    return RelationSides{comm(kX, da("", "yyxx", n, "y"), 1), c13 * da("x", "yyxx", n, "y")};
  });

  b.add1("P4.ycomm3.1", grp, "[y, (xxyy)^n xxy]_q = (q - q^-3)(yxx(yyxx)^n y - (xxyy)^(n+1))", [=](unsigned n) {
    return RelationSides{comm(kY, da("", "xxyy", n, "xxy"), 1), c13 * (da("yxx", "yyxx", n, "y") - da("", "xxyy", n + 1))};
  });
  b.add1("P4.ycomm3.2", grp, "[(yyxx)^n yyx, y]_q = 0", [=](unsigned n) {
    return RelationSides{comm(da("", "yyxx", n, "yyx"), kY, 1), E{}};
  });
  b.add1("P4.ycomm3.3", grp, "[y, (xxyy)^n x]_q = (q - q^-3) y(xxyy)^n x", [=](unsigned n) {
    return RelationSides{comm(kY, da("", "xxyy", n, "x"), 1), c13 * da("y", "xxyy", n, "x")};
  });
  b.add1("P4.ycomm3.4", grp, "[(yyxx)^n y, y]_q = (q^3 - q^-1)(yyxx)^n yy", [=](unsigned n) {
    return RelationSides{comm(da("", "yyxx", n, "y"), kY, 1), c31 * da("", "yyxx", n, "yy")};
  });

  b.add1("P4.xcomm4.1", grp, "[x, x(yyxx)^n y] = (q^2 - q^-2)(xxyy)^n xxy", [=](unsigned n) {
    return RelationSides{comm(kX, da("x", "yyxx", n, "y")), c22 * da("", "xxyy", n, "xxy")};
  });
  b.add1("P4.xcomm4.2", grp, "[y(xxyy)^n x, x] = (q^2 - q^-2) yxx(yyxx)^n", [=](unsigned n) {
    return RelationSides{comm(da("y", "xxyy", n, "x"), kX), c22 * da("yxx", "yyxx", n)};
  });
  b.add1("P4.xcomm4.3", grp, "[x, xyy(xxyy)^n x] = (q^2 - q^-2)((xxyy)^(n+1) x - x(yyxx)^(n+1))",
         [=](unsigned n) {
           return RelationSides{comm(kX, da("xyy", "xxyy", n, "x")),
                                c22 * (da("", "xxyy", n + 1, "x") - da("x", "yyxx", n + 1))};
         });
  b.add1("P4.xcomm4.4", grp, "[x, yxx(yyxx)^n y] = 0", [=](unsigned n) {
    return RelationSides{comm(kX, da("yxx", "yyxx", n, "y")), E{}};
  });

  b.add1("P4.ycomm4.1", grp, "[x(yyxx)^n y, y] = (q^2 - q^-2) xyy(xxyy)^n", [=](unsigned n) {
    return RelationSides{comm(da("x", "yyxx", n, "y"), kY), c22 * da("xyy", "xxyy", n)};
  });
  b.add1("P4.ycomm4.2", grp, "[y, y(xxyy)^n x] = (q^2 - q^-2)(yyxx)^n yyx", [=](unsigned n) {
    return RelationSides{comm(kY, da("y", "xxyy", n, "x")), c22 * da("", "yyxx", n, "yyx")};
  });
  b.add1("P4.ycomm4.3", grp, "[xyy(xxyy)^n x, y] = 0", [=](unsigned n) {
    return RelationSides{comm(da("xyy", "xxyy", n, "x"), kY), E{}};
  });
  b.add1("P4.ycomm4.4", grp, "[yxx(yyxx)^n y, y] = (q^2 - q^-2)(y(xxyy)^(n+1) - (yyxx)^(n+1) y)",
         [=](unsigned n) {
           return RelationSides{comm(da("yxx", "yyxx", n, "y"), kY),
                                c22 * (da("y", "xxyy", n + 1) - da("", "yyxx", n + 1, "y"))};
         });
}

// Convolutions of alternating words. Throughout, W(k) is W_k with a signed
// index and GHat_0 = G_0 = 1.
void add_convolutions(Builder& b) {
  const std::string grp = "convolution";

  b.add1("P5.conv1.1", grp, "sum_{k=0}^{2n} (-1)^k Ghat_k * Ghat_{2n-k} = (-1)^n [2]_q^{2n} (xxyy)^n",
         [](unsigned n) {
           return RelationSides{alt_sum(2 * n, [&](unsigned k) { return star(ghat(k), ghat(2 * n - k)); }),
                                sign(n) * two_pow(2 * n) * da("", "xxyy", n)};
         });
  b.add1("P5.conv1.2", grp, "sum_{k=0}^{2n} (-1)^k G_k * G_{2n-k} = (-1)^n [2]_q^{2n} (yyxx)^n", [](unsigned n) {
    return RelationSides{alt_sum(2 * n, [&](unsigned k) { return star(g(k), g(2 * n - k)); }),
                         sign(n) * two_pow(2 * n) * da("", "yyxx", n)};
  });
  b.add1("P5.conv1.3", grp, "sum_{k=0}^{2n} (-1)^k W_{-k} * W_{k-2n} = (-1)^n q [2]_q^{2n+1} (xxyy)^n xx",
         [](unsigned n) {
           return RelationSides{alt_sum(2 * n, [&](unsigned k) { return star(w(-i(k)), w(i(k) - 2 * i(n))); }),
                                sign(n) * q(1) * two_pow(2 * n + 1) * da("", "xxyy", n, "xx")};
         });
  b.add1("P5.conv1.4", grp, "sum_{k=0}^{2n} (-1)^k W_{k+1} * W_{2n+1-k} = (-1)^n q [2]_q^{2n+1} (yyxx)^n yy",
         [](unsigned n) {
           return RelationSides{alt_sum(2 * n, [&](unsigned k) { return star(w(i(k) + 1), w(2 * i(n) + 1 - i(k))); }),
                                sign(n) * q(1) * two_pow(2 * n + 1) * da("", "yyxx", n, "yy")};
         });

  b.add1("P5.conv1odd.1", grp, "sum_{k=0}^{2n+1} (-1)^k Ghat_k * Ghat_{2n+1-k} = 0", [](unsigned n) {
    return RelationSides{alt_sum(2 * n + 1, [&](unsigned k) { return star(ghat(k), ghat(2 * n + 1 - k)); }), E{}};
  });
  b.add1("P5.conv1odd.2", grp, "sum_{k=0}^{2n+1} (-1)^k G_k * G_{2n+1-k} = 0", [](unsigned n) {
    return RelationSides{alt_sum(2 * n + 1, [&](unsigned k) { return star(g(k), g(2 * n + 1 - k)); }), E{}};
  });
  b.add1("P5.conv1odd.3", grp, "sum_{k=0}^{2n+1} (-1)^k W_{-k} * W_{k-2n-1} = 0", [](unsigned n) {
    return RelationSides{
        alt_sum(2 * n + 1, [&](unsigned k) { return star(w(-i(k)), w(i(k) - 2 * i(n) - 1)); }), E{}};
  });
  b.add1("P5.conv1odd.4", grp, "sum_{k=0}^{2n+1} (-1)^k W_{k+1} * W_{2n+2-k} = 0", [](unsigned n) {
    return RelationSides{
        alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) + 1), w(2 * i(n) + 2 - i(k))); }), E{}};
  });

  // Mixed convolutions come as chains  A = closed form = B,  split in two.
  // left(n, m) and right(n, m) are the k-th summands with m = 2n or 2n+1.
  struct Chain {
    std::string id;
    std::string left_text;
    std::string right_text;
    std::string word_text;
    bool odd;
    int left_q;   // sum on the left is multiplied by q^left_q
    int right_q;  // likewise on the right
    std::function<E(unsigned m, unsigned k)> left;
    std::function<E(unsigned m, unsigned k)> right;
    std::function<E(unsigned n)> word;
  };
  auto qtext = [](int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? "q " : "q^" + std::to_string(e) + " ";
  };
  const std::vector<Chain> chains = {
      {"P5.conv3.3", "W_{-k} * Ghat_{2n-k}", "Ghat_{2n-k} * W_{-k}", "(xxyy)^n x", false, 0, 0,
       [](unsigned m, unsigned k) { return star(w(-i(k)), ghat(m - k)); },
       [](unsigned m, unsigned k) { return star(ghat(m - k), w(-i(k))); },
       [](unsigned n) { return da("", "xxyy", n, "x"); }},
      {"P5.conv3.1", "W_{-k} * Ghat_{2n+1-k}", "Ghat_{2n+1-k} * W_{-k}", "(xxyy)^n xxy", true, -1, 1,
       [](unsigned m, unsigned k) { return star(w(-i(k)), ghat(m - k)); },
       [](unsigned m, unsigned k) { return star(ghat(m - k), w(-i(k))); },
       [](unsigned n) { return da("", "xxyy", n, "xxy"); }},
      {"P5.conv2.3", "W_{-k} * G_{2n-k}", "G_{2n-k} * W_{-k}", "x(yyxx)^n", false, 0, 0,
       [](unsigned m, unsigned k) { return star(w(-i(k)), g(m - k)); },
       [](unsigned m, unsigned k) { return star(g(m - k), w(-i(k))); },
       [](unsigned n) { return da("x", "yyxx", n); }},
      {"P5.conv2.2", "W_{-k} * G_{2n+1-k}", "G_{2n+1-k} * W_{-k}", "yxx(yyxx)^n", true, 1, -1,
       [](unsigned m, unsigned k) { return star(w(-i(k)), g(m - k)); },
       [](unsigned m, unsigned k) { return star(g(m - k), w(-i(k))); },
       [](unsigned n) { return da("yxx", "yyxx", n); }},
      {"P5.conv2.4", "W_{k+1} * Ghat_{2n-k}", "Ghat_{2n-k} * W_{k+1}", "y(xxyy)^n", false, 0, 0,
       [](unsigned m, unsigned k) { return star(w(i(k) + 1), ghat(m - k)); },
       [](unsigned m, unsigned k) { return star(ghat(m - k), w(i(k) + 1)); },
       [](unsigned n) { return da("y", "xxyy", n); }},
      {"P5.conv2.1", "W_{k+1} * Ghat_{2n+1-k}", "Ghat_{2n+1-k} * W_{k+1}", "xyy(xxyy)^n", true, 1, -1,
       [](unsigned m, unsigned k) { return star(w(i(k) + 1), ghat(m - k)); },
       [](unsigned m, unsigned k) { return star(ghat(m - k), w(i(k) + 1)); },
       [](unsigned n) { return da("xyy", "xxyy", n); }},
      {"P5.conv3.4", "W_{k+1} * G_{2n-k}", "G_{2n-k} * W_{k+1}", "(yyxx)^n y", false, 0, 0,
       [](unsigned m, unsigned k) { return star(w(i(k) + 1), g(m - k)); },
       [](unsigned m, unsigned k) { return star(g(m - k), w(i(k) + 1)); },
       [](unsigned n) { return da("", "yyxx", n, "y"); }},
      {"P5.conv3.2", "W_{k+1} * G_{2n+1-k}", "G_{2n+1-k} * W_{k+1}", "(yyxx)^n yyx", true, -1, 1,
       [](unsigned m, unsigned k) { return star(w(i(k) + 1), g(m - k)); },
       [](unsigned m, unsigned k) { return star(g(m - k), w(i(k) + 1)); },
       [](unsigned n) { return da("", "yyxx", n, "yyx"); }},
  };
  for (const Chain& c : chains) {
    const std::string upper = c.odd ? "2n+1" : "2n";
    const std::string closed =
        "(-1)^n [2]_q^{" + upper + "} " + c.word_text;
    const std::string left = qtext(c.left_q) + "sum_{k=0}^{" + upper + "} (-1)^k " + c.left_text;
    const std::string right = qtext(c.right_q) + "sum_{k=0}^{" + upper + "} (-1)^k " + c.right_text;
    auto closed_form = [c](unsigned n) {
      return sign(n) * two_pow(c.odd ? 2 * n + 1 : 2 * n) * c.word(n);
    };
    auto left_sum = [c](unsigned n) {
      const unsigned m = c.odd ? 2 * n + 1 : 2 * n;
      return q(c.left_q) * alt_sum(m, [&](unsigned k) { return c.left(m, k); });
    };
    auto right_sum = [c](unsigned n) {
      const unsigned m = c.odd ? 2 * n + 1 : 2 * n;
      return q(c.right_q) * alt_sum(m, [&](unsigned k) { return c.right(m, k); });
    };
    b.add1(c.id + "a", grp, left + " = " + closed,
           [=](unsigned n) { return RelationSides{left_sum(n), closed_form(n)}; });
    b.add1(c.id + "b", grp, closed + " = " + right,
           [=](unsigned n) { return RelationSides{closed_form(n), right_sum(n)}; });
  }

  b.add1("P5.conv4.7", grp,
         "sum_{k=0}^{2n+2} (-1)^k G_k * Ghat_{2n+2-k} = "
         "(-1)^(n+1) [2]_q^{2n+1} (q^-1 xyy(xxyy)^n x + q y(xxyy)^n xxy)",
         [](unsigned n) {
           const unsigned m = 2 * n + 2;
           return RelationSides{alt_sum(m, [&](unsigned k) { return star(g(k), ghat(m - k)); }),
                                sign(n + 1) * two_pow(2 * n + 1) *
                                    (q(-1) * da("xyy", "xxyy", n, "x") + q(1) * da("y", "xxyy", n, "xxy"))};
         });
  b.add1("P5.conv4.8", grp,
         "sum_{k=0}^{2n+2} (-1)^k Ghat_{2n+2-k} * G_k = "
         "(-1)^(n+1) [2]_q^{2n+1} (q xyy(xxyy)^n x + q^-1 y(xxyy)^n xxy)",
         [](unsigned n) {
           const unsigned m = 2 * n + 2;
           return RelationSides{alt_sum(m, [&](unsigned k) { return star(ghat(m - k), g(k)); }),
                                sign(n + 1) * two_pow(2 * n + 1) *
                                    (q(1) * da("xyy", "xxyy", n, "x") + q(-1) * da("y", "xxyy", n, "xxy"))};
         });
  b.add1("P5.conv4.1", grp,
         "sum_{k=0}^{2n+1} (-1)^k G_k * Ghat_{2n+1-k} = (-1)^n [2]_q^{2n} (x(yyxx)^n y - y(xxyy)^n x)",
         [](unsigned n) {
           const unsigned m = 2 * n + 1;
           return RelationSides{alt_sum(m, [&](unsigned k) { return star(g(k), ghat(m - k)); }),
                                sign(n) * two_pow(2 * n) * (da("x", "yyxx", n, "y") - da("y", "xxyy", n, "x"))};
         });
  b.add1("P5.conv4.2", grp,
         "sum_{k=0}^{2n+1} (-1)^k Ghat_{2n+1-k} * G_k = (-1)^n [2]_q^{2n} (x(yyxx)^n y - y(xxyy)^n x)",
         [](unsigned n) {
           const unsigned m = 2 * n + 1;
           return RelationSides{alt_sum(m, [&](unsigned k) { return star(ghat(m - k), g(k)); }),
                                sign(n) * two_pow(2 * n) * (da("x", "yyxx", n, "y") - da("y", "xxyy", n, "x"))};
         });
  b.add1("P5.conv4.3", grp,
         "sum_{k=0}^{2n} (-1)^k W_{k+1} * W_{k-2n} = (-1)^n [2]_q^{2n} (q^-2 x(yyxx)^n y + y(xxyy)^n x)",
         [](unsigned n) {
           return RelationSides{alt_sum(2 * n, [&](unsigned k) { return star(w(i(k) + 1), w(i(k) - 2 * i(n))); }),
                                sign(n) * two_pow(2 * n) * (q(-2) * da("x", "yyxx", n, "y") + da("y", "xxyy", n, "x"))};
         });
  b.add1("P5.conv4.4", grp,
         "sum_{k=0}^{2n} (-1)^k W_{k-2n} * W_{k+1} = (-1)^n [2]_q^{2n} (x(yyxx)^n y + q^-2 y(xxyy)^n x)",
         [](unsigned n) {
           return RelationSides{alt_sum(2 * n, [&](unsigned k) { return star(w(i(k) - 2 * i(n)), w(i(k) + 1)); }),
                                sign(n) * two_pow(2 * n) * (da("x", "yyxx", n, "y") + q(-2) * da("y", "xxyy", n, "x"))};
         });
  b.add1("P5.conv4.5", grp,
         "sum_{k=0}^{2n+1} (-1)^k W_{k+1} * W_{k-2n-1} = "
         "(-1)^n q^-1 [2]_q^{2n+1} (xyy(xxyy)^n x - yxx(yyxx)^n y)",
         [](unsigned n) {
           return RelationSides{
               alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) + 1), w(i(k) - 2 * i(n) - 1)); }),
               sign(n) * q(-1) * two_pow(2 * n + 1) * (da("xyy", "xxyy", n, "x") - da("yxx", "yyxx", n, "y"))};
         });
  b.add1("P5.conv4.6", grp,
         "sum_{k=0}^{2n+1} (-1)^k W_{k-2n-1} * W_{k+1} = "
         "(-1)^n q^-1 [2]_q^{2n+1} (xyy(xxyy)^n x - yxx(yyxx)^n y)",
         [](unsigned n) {
           return RelationSides{
               alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) - 2 * i(n) - 1), w(i(k) + 1)); }),
               sign(n) * q(-1) * two_pow(2 * n + 1) * (da("xyy", "xxyy", n, "x") - da("yxx", "yyxx", n, "y"))};
         });
}

// Corollaries solving for the fourth line of doubly alternating words.
// Stored multiplied through by the inverted scalar.
void add_corollaries(Builder& b) {
  const std::string grp = "convolution-corollary";
  const LaurentInt one_minus_qm2 = LaurentInt(1) - q(-2);
  const LaurentInt q_minus_qinv = q(1) - q(-1);
  const LaurentInt q2_minus_1 = q(2) - LaurentInt(1);

  auto ww_q = [](unsigned n) {
    return alt_sum(2 * n, [&](unsigned k) { return comm(w(i(k) - 2 * i(n)), w(i(k) + 1), 1); });
  };
  auto ww_q_swapped = [](unsigned n) {
    return alt_sum(2 * n, [&](unsigned k) { return comm(w(i(k) + 1), w(i(k) - 2 * i(n)), 1); });
  };
  auto ww_plain = [](unsigned n) {
    return alt_sum(2 * n, [&](unsigned k) { return comm(w(i(k) - 2 * i(n)), w(i(k) + 1)); });
  };
  auto gg_q = [](unsigned n) {
    const unsigned m = 2 * n + 2;
    return alt_sum(m, [&](unsigned k) { return comm(ghat(m - k), g(k), 1); });
  };
  auto gg_q_swapped = [](unsigned n) {
    const unsigned m = 2 * n + 2;
    return alt_sum(m, [&](unsigned k) { return comm(g(k), ghat(m - k), 1); });
  };
  auto gg_plain = [](unsigned n) {
    const unsigned m = 2 * n + 2;
    return alt_sum(m, [&](unsigned k) { return comm(g(k), ghat(m - k)); });
  };

  const std::string cleared_12 = "cleared: both sides multiplied by (1 - q^-2)";
  const std::string cleared_qq = "cleared: both sides multiplied by (q - q^-1)";
  const std::string cleared_q21 = "cleared: both sides multiplied by (q^2 - 1)";

  b.add1("P5.cor1.1", grp,
         "(-1)^n [2]_q^{2n+1} x(yyxx)^n y = (1 - q^-2)^-1 sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}]_q",
         [=](unsigned n) {
           return RelationSides{one_minus_qm2 * sign(n) * two_pow(2 * n + 1) * da("x", "yyxx", n, "y"), ww_q(n)};
         },
         cleared_12);
  b.add1("P5.cor1.2", grp,
         "(-1)^n [2]_q^{2n+1} y(xxyy)^n x = (1 - q^-2)^-1 sum_{k=0}^{2n} (-1)^k [W_{k+1}, W_{k-2n}]_q",
         [=](unsigned n) {
           return RelationSides{one_minus_qm2 * sign(n) * two_pow(2 * n + 1) * da("y", "xxyy", n, "x"),
                                ww_q_swapped(n)};
         },
         cleared_12);
  b.add1("P5.cor1.3a", grp,
         "sum_{k=0}^{2n+1} (-1)^k G_k * Ghat_{2n+1-k} = (1 - q^-2)^-1 sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}]",
         [=](unsigned n) {
           const unsigned m = 2 * n + 1;
           return RelationSides{one_minus_qm2 * alt_sum(m, [&](unsigned k) { return star(g(k), ghat(m - k)); }),
                                ww_plain(n)};
         },
         cleared_12);
  b.add1("P5.cor1.3b", grp,
         "(1 - q^-2)^-1 sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}] = sum_{k=0}^{2n+1} (-1)^k Ghat_{2n+1-k} * G_k",
         [=](unsigned n) {
           const unsigned m = 2 * n + 1;
           return RelationSides{ww_plain(n),
                                one_minus_qm2 * alt_sum(m, [&](unsigned k) { return star(ghat(m - k), g(k)); })};
         },
         cleared_12);

  b.add1("P5.cor2.1", grp,
         "(-1)^(n+1) [2]_q^{2n+2} xyy(xxyy)^n x = (q - q^-1)^-1 sum_{k=0}^{2n+2} (-1)^k [Ghat_{2n+2-k}, G_k]_q",
         [=](unsigned n) {
           return RelationSides{q_minus_qinv * sign(n + 1) * two_pow(2 * n + 2) * da("xyy", "xxyy", n, "x"),
                                gg_q(n)};
         },
         cleared_qq);
  b.add1("P5.cor2.2", grp,
         "(-1)^(n+1) [2]_q^{2n+2} yxx(yyxx)^n y = (q - q^-1)^-1 sum_{k=0}^{2n+2} (-1)^k [G_k, Ghat_{2n+2-k}]_q",
         [=](unsigned n) {
           return RelationSides{q_minus_qinv * sign(n + 1) * two_pow(2 * n + 2) * da("yxx", "yyxx", n, "y"),
                                gg_q_swapped(n)};
         },
         cleared_qq);
  b.add1("P5.cor2.3a", grp,
         "sum_{k=0}^{2n+1} (-1)^k W_{k+1} * W_{k-2n-1} = (q^2 - 1)^-1 sum_{k=0}^{2n+2} (-1)^k [G_k, Ghat_{2n+2-k}]",
         [=](unsigned n) {
           return RelationSides{
               q2_minus_1 * alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) + 1), w(i(k) - 2 * i(n) - 1)); }),
               gg_plain(n)};
         },
         cleared_q21);
  b.add1("P5.cor2.3b", grp,
         "(q^2 - 1)^-1 sum_{k=0}^{2n+2} (-1)^k [G_k, Ghat_{2n+2-k}] = sum_{k=0}^{2n+1} (-1)^k W_{k-2n-1} * W_{k+1}",
         [=](unsigned n) {
           return RelationSides{
               gg_plain(n),
               q2_minus_1 * alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) - 2 * i(n) - 1), w(i(k) + 1)); })};
         },
         cleared_q21);
}

void add_generating_functions(Builder& b) {
  for (const SeriesIdentity& s : series_identities()) {
    const std::string id = s.id;
    b.add1(id, "generating-function", s.formula + "  [parameter: power of t]",
           [id](unsigned m) {
             const SeriesIdentity& ident = find_series_identity(id);
             return RelationSides{ident.lhs(m)[m], ident.rhs_coefficient(m)};
           },
           s.note);
  }
}

// Known relations among alternating words.
void add_alternating_relations(Builder& b) {
  const std::string grp = "alternating";
  b.add2("A.1a", grp, "[W_{-i}, W_{-j}] = 0", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(-i(a)), w(-i(c))), E{}};
  });
  b.add2("A.1b", grp, "[W_{i+1}, W_{j+1}] = 0", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(i(a) + 1), w(i(c) + 1)), E{}};
  });
  b.add2("A.2a", grp, "[G_{i+1}, G_{j+1}] = 0", [](unsigned a, unsigned c) {
    return RelationSides{comm(g(a + 1), g(c + 1)), E{}};
  });
  b.add2("A.2b", grp, "[Ghat_{i+1}, Ghat_{j+1}] = 0", [](unsigned a, unsigned c) {
    return RelationSides{comm(ghat(a + 1), ghat(c + 1)), E{}};
  });
  b.add2("A.3", grp, "[W_{-i}, W_{j+1}] = [W_{-j}, W_{i+1}]", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(-i(a)), w(i(c) + 1)), comm(w(-i(c)), w(i(a) + 1))};
  });
  b.add2("A.4", grp, "[W_{-i}, G_{j+1}] = [W_{-j}, G_{i+1}]", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(-i(a)), g(c + 1)), comm(w(-i(c)), g(a + 1))};
  });
  b.add2("A.5", grp, "[W_{-i}, Ghat_{j+1}] = [W_{-j}, Ghat_{i+1}]", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(-i(a)), ghat(c + 1)), comm(w(-i(c)), ghat(a + 1))};
  });
  b.add2("A.6", grp, "[W_{i+1}, G_{j+1}] = [W_{j+1}, G_{i+1}]", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(i(a) + 1), g(c + 1)), comm(w(i(c) + 1), g(a + 1))};
  });
  b.add2("A.7", grp, "[W_{i+1}, Ghat_{j+1}] = [W_{j+1}, Ghat_{i+1}]", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(i(a) + 1), ghat(c + 1)), comm(w(i(c) + 1), ghat(a + 1))};
  });
  b.add2("A.8", grp, "[G_{i+1}, Ghat_{j+1}] = [G_{j+1}, Ghat_{i+1}]", [](unsigned a, unsigned c) {
    return RelationSides{comm(g(a + 1), ghat(c + 1)), comm(g(c + 1), ghat(a + 1))};
  });
  b.add2("A.9a", grp, "[W_{-i}, G_j]_q = [W_{-j}, G_i]_q", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(-i(a)), g(c), 1), comm(w(-i(c)), g(a), 1)};
  });
  b.add2("A.9b", grp, "[G_i, W_{j+1}]_q = [G_j, W_{i+1}]_q", [](unsigned a, unsigned c) {
    return RelationSides{comm(g(a), w(i(c) + 1), 1), comm(g(c), w(i(a) + 1), 1)};
  });
  b.add2("A.10a", grp, "[Ghat_i, W_{-j}]_q = [Ghat_j, W_{-i}]_q", [](unsigned a, unsigned c) {
    return RelationSides{comm(ghat(a), w(-i(c)), 1), comm(ghat(c), w(-i(a)), 1)};
  });
  b.add2("A.10b", grp, "[W_{i+1}, Ghat_j]_q = [W_{j+1}, Ghat_i]_q", [](unsigned a, unsigned c) {
    return RelationSides{comm(w(i(a) + 1), ghat(c), 1), comm(w(i(c) + 1), ghat(a), 1)};
  });
  b.add2("A.11", grp, "[G_i, Ghat_{j+1}] - [G_j, Ghat_{i+1}] = q [W_{-j}, W_{i+1}]_q - q [W_{-i}, W_{j+1}]_q",
         [](unsigned a, unsigned c) {
           return RelationSides{comm(g(a), ghat(c + 1)) - comm(g(c), ghat(a + 1)),
                                q(1) * (comm(w(-i(c)), w(i(a) + 1), 1) - comm(w(-i(a)), w(i(c) + 1), 1))};
         });
  b.add2("A.12", grp, "[Ghat_i, G_{j+1}] - [Ghat_j, G_{i+1}] = q [W_{j+1}, W_{-i}]_q - q [W_{i+1}, W_{-j}]_q",
         [](unsigned a, unsigned c) {
           return RelationSides{comm(ghat(a), g(c + 1)) - comm(ghat(c), g(a + 1)),
                                q(1) * (comm(w(i(c) + 1), w(-i(a)), 1) - comm(w(i(a) + 1), w(-i(c)), 1))};
         });
  b.add2("A.13", grp,
         "[G_{i+1}, Ghat_{j+1}]_q - [G_{j+1}, Ghat_{i+1}]_q = q [W_{-j}, W_{i+2}] - q [W_{-i}, W_{j+2}]",
         [](unsigned a, unsigned c) {
           return RelationSides{comm(g(a + 1), ghat(c + 1), 1) - comm(g(c + 1), ghat(a + 1), 1),
                                q(1) * (comm(w(-i(c)), w(i(a) + 2)) - comm(w(-i(a)), w(i(c) + 2)))};
         });
  b.add2("A.14", grp,
         "[Ghat_{i+1}, G_{j+1}]_q - [Ghat_{j+1}, G_{i+1}]_q = q [W_{j+1}, W_{-i-1}] - q [W_{i+1}, W_{-j-1}]",
         [](unsigned a, unsigned c) {
           return RelationSides{comm(ghat(a + 1), g(c + 1), 1) - comm(ghat(c + 1), g(a + 1), 1),
                                q(1) * (comm(w(i(c) + 1), w(-i(a) - 1)) - comm(w(i(a) + 1), w(-i(c) - 1)))};
         });
}

// Commutators between two doubly alternating words.
void add_doubly_commutators(Builder& b) {
  const std::string grp = "doubly-commutator";
  // A word shape p (block)^(n + shift) s, written as text for the formula.
  struct Shape {
    std::string_view prefix;
    std::string_view block;
    unsigned shift;
    std::string_view suffix;

    E at(unsigned n) const { return da(prefix, block, n + shift, suffix); }
    std::string text(char var) const {
      std::string s(prefix);
      s += "(" + std::string(block) + ")^";
      s += shift == 0 ? std::string(1, var) : "(" + std::string(1, var) + "+" + std::to_string(shift) + ")";
      if (!suffix.empty()) s += " " + std::string(suffix);
      return s;
    }
  };
  auto bracket = [](const std::string& a, const std::string& c, int k) {
    std::string s = "[" + a + ", " + c + "]";
    if (k == 1) s += "_q";
    if (k == 2) s += "_{q^2}";
    return s;
  };
  // [A_i, A_j]_k = 0
  auto vanishing = [&](std::string id, Shape a) {
    b.add2(std::move(id), grp, bracket(a.text('i'), a.text('j'), 0) + " = 0", [a](unsigned p, unsigned r) {
      return RelationSides{comm(a.at(p), a.at(r)), E{}};
    });
  };
  // [A_i, B_j]_k = [A_j, B_i]_k
  auto symmetric = [&](std::string id, Shape a, Shape c, int k) {
    b.add2(std::move(id), grp,
           bracket(a.text('i'), c.text('j'), k) + " = " + bracket(a.text('j'), c.text('i'), k),
           [a, c, k](unsigned p, unsigned r) {
             return RelationSides{comm(a.at(p), c.at(r), k), comm(a.at(r), c.at(p), k)};
           });
  };

  vanishing("B.1.1", {"", "xxyy", 0, ""});
  vanishing("B.1.2", {"", "yyxx", 0, ""});
  vanishing("B.1.3", {"", "xxyy", 0, "xx"});
  vanishing("B.1.4", {"", "yyxx", 0, "yy"});

  symmetric("B.2.1", {"", "xxyy", 0, "xxy"}, {"", "xxyy", 1, ""}, 0);
  symmetric("B.2.2", {"xyy", "xxyy", 0, ""}, {"", "xxyy", 1, ""}, 0);
  symmetric("B.2.3", {"", "yyxx", 0, "yyx"}, {"", "yyxx", 1, ""}, 0);
  symmetric("B.2.4", {"yxx", "yyxx", 0, ""}, {"", "yyxx", 1, ""}, 0);

  symmetric("B.3.1", {"", "xxyy", 0, "x"}, {"", "xxyy", 1, ""}, 0);
  symmetric("B.3.2", {"y", "xxyy", 0, ""}, {"", "xxyy", 1, ""}, 0);
  symmetric("B.3.3", {"", "yyxx", 0, "y"}, {"", "yyxx", 1, ""}, 0);
  symmetric("B.3.4", {"x", "yyxx", 0, ""}, {"", "yyxx", 1, ""}, 0);

  symmetric("B.4.1", {"", "xxyy", 0, "xx"}, {"", "xxyy", 0, "xxy"}, 0);
  symmetric("B.4.2", {"", "yyxx", 0, "yy"}, {"xyy", "xxyy", 0, ""}, 0);
  symmetric("B.4.3", {"", "yyxx", 0, "yy"}, {"", "yyxx", 0, "yyx"}, 0);
  symmetric("B.4.4", {"", "xxyy", 0, "xx"}, {"yxx", "yyxx", 0, ""}, 0);

  symmetric("B.5.1", {"", "xxyy", 0, "x"}, {"", "xxyy", 0, "xxy"}, 1);
  symmetric("B.5.2", {"xyy", "xxyy", 0, ""}, {"y", "xxyy", 0, ""}, 1);
  symmetric("B.5.3", {"", "yyxx", 0, "y"}, {"", "yyxx", 0, "yyx"}, 1);
  symmetric("B.5.4", {"yxx", "yyxx", 0, ""}, {"x", "yyxx", 0, ""}, 1);

  symmetric("B.6.1", {"", "xxyy", 0, ""}, {"", "xxyy", 0, "xxy"}, 2);
  symmetric("B.6.2", {"xyy", "xxyy", 0, ""}, {"", "xxyy", 0, ""}, 2);
  symmetric("B.6.3", {"", "yyxx", 0, ""}, {"", "yyxx", 0, "yyx"}, 2);
  symmetric("B.6.4", {"yxx", "yyxx", 0, ""}, {"", "yyxx", 0, ""}, 2);

  symmetric("B.7.1", {"", "xxyy", 0, "x"}, {"", "xxyy", 0, "xx"}, 2);
  symmetric("B.7.2", {"", "xxyy", 0, "xx"}, {"x", "yyxx", 0, ""}, 2);
  symmetric("B.7.3", {"", "yyxx", 0, "y"}, {"", "yyxx", 0, "yy"}, 2);
  symmetric("B.7.4", {"", "yyxx", 0, "yy"}, {"y", "xxyy", 0, ""}, 2);

  symmetric("B.8.1", {"", "xxyy", 0, "xxy"}, {"", "xxyy", 1, "xx"}, 2);
  symmetric("B.8.2", {"", "xxyy", 1, "xx"}, {"yxx", "yyxx", 0, ""}, 2);
  symmetric("B.8.3", {"", "yyxx", 0, "yyx"}, {"", "yyxx", 1, "yy"}, 2);
  symmetric("B.8.4", {"", "yyxx", 1, "yy"}, {"xyy", "xxyy", 0, ""}, 2);

  symmetric("B.9.1", {"", "xxyy", 0, ""}, {"", "xxyy", 0, "x"}, 2);
  symmetric("B.9.2", {"x", "yyxx", 0, ""}, {"", "yyxx", 0, ""}, 2);
  symmetric("B.9.3", {"", "yyxx", 0, ""}, {"", "yyxx", 0, "y"}, 2);
  symmetric("B.9.4", {"y", "xxyy", 0, ""}, {"", "xxyy", 0, ""}, 2);

  symmetric("B.10.1", {"", "xxyy", 0, "xxy"}, {"", "xxyy", 1, "x"}, 1);
  symmetric("B.10.2", {"x", "yyxx", 1, ""}, {"yxx", "yyxx", 0, ""}, 1);
  symmetric("B.10.3", {"", "yyxx", 0, "yyx"}, {"", "yyxx", 1, "y"}, 1);
  symmetric("B.10.4", {"y", "xxyy", 1, ""}, {"xyy", "xxyy", 0, ""}, 1);

  symmetric("B.11.1", {"", "xxyy", 0, "xx"}, {"", "xxyy", 1, "x"}, 0);
  symmetric("B.11.2", {"x", "yyxx", 1, ""}, {"xx", "yyxx", 0, ""}, 0);
  symmetric("B.11.3", {"", "yyxx", 0, "yy"}, {"", "yyxx", 1, "y"}, 0);
  symmetric("B.11.4", {"y", "xxyy", 1, ""}, {"yy", "xxyy", 0, ""}, 0);
}

// Alternative forms of the mixed convolutions, stated without doubly
// alternating words.
void add_alternative_forms(Builder& b) {
  const std::string grp = "alternative-form";
  struct Pair {
    std::string id;
    std::string left_text;
    std::string right_text;
    int odd_left_q;
    std::function<E(unsigned m, unsigned k)> left;
    std::function<E(unsigned m, unsigned k)> right;
  };
  const std::vector<Pair> pairs = {
      {"C.1", "W_{-k} * Ghat_{m-k}", "Ghat_{m-k} * W_{-k}", -1,
       [](unsigned m, unsigned k) { return star(w(-i(k)), ghat(m - k)); },
       [](unsigned m, unsigned k) { return star(ghat(m - k), w(-i(k))); }},
      {"C.2", "W_{-k} * G_{m-k}", "G_{m-k} * W_{-k}", 1,
       [](unsigned m, unsigned k) { return star(w(-i(k)), g(m - k)); },
       [](unsigned m, unsigned k) { return star(g(m - k), w(-i(k))); }},
      {"C.3", "W_{k+1} * Ghat_{m-k}", "Ghat_{m-k} * W_{k+1}", 1,
       [](unsigned m, unsigned k) { return star(w(i(k) + 1), ghat(m - k)); },
       [](unsigned m, unsigned k) { return star(ghat(m - k), w(i(k) + 1)); }},
      {"C.4", "W_{k+1} * G_{m-k}", "G_{m-k} * W_{k+1}", -1,
       [](unsigned m, unsigned k) { return star(w(i(k) + 1), g(m - k)); },
       [](unsigned m, unsigned k) { return star(g(m - k), w(i(k) + 1)); }},
  };
  for (const Pair& p : pairs) {
    auto sum = [](const std::function<E(unsigned, unsigned)>& f, unsigned m) {
      return alt_sum(m, [&](unsigned k) { return f(m, k); });
    };
    b.add1(p.id + "a", grp,
           "sum_{k=0}^{2n} (-1)^k " + p.left_text + " = sum_{k=0}^{2n} (-1)^k " + p.right_text + "  [m = 2n]",
           [p, sum](unsigned n) { return RelationSides{sum(p.left, 2 * n), sum(p.right, 2 * n)}; });
    const std::string lq = p.odd_left_q == 1 ? "q " : "q^-1 ";
    const std::string rq = p.odd_left_q == 1 ? "q^-1 " : "q ";
    b.add1(p.id + "b", grp,
           lq + "sum_{k=0}^{2n+1} (-1)^k " + p.left_text + " = " + rq + "sum_{k=0}^{2n+1} (-1)^k " + p.right_text +
               "  [m = 2n+1]",
           [p, sum](unsigned n) {
             return RelationSides{q(p.odd_left_q) * sum(p.left, 2 * n + 1), q(-p.odd_left_q) * sum(p.right, 2 * n + 1)};
           });
  }

  const LaurentInt one_minus_qm2 = LaurentInt(1) - q(-2);
  const LaurentInt q2_minus_1 = q(2) - LaurentInt(1);
  auto gghat = [](unsigned n) {
    const unsigned m = 2 * n + 1;
    return alt_sum(m, [&](unsigned k) { return star(g(k), ghat(m - k)); });
  };
  auto ghatg = [](unsigned n) {
    const unsigned m = 2 * n + 1;
    return alt_sum(m, [&](unsigned k) { return star(ghat(m - k), g(k)); });
  };
  auto ww = [](unsigned n) {
    return alt_sum(2 * n, [&](unsigned k) { return comm(w(i(k) - 2 * i(n)), w(i(k) + 1)); });
  };
  b.add1("C.5", grp,
         "sum_{k=0}^{2n+1} (-1)^k G_k * Ghat_{2n+1-k} = (1 - q^-2)^-1 sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}]",
         [=](unsigned n) { return RelationSides{one_minus_qm2 * gghat(n), ww(n)}; },
         "cleared: both sides multiplied by (1 - q^-2)");
  b.add1("C.5b", grp,
         "(1 - q^-2)^-1 sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}] = sum_{k=0}^{2n+1} (-1)^k Ghat_{2n+1-k} * G_k",
         [=](unsigned n) { return RelationSides{ww(n), one_minus_qm2 * ghatg(n)}; },
         "cleared: both sides multiplied by (1 - q^-2)");

  auto wpwm = [](unsigned n) {
    return alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) + 1), w(i(k) - 2 * i(n) - 1)); });
  };
  auto wmwp = [](unsigned n) {
    return alt_sum(2 * n + 1, [&](unsigned k) { return star(w(i(k) - 2 * i(n) - 1), w(i(k) + 1)); });
  };
  auto gg = [](unsigned n) {
    const unsigned m = 2 * n + 2;
    return alt_sum(m, [&](unsigned k) { return comm(g(k), ghat(m - k)); });
  };
  b.add1("C.6", grp,
         "sum_{k=0}^{2n+1} (-1)^k W_{k+1} * W_{k-2n-1} = (q^2 - 1)^-1 sum_{k=0}^{2n+2} (-1)^k [G_k, Ghat_{2n+2-k}]",
         [=](unsigned n) { return RelationSides{q2_minus_1 * wpwm(n), gg(n)}; },
         "cleared: both sides multiplied by (q^2 - 1)");
  b.add1("C.6b", grp,
         "(q^2 - 1)^-1 sum_{k=0}^{2n+2} (-1)^k [G_k, Ghat_{2n+2-k}] = sum_{k=0}^{2n+1} (-1)^k W_{k-2n-1} * W_{k+1}",
         [=](unsigned n) { return RelationSides{gg(n), q2_minus_1 * wmwp(n)}; },
         "cleared: both sides multiplied by (q^2 - 1)");
}

std::vector<RelationFamily> build_catalog() {
  Builder b;
  add_serre(b);
  add_letter_commutators(b);
  add_convolutions(b);
  add_corollaries(b);
  add_generating_functions(b);
  add_alternating_relations(b);
  add_doubly_commutators(b);
  add_alternative_forms(b);
  return b.take();
}

}  // namespace

const std::vector<RelationFamily>& list_families() {
  static const std::vector<RelationFamily> catalog = build_catalog();
  return catalog;
}

const RelationFamily& find_family(std::string_view id) {
  for (const auto& f : list_families())
    if (f.id == id) return f;
  throw UnknownIdentity(std::string(id));
}

RelationSides instantiate(std::string_view id, std::span<const unsigned> params) {
  const RelationFamily& family = find_family(id);
  if (params.size() != family.arity) {
    throw std::invalid_argument("family '" + family.id + "' takes " + std::to_string(family.arity) +
                                " parameter(s), got " + std::to_string(params.size()));
  }
  return family.build(params);
}

VerificationReport verify(std::string_view id, std::span<const unsigned> params) {
  const auto start = std::chrono::steady_clock::now();
  RelationSides sides = instantiate(id, params);
  VerificationReport report;
  report.id = std::string(id);
  report.params.assign(params.begin(), params.end());
  report.lhs_terms = sides.lhs.size();
  report.rhs_terms = sides.rhs.size();
  report.difference = std::move(sides.lhs);
  report.difference -= sides.rhs;
  report.pass = report.difference.is_zero();
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::vector<unsigned>> parameter_range(unsigned arity, unsigned bound) {
  std::vector<std::vector<unsigned>> out;
  switch (arity) {
    case 0:
      out.emplace_back();
      break;
    case 1:
      for (unsigned n = 0; n <= bound; ++n) out.push_back({n});
      break;
    case 2:
      for (unsigned a = 0; a <= bound; ++a)
        for (unsigned c = 0; a + c <= bound; ++c) out.push_back({a, c});
      break;
    default:
      throw std::invalid_argument("unsupported arity " + std::to_string(arity));
  }
  return out;
}

std::vector<VerificationReport> verify_range(std::string_view id, unsigned bound, unsigned jobs) {
  const RelationFamily& family = find_family(id);
  const auto params = parameter_range(family.arity, bound);
  return detail::parallel_map<VerificationReport>(params.size(), jobs,
                                                  [&](std::size_t k) { return verify(family.id, params[k]); });
}

}  // namespace qshuffle
