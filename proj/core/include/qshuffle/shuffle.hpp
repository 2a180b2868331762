#pragma once

// The q-shuffle product on words in x, y and its bilinear extension.

#include "qshuffle/element.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

/// <x,x> = <y,y> = 2, <x,y> = <y,x> = -2.
constexpr int pairing(Letter a, Letter b) { return a == b ? 2 : -2; }

/// u * v by the left-peeling recursion
///   u * v = u1 ((u2..ur) * v) + v1 (u * (v2..vs)) q^(<v1,u1> + ... + <v1,ur>),
/// evaluated bottom-up over all (suffix of u, suffix of v) pairs.
FreeElement shuffle(const Word& u, const Word& v);
FreeElement shuffle(const FreeElement& u, const FreeElement& v);

/// q^k (a * b) - q^-k (b * a); k = 0 is the plain commutator.
FreeElement commutator_qk(const FreeElement& a, const FreeElement& b, int k);

/// a * a * ... * a with n factors; n = 0 gives the trivial word.
FreeElement star_power(const FreeElement& a, unsigned n);

/// Independent check: sums over all interleavings of u and v, weighting each
/// by q^(sum of <u_i, v_j>) over pairs where v_j is placed before u_i.
/// Shares no code with shuffle().
FreeElement shuffle_oracle(const Word& u, const Word& v);

namespace detail {

/// Left-peeling recursion on FreeElement cells with no length limit;
/// shuffle() switches to it when |u| + |v| > 64.
FreeElement shuffle_general(const Word& u, const Word& v);

/// Right-peeling recursion
///   u * v = (u * (v1..v_{s-1})) vs + ((u1..u_{r-1}) * v) ur q^(<ur,v1> + ... + <ur,vs>),
/// memoized on prefix pairs. Used to cross-check the left-peeling form.
FreeElement shuffle_right_peel(const Word& u, const Word& v);

}  // namespace detail

}  // namespace qshuffle
