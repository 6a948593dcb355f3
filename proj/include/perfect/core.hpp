#ifndef PERFECT_CORE_HPP
#define PERFECT_CORE_HPP

#include <compare>
#include <vector>

#include "perfect/types.hpp"

namespace perfect {

// Total order on Sigma^n x Z_k: a smaller residue dominates; ties on residue
// are broken by decreasing lexicographic order on the words.
// Returns greater iff a is the greater pair under that order.
std::strong_ordering cmp_succ(const PairNK& a, const PairNK& b, const Params& p);

// <a1..an, u> -> <a2..an a1, u+1 mod k>
PairNK rotate_right(const PairNK& a, const Params& p);
// <a1..an, u> -> <an a1..a_{n-1}, u-1 mod k>
PairNK rotate_left(const PairNK& a, const Params& p);

// All max(n,k) rotations of a, duplicates collapsed.
std::vector<PairNK> rotation_class(const PairNK& a, const Params& p);

// True iff no rotation of a is strictly greater than a (ties allowed).
bool is_maximal(const PairNK& a, const Params& p);

// Shortest prefix of length q with k|q, q|n whose repetition reproduces the
// word. Requires mode k|n and residue 0.
LyndonPair reduce(const PairNK& a, const Params& p);

// The (k/n)-fold repetition of the word. Requires mode n|k and residue 0.
LyndonPair expand(const PairNK& a, const Params& p);

// Successor map on residue-0 pairs: strictly decreasing, undefined on <0^n,0>.
PairNK theta(const PairNK& a, const Params& p);

// Chain predecessor: inverts theta on elements of the chain from <(s-1)^n,0>.
// Undefined on <(s-1)^n,0>; throws NoPredecessorError when no factorization
// exists (possible off-chain in k|n mode).
PairNK theta_preimage(const PairNK& a, const Params& p);

}  // namespace perfect

#endif
