#pragma once

#include <string>
#include <vector>

#include "braidsig/braid_word.hpp"

namespace braidsig {

/// A permutation braid (simple element): a positive braid in which every
/// pair of strands crosses at most once, represented by its permutation.
/// perm[i] is the 0-based top position of the strand starting at bottom
/// position i.
using PermutationBraid = std::vector<int>;

/// Garside left normal form Delta^inf · f1 · f2 · ... with each factor a
/// permutation braid that is neither trivial nor Delta, and every adjacent
/// pair left-weighted. Two words represent the same braid iff their normal
/// forms compare equal.
struct NormalForm {
    int strands = 1;
    int inf = 0;
    std::vector<PermutationBraid> factors;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

    /// Canonical one-line serialization "Δ^k | p1 | p2 | ..." with factors
    /// as 1-based one-line permutations; usable as a deduplication key.
    std::string canonical() const;
};

/// The positive half twist on b strands, as the word
/// (a1 a2 ... a_{b-1})(a1 ... a_{b-2}) ... (a1) of length b(b-1)/2.
/// Its square generates the center of the braid group. Requires b >= 2.
BraidWord half_twist(int b);

/// Left-greedy normal form of an arbitrary (signed) word.
NormalForm normal_form(const BraidWord& word);

/// True iff u and v represent the same element of the braid group.
/// Throws on strand mismatch.
bool braid_equal(const BraidWord& u, const BraidWord& v);

/// Minimum of normal_form(cyclic_shift(w,k)).canonical() over all k; a
/// conjugacy-lite key identifying words up to braid relations and cyclic
/// permutation, i.e. constant on closure classes reachable by those moves.
std::string cyclic_canonical_key(const BraidWord& word);

namespace garside_detail {

/// Starting set of a permutation braid: generator indices i (1-based) such
/// that some positive word for it begins with a_i.
std::vector<int> starting_set(const PermutationBraid& p);

/// Finishing set: indices i such that some positive word ends with a_i.
std::vector<int> finishing_set(const PermutationBraid& p);

/// Permutation of the half twist (position reversal).
PermutationBraid delta_perm(int b);

}  // namespace garside_detail

}  // namespace braidsig
