#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braidsig/braid_word.hpp"
#include "braidsig/inertia.hpp"

namespace braidsig {

/// Invariant record of a braid closure.
struct LinkInvariants {
    int b1;
    int c;
    int sigma;
    int nullity;

    friend bool operator==(const LinkInvariants&, const LinkInvariants&) = default;
};

/// Signature of the closure of a positive word: Seifert matrix over the
/// brick basis, symmetrized, exact inertia.
int closure_signature(const BraidWord& word);

/// Full invariant record: b1 and c by the l - b + c count, sigma and
/// nullity through the Seifert pipeline.
LinkInvariants invariants(const BraidWord& word);

/// |sigma(uv) - sigma(u) - sigma(v)| for positive words on equal strands.
/// Bounded by b-1, and by b - max(c(u), c(v)).
int defect(const BraidWord& u, const BraidWord& v);

/// Outcome of deleting, for every generator index in one residue class mod
/// b_target, all occurrences but the leftmost: the reduced word's closure is
/// a connected sum of closures of braids on at most b_target strands.
struct ReductionResult {
    int i;  // residue class in [1, b_target] chosen to maximize b1(reduced)
    BraidWord reduced;
    std::vector<BraidWord> components;  // connected-sum factors, left to right
};

/// Picks i in {1..b_target} maximizing b1 of the reduced word (smallest i on
/// ties); guarantees b1(reduced) >= (b_target-1)/b_target * b1(word).
/// Requires a positive word with c = 1 and 2 <= b_target < strands.
ReductionResult reduction_decompose(const BraidWord& word, int b_target);

/// A generator inserted at `position` (0-based slot in the word the
/// insertion is applied to; the second insertion applies to the 5-letter
/// intermediate word).
struct Insertion {
    int position;
    int generator;

    friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// The three length-6 positive 4-braids reachable by completing a block:
/// Delta = a1 a3 a2 a1 a3 a2, L = a1 a2 a3 a1 a2 a3, R = a3 a2 a1 a3 a2 a1.
enum class BlockTarget { Delta, L, R };

BraidWord block_target_word(BlockTarget t);
const char* block_target_name(BlockTarget t);

/// Result of trying to grow a length-4 positive 4-braid into Delta, L or R
/// by inserting two generators. Adding a generator means choosing any
/// positive spelling of the braid and inserting a letter into it, so the
/// witness spellings are recorded: first_host is braid-equal to the block
/// and receives the first insertion; second_host is braid-equal to that
/// 5-letter result and receives the second one, giving `completed` verbatim.
/// The two blocks braid-equal to a2 a1 a1 a2 or a2 a3 a3 a2 admit no
/// completion and come back with empty optionals.
struct BlockCompletion {
    BraidWord block{4};
    std::optional<std::array<Insertion, 2>> insertions;
    std::optional<BlockTarget> target;
    std::optional<BraidWord> first_host;
    std::optional<BraidWord> second_host;
    std::optional<BraidWord> completed;

    bool exceptional() const { return !insertions.has_value(); }
};

/// Exhaustive search: 15 first-insertion candidates per spelling of the
/// block, 18 second-insertion candidates per spelling of the intermediate,
/// checked by braid equality against the three targets. Requires a positive
/// word of length 4 on 4 strands.
BlockCompletion complete_block(const BraidWord& block);

/// Certificate data for the block-completion signature bound on beta^n.
struct PowerCertificate {
    int k = 0;           // exceptional blocks in the chosen decomposition
    int shift_used = 0;  // cyclic shift (0, 1 or 2) realizing 12k <= nl
    BraidWord tilde_word{4};
    long long measured = 0;  // -sigma(tilde * rotate180(tilde)) via pipeline
    long long rhs = 0;       // 2k + 8(nl/4 - k) - 1
    bool certificate_holds = false;
    long long minus_sigma_power = 0;  // -sigma(beta^n) via pipeline
    Rational bound;                   // 5nl/12 - 2, claimed for -sigma(beta^n)
    bool bound_holds = false;
};

/// Splits beta^n (or the cyclic shift by 1 or 2 with the fewest exceptional
/// blocks) into length-4 blocks, replaces every completable block by its
/// completion target, and measures -sigma of tilde * rotate180(tilde).
/// Requires a positive 4-strand word and a positive n divisible by 4.
PowerCertificate power_certificate(const BraidWord& word, int n);

/// sigma(beta^n)/n with the rigorous enclosure of width 2(b-1)/n around it
/// that must contain the asymptotic signature.
struct AsymptoticEstimate {
    BraidWord word{1};
    int n_used = 1;
    Rational estimate;
    Rational lower;
    Rational upper;
};

AsymptoticEstimate asymptotic_sigma(const BraidWord& word, int n_max);

/// One deduplicated closure class found by enumeration: a representative
/// word (lexicographically smallest cyclically-minimal spelling seen), its
/// length, and the closure invariants.
struct ClassRecord {
    std::string word;
    int length;
    int b1;
    int sigma;
};

/// Enumerates all positive words on b strands with length <= l_max and
/// c = 1, deduplicated by the minimum over cyclic shifts of the normal-form
/// string. Records come back sorted by (length, word); the result does not
/// depend on the number of jobs. jobs <= 0 means all hardware threads.
/// words_checked, when given, receives the raw (pre-dedup) word count.
/// Supported range: 2 <= b <= 5 and l_max <= 14.
std::vector<ClassRecord> enumerate_positive_classes(
    int b, int l_max, int jobs = 0, unsigned long long* words_checked = nullptr,
    bool progress = false);

struct Counterexample {
    std::string word;
    int length;
    int b1;
    int sigma;
};

struct BoundReport {
    int strands;
    int l_max;
    Rational bound;
    bool strict;
    unsigned long long words_checked = 0;
    unsigned long long classes_checked = 0;
    std::vector<Counterexample> counterexamples;

    bool holds() const { return counterexamples.empty(); }
};

/// Checks -sigma > bound * b1 (>= when strict is false) on every enumerated
/// non-trivial class and reports all violators.
BoundReport verify_bound(int b, int l_max, const Rational& bound, bool strict,
                         int jobs = 0, bool progress = false);

}  // namespace braidsig
