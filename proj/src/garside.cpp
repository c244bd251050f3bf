#include "braidsig/garside.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidsig {

namespace garside_detail {

PermutationBraid delta_perm(int b) {
    PermutationBraid p(b);
    for (int i = 0; i < b; ++i) p[i] = b - 1 - i;
    return p;
}

std::vector<int> starting_set(const PermutationBraid& p) {
    std::vector<int> out;
    for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i)
        if (p[i] > p[i + 1]) out.push_back(i + 1);
    return out;
}

std::vector<int> finishing_set(const PermutationBraid& p) {
    PermutationBraid inv(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
    return starting_set(inv);
}

}  // namespace garside_detail

namespace {

using garside_detail::delta_perm;

PermutationBraid identity_perm(int b) {
    PermutationBraid p(b);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(const PermutationBraid& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

// Conjugation by Delta: tau(p) = w0 ∘ p ∘ w0.
PermutationBraid tau(const PermutationBraid& p) {
    const int b = static_cast<int>(p.size());
    PermutationBraid out(b);
    for (int i = 0; i < b; ++i) out[i] = b - 1 - p[b - 1 - i];
    return out;
}

// First index in the starting set of B that is not in the finishing set of
// A, or 0 if the pair (A, B) is already left-weighted. Indices are 1-based.
int first_slidable(const PermutationBraid& a, const PermutationBraid& b) {
    const int n = static_cast<int>(a.size());
    PermutationBraid ainv(n);
    for (int i = 0; i < n; ++i) ainv[a[i]] = i;
    for (int i = 0; i + 1 < n; ++i) {
        if (b[i] > b[i + 1] && ainv[i] < ainv[i + 1]) return i + 1;
    }
    return 0;
}

// Moves the crossing a_i from the front of B onto the back of A:
// A <- A·a_i, B <- a_i^{-1}·B. Requires i in S(B) \ F(A).
void slide(PermutationBraid& a, PermutationBraid& b, int i) {
    const int c = i - 1;
    for (int& v : a) {
        if (v == c)
            v = c + 1;
        else if (v == c + 1)
            v = c;
    }
    std::swap(b[c], b[c + 1]);
}

// Left-normalizes a factor sequence in place; returns the number of leading
// Delta factors absorbed (to be added to inf).
int normalize_factors(int strands, std::vector<PermutationBraid>& factors) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
            while (int i = first_slidable(factors[j], factors[j + 1])) {
                slide(factors[j], factors[j + 1], i);
                changed = true;
            }
        }
    }
    // Identity factors can only remain as a suffix, Delta factors as a prefix.
    while (!factors.empty() && is_identity(factors.back())) factors.pop_back();
    const PermutationBraid w0 = delta_perm(strands);
    int absorbed = 0;
    std::size_t lead = 0;
    while (lead < factors.size() && factors[lead] == w0) {
        ++absorbed;
        ++lead;
    }
    factors.erase(factors.begin(), factors.begin() + lead);
    return absorbed;
}

}  // namespace

BraidWord half_twist(int b) {
    if (b < 2) throw std::invalid_argument("half twist requires >= 2 strands");
    std::vector<Letter> letters;
    for (int row = b - 1; row >= 1; --row)
        for (int i = 1; i <= row; ++i) letters.push_back(Letter{i, 1});
    return BraidWord(b, std::move(letters));
}

NormalForm normal_form(const BraidWord& word) {
    const int b = word.strands();
    NormalForm nf;
    nf.strands = b;
    nf.inf = 0;
    std::vector<PermutationBraid>& factors = nf.factors;
    const PermutationBraid w0 = delta_perm(b);

    for (const Letter& l : word.letters()) {
        const int c = l.index - 1;
        if (l.sign > 0) {
            PermutationBraid t = identity_perm(b);
            std::swap(t[c], t[c + 1]);
            factors.push_back(std::move(t));
        } else {
            // a_i^{-1} = Delta^{-1} · x with x the permutation braid
            // tau_i ∘ w0; the Delta^{-1} is pushed to the front, twisting
            // every factor collected so far.
            nf.inf -= 1;
            for (PermutationBraid& f : factors) f = tau(f);
            PermutationBraid x(b);
            for (int q = 0; q < b; ++q) {
                int v = w0[q];
                if (v == c)
                    v = c + 1;
                else if (v == c + 1)
                    v = c;
                x[q] = v;
            }
            factors.push_back(std::move(x));
        }
    }

    nf.inf += normalize_factors(b, factors);
    return nf;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("strand mismatch in braid_equal");
    return normal_form(u) == normal_form(v);
}

std::string NormalForm::canonical() const {
    std::string out = "Δ^" + std::to_string(inf);
    for (const PermutationBraid& f : factors) {
        out += " |";
        for (int v : f) out += ' ' + std::to_string(v + 1);
    }
    return out;
}

std::string cyclic_canonical_key(const BraidWord& word) {
    std::string best = normal_form(word).canonical();
    for (int k = 1; k < word.length(); ++k) {
        std::string s = normal_form(word.cyclic_shift(k)).canonical();
        if (s < best) best = std::move(s);
    }
    return best;
}

}  // namespace braidsig
