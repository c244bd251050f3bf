#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "braidsig/bounds.hpp"
#include "braidsig/braid_word.hpp"
#include "braidsig/fence.hpp"
#include "braidsig/garside.hpp"
#include "braidsig/seifert.hpp"

using namespace braidsig;

namespace {

void all_words(int b, int l, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> w(l, 1);
    if (l == 0) {
        fn(w);
        return;
    }
    for (;;) {
        fn(w);
        int pos = l - 1;
        while (pos >= 0 && w[pos] == b - 1) {
            w[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++w[pos];
    }
}

BraidWord from_indices(int b, const std::vector<int>& idx) {
    std::vector<Letter> letters;
    for (int v : idx) letters.push_back(Letter{v, 1});
    return BraidWord(b, std::move(letters));
}

BraidWord torus_word(int p, int q) {
    std::vector<Letter> unit;
    for (int i = 1; i <= p - 1; ++i) unit.push_back(Letter{i, 1});
    return BraidWord(p, unit).power(q);
}

std::vector<std::vector<BigInt>> to_big(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) out[i].push_back(BigInt(v));
    return out;
}

}  // namespace

TEST_CASE("brick basis") {
    const auto chain = brick_basis(fence_diagram(BraidWord::parse("a1 a1 a1", 2)));
    CHECK(chain == std::vector<Brick>{{1, 1, 2}, {1, 2, 3}});

    const auto tref = brick_basis(fence_diagram(BraidWord::parse("a1 a2 a1 a2", 3)));
    CHECK(tref == std::vector<Brick>{{1, 1, 3}, {2, 2, 4}});

    const auto fig = brick_basis(fence_diagram(BraidWord::parse("a1 a2 a1 a3 a2 a2 a1 a3", 4)));
    CHECK(fig.size() == 5);

    CHECK(brick_basis(fence_diagram(BraidWord::parse("a1", 2))).empty());
}

TEST_CASE("seifert matrix: small cases") {
    const SeifertMatrix tref = seifert_matrix(BraidWord::parse("a1 a1 a1", 2));
    CHECK(tref.entries == IntMatrix{{-1, 1}, {0, -1}});

    CHECK(seifert_matrix(BraidWord::parse("a1", 2)).dimension() == 0);

    const SeifertMatrix t32 = seifert_matrix(BraidWord::parse("a1 a2 a1 a2", 3));
    const SymmetricIntMatrix sym = symmetrize(t32.entries);
    CHECK(sym.entries[0][0] == -2);
    CHECK(sym.entries[1][1] == -2);
    CHECK((sym.entries[0][1] == 1 || sym.entries[0][1] == -1));
    CHECK(inertia_of(sym).signature() == -2);

    CHECK_THROWS_AS(seifert_matrix(BraidWord::parse("A1", 2)), std::invalid_argument);
}

TEST_CASE("trefoil matrix is pinned by signature and Alexander polynomial") {
    // Independent search: all 2x2 integer V with diagonal -1 and off-diagonal
    // entries in [-2,2] whose symmetrization has signature -2 and for which
    // det(V - tV^T) = t^2 - t + 1. The production matrix must be one of them.
    std::vector<IntMatrix> solutions;
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b) {
            const IntMatrix v{{-1, a}, {b, -1}};
            if (inertia_of(symmetrize(v)).signature() != -2) continue;
            // det(V - tV^T) = (1-ab) + (a^2+b^2-2) t + (1-ab) t^2
            if (1 - a * b != 1) continue;
            if (a * a + b * b - 2 != -1) continue;
            solutions.push_back(v);
        }
    CHECK(solutions.size() == 4);
    const IntMatrix ours = seifert_matrix(BraidWord::parse("a1 a1 a1", 2)).entries;
    CHECK(std::find(solutions.begin(), solutions.end(), ours) != solutions.end());
    CHECK(ours == IntMatrix{{-1, 1}, {0, -1}});
}

TEST_CASE("matrix dimension is l - b + c and diagonal is -1") {
    std::mt19937 rng(301);
    for (int trial = 0; trial < 200; ++trial) {
        const int b = 2 + static_cast<int>(rng() % 3);
        const int l = static_cast<int>(rng() % 10);
        std::vector<Letter> letters;
        for (int t = 0; t < l; ++t)
            letters.push_back(Letter{1 + static_cast<int>(rng() % (b - 1)), 1});
        const BraidWord w(b, letters);
        const SeifertMatrix sm = seifert_matrix(w);
        const auto [b1, c] = betti_and_c(w);
        CHECK(sm.dimension() == b1);
        for (int i = 0; i < sm.dimension(); ++i) CHECK(sm.entries[i][i] == -1);
    }
}

TEST_CASE("torus anchors through the pipeline") {
    for (int n = 1; n <= 12; ++n)
        CHECK(closure_signature(torus_word(2, n)) == -(n - 1));
    CHECK(closure_signature(torus_word(4, 4)) == -7);
}

TEST_CASE("positive 4-braid closures with c = 1 are fibered: |det V| = 1 (l <= 10)") {
    for (int l = 3; l <= 10; ++l) {
        all_words(4, l, [&](const std::vector<int>& idx) {
            bool used[4] = {false, false, false, false};
            for (int v : idx) used[v] = true;
            if (!(used[1] && used[2] && used[3])) return;
            const BigInt det =
                bareiss_determinant(to_big(seifert_matrix(from_indices(4, idx)).entries));
            CHECK((det == 1 || det == -1));
        });
    }
}

TEST_CASE("signature and nullity are braid-relation invariants (b <= 4, l <= 7)") {
    for (int b = 2; b <= 4; ++b) {
        for (int l = 0; l <= 7; ++l) {
            std::map<std::string, std::pair<int, int>> per_class;
            all_words(b, l, [&](const std::vector<int>& idx) {
                const BraidWord w = from_indices(b, idx);
                const Inertia in = inertia_of(symmetrize(seifert_matrix(w).entries));
                const std::string key = normal_form(w).canonical();
                const std::pair<int, int> val{in.signature(), in.zero};
                auto [it, fresh] = per_class.emplace(key, val);
                if (!fresh) CHECK(it->second == val);
            });
        }
    }
}

TEST_CASE("sigma is invariant under word reversal and column flip (b = 4, l <= 7)") {
    // Reversing a word flips the braid diagram upside down; mapping i to b-i
    // conjugates by the half twist. Both keep the closure, so sigma must not
    // move. Neither move is a braid relation or a cyclic shift, so this
    // exercises the linking rules independently of the other invariance
    // tests.
    for (int l = 1; l <= 7; ++l) {
        all_words(4, l, [&](const std::vector<int>& idx) {
            const int sigma = closure_signature(from_indices(4, idx));
            std::vector<int> rev(idx.rbegin(), idx.rend());
            CHECK(closure_signature(from_indices(4, rev)) == sigma);
            std::vector<int> flip = idx;
            for (int& v : flip) v = 4 - v;
            CHECK(closure_signature(from_indices(4, flip)) == sigma);
        });
    }
}

TEST_CASE("additivity on split unions and connected sums") {
    // a1^i a3^j in B4 splits as T(2,i) and T(2,j)
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            const BraidWord w =
                BraidWord::parse("a1", 4).power(i).concat(BraidWord::parse("a3", 4).power(j));
            CHECK(closure_signature(w) == -(i - 1) - (j - 1));
        }
    // a1^i a2 a3^j has a single bar in column 2, so the closure is a
    // connected sum of T(2,i) and T(2,j); the signatures add.
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            const BraidWord w = BraidWord::parse("a1", 4)
                                    .power(i)
                                    .concat(BraidWord::parse("a2", 4))
                                    .concat(BraidWord::parse("a3", 4).power(j));
            CHECK(closure_signature(w) == -(i - 1) - (j - 1));
        }
}

TEST_CASE("deleting one letter moves sigma by at most 1 (b = 4, l <= 6)") {
    for (int l = 1; l <= 6; ++l) {
        all_words(4, l, [&](const std::vector<int>& idx) {
            const int sigma = closure_signature(from_indices(4, idx));
            for (int drop = 0; drop < l; ++drop) {
                std::vector<int> shorter;
                for (int t = 0; t < l; ++t)
                    if (t != drop) shorter.push_back(idx[t]);
                const int s2 = closure_signature(from_indices(4, shorter));
                CHECK(std::abs(sigma - s2) <= 1);
            }
        });
    }
}
