#include "doctest.h"

#include <random>
#include <stdexcept>

#include "braidsig/inertia.hpp"
#include "oracles.hpp"

using namespace braidsig;

namespace {

SymmetricIntMatrix random_symmetric(std::mt19937& rng, int n, int span) {
    IntMatrix m(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const long long v = static_cast<long long>(rng() % (2 * span + 1)) - span;
            m[i][j] = v;
            m[j][i] = v;
        }
    return SymmetricIntMatrix::from(std::move(m));
}

// Random congruence by a unimodular matrix: P^T M P.
SymmetricIntMatrix random_congruence(std::mt19937& rng, const SymmetricIntMatrix& m) {
    const int n = m.n;
    IntMatrix p(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int step = 0; step < 2 * n; ++step) {
        const int r = static_cast<int>(rng() % n);
        int s = static_cast<int>(rng() % n);
        if (r == s) s = (s + 1) % n;
        if (n < 2) break;
        const long long f = (rng() % 2) ? 1 : -1;
        for (int j = 0; j < n; ++j) p[r][j] += f * p[s][j];
    }
    IntMatrix tmp(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) tmp[i][j] += p[k][i] * m.entries[k][j];
    IntMatrix out(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out[i][j] += tmp[i][k] * p[k][j];
    return SymmetricIntMatrix::from(std::move(out));
}

}  // namespace

TEST_CASE("symmetrize") {
    const IntMatrix v{{-1, 1}, {0, -1}};
    const SymmetricIntMatrix m = symmetrize(v);
    CHECK(m.entries == IntMatrix{{-2, 1}, {1, -2}});

    CHECK(symmetrize(IntMatrix{}).n == 0);
    CHECK(symmetrize(IntMatrix{{0}}).entries == IntMatrix{{0}});
    CHECK_THROWS_AS(symmetrize(IntMatrix{{1, 2}}), std::invalid_argument);
}

TEST_CASE("inertia: fixed cases") {
    const Inertia neg2 = inertia_of(SymmetricIntMatrix::from({{-2, 1}, {1, -2}}));
    CHECK(neg2 == Inertia{0, 2, 0});
    CHECK(neg2.signature() == -2);

    const Inertia id3 = inertia_of(SymmetricIntMatrix::from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id3 == Inertia{3, 0, 0});

    const Inertia zero4 = inertia_of(SymmetricIntMatrix::from(
        IntMatrix(4, std::vector<long long>(4, 0))));
    CHECK(zero4 == Inertia{0, 0, 4});

    // zero diagonal, nonzero off-diagonal: hyperbolic plane
    const Inertia hyp = inertia_of(SymmetricIntMatrix::from({{0, 1}, {1, 0}}));
    CHECK(hyp == Inertia{1, 1, 0});

    const Inertia empty = inertia_of(SymmetricIntMatrix::from(IntMatrix{}));
    CHECK(empty == Inertia{0, 0, 0});

    CHECK_THROWS_AS(SymmetricIntMatrix::from({{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("inertia agrees with the Descartes characteristic-polynomial oracle") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = static_cast<int>(rng() % 9);
        const SymmetricIntMatrix m = random_symmetric(rng, n, 3);
        CHECK(inertia_of(m) == oracles::descartes_inertia(m));
    }
}

TEST_CASE("inertia is a congruence invariant") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const SymmetricIntMatrix m = random_symmetric(rng, n, 3);
        const SymmetricIntMatrix c = random_congruence(rng, m);
        CHECK(inertia_of(m) == inertia_of(c));
    }
}

TEST_CASE("deleting the first row and column moves the signature by at most 1") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const SymmetricIntMatrix m = random_symmetric(rng, n, 3);
        IntMatrix sub(n - 1, std::vector<long long>(n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) sub[i - 1][j - 1] = m.entries[i][j];
        const int full = inertia_of(m).signature();
        const int cut = inertia_of(SymmetricIntMatrix::from(std::move(sub))).signature();
        CHECK(std::abs(full - cut) <= 1);
    }
}

TEST_CASE("bareiss determinant") {
    std::vector<std::vector<BigInt>> a{{BigInt(2), BigInt(1)}, {BigInt(7), BigInt(4)}};
    CHECK(bareiss_determinant(a) == 1);
    std::vector<std::vector<BigInt>> sing{{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}};
    CHECK(bareiss_determinant(sing) == 0);
    CHECK(bareiss_determinant({}) == 1);
}
