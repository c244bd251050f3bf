#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidsig {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<long long>>;

/// Exactly symmetric integer matrix. The factory checks symmetry.
struct SymmetricIntMatrix {
    int n = 0;
    IntMatrix entries;

    static SymmetricIntMatrix from(IntMatrix m);
};

/// Eigenvalue sign counts of a real symmetric matrix.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int signature() const { return positive - negative; }
    int dimension() const { return positive + negative + zero; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// V + V^T.
SymmetricIntMatrix symmetrize(const IntMatrix& v);

/// Exact inertia by congruence diagonalization over the rationals
/// (Sylvester's law of inertia). No floating point anywhere. When the
/// remaining diagonal is all zero but an off-diagonal entry m_ij survives,
/// row/column j is added to row/column i to manufacture the pivot 2*m_ij.
Inertia inertia_of(const SymmetricIntMatrix& m);

/// Fraction-free (Bareiss) determinant of an integer matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a);

}  // namespace braidsig
