#include "braidsig/inertia.hpp"

#include <stdexcept>
#include <utility>

namespace braidsig {

SymmetricIntMatrix SymmetricIntMatrix::from(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < i; ++j)
            if (m[i][j] != m[j][i])
                throw std::invalid_argument("matrix is not symmetric");
    }
    return SymmetricIntMatrix{n, std::move(m)};
}

SymmetricIntMatrix symmetrize(const IntMatrix& v) {
    const int n = static_cast<int>(v.size());
    IntMatrix out(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(v[i].size()) != n)
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < n; ++j) out[i][j] = v[i][j] + v[j][i];
    }
    return SymmetricIntMatrix{n, std::move(out)};
}

Inertia inertia_of(const SymmetricIntMatrix& m) {
    const int n = m.n;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.entries[i][j];

    auto swap_rows_cols = [&](int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (int t = 0; t < n; ++t) std::swap(a[t][i], a[t][j]);
    };

    Inertia res;
    int k = 0;
    while (k < n) {
        if (a[k][k] == 0) {
            int d = -1;
            for (int t = k + 1; t < n; ++t)
                if (a[t][t] != 0) {
                    d = t;
                    break;
                }
            if (d >= 0) {
                swap_rows_cols(k, d);
            } else {
                int pi = -1, pj = -1;
                for (int i = k; i < n && pi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (a[i][j] != 0) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) {
                    res.zero += n - k;
                    break;
                }
                for (int t = 0; t < n; ++t) a[pi][t] += a[pj][t];
                for (int t = 0; t < n; ++t) a[t][pi] += a[t][pj];
                swap_rows_cols(k, pi);
            }
        }
        const Rational pivot = a[k][k];
        if (pivot > 0)
            ++res.positive;
        else
            ++res.negative;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] / pivot;
            for (int t = k; t < n; ++t) a[i][t] -= f * a[k][t];
            for (int t = k; t < n; ++t) a[t][i] -= f * a[t][k];
        }
        ++k;
    }
    return res;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace braidsig
