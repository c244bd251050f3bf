#include "braidsig/torus.hpp"

#include <stdexcept>

namespace braidsig {

namespace {

// Base signatures for 1 <= q <= 2p, index q-1; values pinned against the
// Seifert-matrix pipeline.
constexpr int kBase3[6] = {0, -2, -4, -6, -8, -8};
constexpr int kBase4[8] = {0, -3, -6, -7, -8, -11, -14, -15};

}  // namespace

int sigma_torus(int p, int q) {
    if (p < 2 || p > 4) throw std::invalid_argument("sigma_torus supports 2 <= p <= 4");
    if (q < 1) throw std::invalid_argument("sigma_torus requires q >= 1");
    if (p == 2) return -(q - 1);
    int sigma = 0;
    if (p == 3) {
        while (q > 6) {
            sigma -= 8;  // p^2 - 1
            q -= 6;
        }
        return sigma + kBase3[q - 1];
    }
    while (q > 8) {
        sigma -= 16;  // p^2
        q -= 8;
    }
    return sigma + kBase4[q - 1];
}

}  // namespace braidsig
