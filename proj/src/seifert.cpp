#include "braidsig/seifert.hpp"

#include <stdexcept>

namespace braidsig {

namespace {

// Signs carried by the lower-starting brick's row for strictly interleaved
// bricks in adjacent columns; pinned by the torus signature anchors.
constexpr long long kInterleaveRight = 1;   // other brick one column right
constexpr long long kInterleaveLeft = -1;   // other brick one column left

}  // namespace

std::vector<Brick> brick_basis(const FenceDiagram& fd) {
    std::vector<std::vector<int>> occ(fd.strands());
    for (const Bar& bar : fd.bars()) occ[bar.column].push_back(bar.time);
    std::vector<Brick> basis;
    for (int col = 1; col <= fd.strands() - 1; ++col)
        for (std::size_t k = 0; k + 1 < occ[col].size(); ++k)
            basis.push_back(Brick{col, occ[col][k], occ[col][k + 1]});
    return basis;
}

SeifertMatrix seifert_matrix(const BraidWord& word) {
    if (!word.is_positive())
        throw std::invalid_argument("seifert_matrix requires a positive word");
    std::vector<Brick> basis = brick_basis(fence_diagram(word));
    const int n = static_cast<int>(basis.size());
    IntMatrix v(n, std::vector<long long>(n, 0));
    for (int x = 0; x < n; ++x) v[x][x] = -1;

    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const Brick& p = basis[x];
            const Brick& q = basis[y];
            if (p.column == q.column) {
                // Basis is height-ordered within a column, so only p below q
                // sharing the middle occurrence can happen.
                if (p.upper_time == q.lower_time) v[x][y] = 1;
                continue;
            }
            if (q.column - p.column == 1) {
                if (p.lower_time < q.lower_time && q.lower_time < p.upper_time &&
                    p.upper_time < q.upper_time)
                    v[x][y] = kInterleaveRight;
                else if (q.lower_time < p.lower_time && p.lower_time < q.upper_time &&
                         q.upper_time < p.upper_time)
                    v[y][x] = kInterleaveLeft;
            } else if (p.column - q.column == 1) {
                if (p.lower_time < q.lower_time && q.lower_time < p.upper_time &&
                    p.upper_time < q.upper_time)
                    v[x][y] = kInterleaveLeft;
                else if (q.lower_time < p.lower_time && p.lower_time < q.upper_time &&
                         q.upper_time < p.upper_time)
                    v[y][x] = kInterleaveRight;
            }
        }
    }
    return SeifertMatrix{std::move(basis), std::move(v)};
}

}  // namespace braidsig
