#pragma once

#include <vector>

#include "braidsig/braid_word.hpp"
#include "braidsig/fence.hpp"
#include "braidsig/inertia.hpp"

namespace braidsig {

/// One cycle of the fence diagram: the rectangle between two consecutive
/// occurrences of the same generator. lower_time < upper_time are 1-based
/// word positions with no other occurrence of `column` between them.
struct Brick {
    int column;
    int lower_time;
    int upper_time;

    friend bool operator==(const Brick&, const Brick&) = default;
};

/// Integer Seifert matrix of a positive braid closure over the brick basis:
/// entries[x][y] = lk(gamma_x, gamma_y^+). Dimension equals l - b + c.
struct SeifertMatrix {
    std::vector<Brick> basis;
    IntMatrix entries;

    int dimension() const { return static_cast<int>(basis.size()); }
};

/// Homology basis of the fence surface: for each column with m occurrences,
/// the m-1 bricks on consecutive occurrences, ordered by column then height.
std::vector<Brick> brick_basis(const FenceDiagram& fd);

/// Seifert matrix of the closure of a positive word.
///
/// Linking rules over the brick basis, with the lower-starting brick as row:
///   - every diagonal entry is -1;
///   - bricks sharing an occurrence in the same column: entry 1 on the lower
///     brick's row, 0 in the mirrored slot;
///   - strictly interleaved bricks in adjacent columns (lower brick in
///     column i, the other in column j = i+-1 with times t_i < t_j < t_i' <
///     t_j'): entry +1 for j = i+1 and -1 for j = i-1 on the lower brick's
///     row, 0 mirrored;
///   - nested or disjoint intervals, and columns further apart, never link.
/// The sign choices are pinned by the torus anchors sigma(T(2,n)) = -(n-1)
/// and sigma(T(4,4)) = -7; flipping either one breaks an anchor.
SeifertMatrix seifert_matrix(const BraidWord& word);

}  // namespace braidsig
