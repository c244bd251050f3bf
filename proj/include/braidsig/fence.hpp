#pragma once

#include <utility>
#include <vector>

#include "braidsig/braid_word.hpp"

namespace braidsig {

/// One horizontal rung of a fence diagram: the crossing a_{column} read at
/// word position `time` (1-based).
struct Bar {
    int column;
    int time;

    friend bool operator==(const Bar&, const Bar&) = default;
};

/// Fence diagram of a positive braid word: b vertical strand lines joined by
/// one horizontal bar per letter. Seen as a graph it is a deformation
/// retract of the minimal Seifert surface of the closure, so its first Betti
/// number and component count are the closure's b1 and split-component count.
class FenceDiagram {
public:
    /// Builds the diagram of a positive word; throws std::invalid_argument
    /// if a negative letter is present.
    static FenceDiagram from_word(const BraidWord& word);

    int strands() const { return strands_; }
    const std::vector<Bar>& bars() const { return bars_; }

    /// Number of connected components of the underlying graph.
    int components() const;

    /// First Betti number of the underlying graph, computed literally as
    /// E - V + C on the subdivided strand lines plus bars. Serves as the
    /// graph-theoretic cross-check for the l - b + c count.
    int graph_betti() const;

private:
    FenceDiagram(int strands, std::vector<Bar> bars)
        : strands_(strands), bars_(std::move(bars)) {}

    int strands_;
    std::vector<Bar> bars_;
};

/// Builds the fence diagram of a positive word (free-function spelling).
FenceDiagram fence_diagram(const BraidWord& word);

/// Returns (b1, c) of the closure of a positive word: c is 1 plus the number
/// of generator indices absent from the word, and b1 = l - b + c.
std::pair<int, int> betti_and_c(const BraidWord& word);

}  // namespace braidsig
