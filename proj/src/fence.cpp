#include "braidsig/fence.hpp"

#include <numeric>
#include <stdexcept>

namespace braidsig {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }

    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

}  // namespace

FenceDiagram FenceDiagram::from_word(const BraidWord& word) {
    if (!word.is_positive())
        throw std::invalid_argument("fence diagram requires a positive word");
    std::vector<Bar> bars;
    bars.reserve(word.letters().size());
    int time = 1;
    for (const Letter& l : word.letters()) bars.push_back(Bar{l.index, time++});
    return FenceDiagram(word.strands(), std::move(bars));
}

FenceDiagram fence_diagram(const BraidWord& word) {
    return FenceDiagram::from_word(word);
}

int FenceDiagram::components() const {
    UnionFind uf(strands_);
    for (const Bar& bar : bars_) uf.unite(bar.column - 1, bar.column);
    return uf.components();
}

int FenceDiagram::graph_betti() const {
    // Vertices: bar endpoints, with each strand line subdivided at them. A
    // strand with t endpoints contributes t vertices and t-1 edges (its
    // dangling ends are contractible); an untouched strand is one vertex.
    std::vector<std::vector<int>> touches(strands_);  // vertex ids per strand
    int vertices = 0;
    int edges = 0;
    for (const Bar& bar : bars_) {
        touches[bar.column - 1].push_back(vertices++);
        touches[bar.column].push_back(vertices++);
    }
    for (int s = 0; s < strands_; ++s)
        if (touches[s].empty()) touches[s].push_back(vertices++);

    UnionFind uf(vertices);
    for (int s = 0; s < strands_; ++s) {
        for (std::size_t t = 0; t + 1 < touches[s].size(); ++t) {
            uf.unite(touches[s][t], touches[s][t + 1]);
            ++edges;
        }
    }
    // Bar k connects the k-th endpoint pair (ids 2k, 2k+1).
    for (std::size_t k = 0; k < bars_.size(); ++k) {
        uf.unite(static_cast<int>(2 * k), static_cast<int>(2 * k + 1));
        ++edges;
    }
    return edges - vertices + uf.components();
}

std::pair<int, int> betti_and_c(const BraidWord& word) {
    if (!word.is_positive())
        throw std::invalid_argument("betti_and_c requires a positive word");
    std::vector<bool> used(word.strands(), false);
    for (const Letter& l : word.letters()) used[l.index] = true;
    int absent = 0;
    for (int i = 1; i <= word.strands() - 1; ++i)
        if (!used[i]) ++absent;
    const int c = 1 + absent;
    const int b1 = word.length() - word.strands() + c;
    return {b1, c};
}

}  // namespace braidsig
