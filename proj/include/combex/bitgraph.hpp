#pragma once

#include <cstdint>
#include <vector>

#include "combex/budget.hpp"

namespace combex {

// Simple undirected graph with bitset adjacency rows, up to 4096 vertices.
class BitGraph {
  public:
    BitGraph() = default;
    explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), adj_(size_t(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }

    const uint64_t* row(int u) const { return adj_.data() + size_t(u) * words_; }
    uint64_t* row(int u) { return adj_.data() + size_t(u) * words_; }

    int degree(int u) const;

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> adj_;
};

struct CliqueResult {
    Outcome outcome = Outcome::Proven;
    int size = 0;
    std::vector<int> witness;  // sorted vertex list; lexicographically least maximum clique
};

// Exact maximum clique, branch and bound with greedy colouring bounds.
// On budget exhaustion `size` is a lower bound only. The witness is always
// the lexicographically least clique of the reported size, independent of
// the thread schedule.
CliqueResult max_clique(const BitGraph& g, const SearchBudget& budget = {});

}  // namespace combex
