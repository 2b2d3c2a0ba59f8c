#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "combex/budget.hpp"

namespace combex {

enum class CoverMode { Partition, Odd };

struct ExactCoverInstance {
    int universe = 0;                       // elements 0..universe-1
    std::vector<std::vector<int>> blocks;   // candidate blocks, each a sorted element list
};

struct CoverResult {
    Outcome outcome = Outcome::Proven;
    int count = 0;                 // number of blocks used; minimal when Proven
    std::vector<int> chosen;       // block indices, sorted
};

// Restricts the first branching decision of the partition search: the root
// covers `element` using only the listed blocks. Sound when the blocks are
// orbit representatives, under the stabiliser of `element` in a symmetry
// group of the instance, of all blocks containing `element`.
struct RootRestriction {
    int element = 0;
    std::vector<int> blocks;
};

// Minimum number of blocks that cover every element exactly once (Partition)
// or an odd number of times (Odd). Odd mode never needs a block twice, so
// both modes search over block subsets.
CoverResult exact_cover_min(const ExactCoverInstance& inst, CoverMode mode,
                            const SearchBudget& budget = {},
                            const std::optional<RootRestriction>& root = std::nullopt);

// Independent recheck of a chosen block set: per-element counting only.
bool verify_cover(const ExactCoverInstance& inst, CoverMode mode, const std::vector<int>& chosen);

}  // namespace combex
