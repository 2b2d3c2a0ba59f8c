#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/subset_family.hpp"

namespace combex {

// ---- induced-diamond saturation over P([n]) ----
//
// A diamond is four distinct sets A, B, C, D with A <= B cap C,
// B cup C <= D and B, C incomparable; distinctness makes the four
// containments strict where the poset needs them.

struct DiamondCheck {
    bool found = false;
    std::array<uint32_t, 4> witness{};  // A, B, C, D as bitmasks
};

DiamondCheck contains_induced_diamond(const SubsetFamily& f);

struct SaturationCheck {
    bool saturated = false;
    uint32_t extendable = 0;  // a non-member whose addition stays diamond-free
};

// Requires f diamond-free.
SaturationCheck is_diamond_saturated(const SubsetFamily& f);

SubsetFamily singletons_with_empty(int n);
SubsetFamily full_chain(int n);

struct MinSaturatedResult {
    Outcome outcome = Outcome::Proven;
    int value = 0;  // minimum size (Proven) or an upper bound (Budget)
    SubsetFamily witness;
};

// Minimum size of a diamond-saturated family in P([n]); exhaustive by
// increasing family size. Budget exhaustion falls back to the smaller of the
// two named families that verifies as saturated.
MinSaturatedResult min_saturated(int n, const SearchBudget& budget = {});

// ---- rainbow path covers of properly edge-coloured graphs ----

struct EdgeColouredGraph {
    int n = 0;
    std::vector<std::array<int, 3>> edges;  // (u, v, colour), u < v
};

bool is_proper_colouring(const EdgeColouredGraph& g);

// Proper colouring of K_n via the round-robin circle method.
EdgeColouredGraph properly_coloured_complete(int n);

// Greedy cover: repeatedly remove a maximum-length rainbow path, breaking
// ties by the lexicographically least vertex sequence. Exact maximum path
// search for n <= 12; larger graphs use a deterministic greedy extension and
// the certificate records heuristic mode.
std::vector<std::vector<int>> greedy_rainbow_cover(const EdgeColouredGraph& g);

bool is_rainbow_path(const EdgeColouredGraph& g, const std::vector<int>& path);

Certificate make_min_saturated_certificate(const MinSaturatedResult& r, int n);
Certificate make_rainbow_cover_certificate(const EdgeColouredGraph& g,
                                           const std::vector<std::vector<int>>& cover);
void register_saturation_rainbow_verifiers(VerifierRegistry& reg);

}  // namespace combex
