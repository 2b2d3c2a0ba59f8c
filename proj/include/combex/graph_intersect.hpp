#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/rational.hpp"

namespace combex {

// Labelled graph on [n] as a bitmask over the C(n,2) vertex pairs in
// lexicographic order: (1,2), (1,3), ..., (1,n), (2,3), ...
struct LabeledGraph {
    int n = 0;
    uint64_t edges = 0;

    bool operator==(const LabeledGraph&) const = default;
};

int pair_count(int n);
int pair_index(int n, int i, int j);  // 0-based vertices, i != j
LabeledGraph complement(const LabeledGraph& g);

// Unlabelled pattern, vertices 0..v-1.
struct Pattern {
    int v = 0;
    std::vector<std::pair<int, int>> edges;
};

Pattern parse_pattern(const std::string& text);  // "1-2,1-3,2-3"
Pattern edge_pattern();
Pattern triangle_pattern();
Pattern path3_pattern();   // path with 3 edges
Pattern clique_pattern(int t);

// Does G contain a (not necessarily induced) copy of H?
bool contains_copy(const LabeledGraph& g, const Pattern& h);

struct FamilyViolation {
    bool ok = true;
    std::optional<std::pair<size_t, size_t>> pair;  // indices of a violating pair
};

// Every ordered pair, including G with itself, must have an H-copy in the
// intersection; members therefore all contain H.
FamilyViolation is_H_intersecting(const std::vector<LabeledGraph>& family, const Pattern& h);

int chromatic_number(const LabeledGraph& g);  // exact, n <= 8

FamilyViolation is_chromatic_intersecting(const std::vector<LabeledGraph>& family, int t);

struct ExactGResult {
    Outcome outcome = Outcome::Proven;
    BigInt value;
    std::vector<LabeledGraph> witness;
};

// g_H(n) by maximum clique over the compatibility graph of all graphs on [n]
// containing H.
ExactGResult exact_g(int n, const Pattern& h, const SearchBudget& budget = {});

Certificate make_exact_g_certificate(const ExactGResult& r, int n, const std::string& pattern);
void register_graph_intersect_verifiers(VerifierRegistry& reg);

}  // namespace combex
