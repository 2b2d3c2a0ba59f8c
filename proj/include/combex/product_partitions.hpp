#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/exact_cover.hpp"
#include "combex/rational.hpp"

namespace combex {

// A product E(K_{X1,Y1}) x E(K_{X2,Y2}) inside E(K_n1) x E(K_n2); the four
// vertex sets are bitmasks, non-empty and disjoint per side.
struct ProductBlock {
    uint32_t x1 = 0, y1 = 0;
    uint32_t x2 = 0, y2 = 0;

    bool operator==(const ProductBlock&) const = default;
};

struct ProductCover {
    int n1 = 0, n2 = 0;
    std::vector<ProductBlock> blocks;
};

struct ProductCoverCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> violating;  // (edge1 index, edge2 index)
};

// Partition: every element of E(K_n1) x E(K_n2) in exactly one block;
// Odd: in an odd number of blocks.
ProductCoverCheck check_product_cover(const ProductCover& c, CoverMode mode);

// (n-1)^2 blocks from the decomposition of K_n into n-1 stars on each side.
ProductCover star_construction(int n);

// All complete bipartite subgraphs {X, Y} of K_n, unordered, as mask pairs.
std::vector<std::pair<uint32_t, uint32_t>> all_bipartite_subgraphs(int n);

enum class ProductTarget { G, H, GTilde };  // g(n), h(n), g~(n)

struct ProductExactResult {
    Outcome outcome = Outcome::Proven;
    int value = 0;
    ProductCover witness;
};

// Exact minimum block counts: g (partition of E(K_n)^2), h (partition of
// E(K_4) x E(K_n)), g~ (odd cover of E(K_n)^2). The partition search fixes
// its root element and branches over orbit representatives of the blocks
// covering it under S_{n1} x S_{n2}.
ProductExactResult exact_product_value(ProductTarget target, int n,
                                       const SearchBudget& budget = {});

struct BoundRow {
    int n = 0;
    BigInt star_bound;       // (n-1)^2
    BigInt odd_cover_bound;  // (ceil(n/2) + 1)^2
    Rational h_slope;        // 12n/5, conjectured asymptotic for h
};

std::vector<BoundRow> bound_table(int n_lo, int n_hi);

std::string block_to_string(const ProductBlock& b);

Certificate make_star_certificate(int n);
Certificate make_product_exact_certificate(ProductTarget target, int n,
                                           const ProductExactResult& r);
void register_product_partitions_verifiers(VerifierRegistry& reg);

}  // namespace combex
