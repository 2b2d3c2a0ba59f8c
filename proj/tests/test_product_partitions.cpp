#include <doctest.h>

#include "combex/graph_intersect.hpp"
#include "combex/product_partitions.hpp"

using namespace combex;

TEST_SUITE_BEGIN("product-cover");

TEST_CASE("bipartite subgraph counts") {
    // (3^n - 2 * 2^n + 1) / 2 unordered pairs of disjoint non-empty sets
    CHECK(all_bipartite_subgraphs(2).size() == 1);
    CHECK(all_bipartite_subgraphs(3).size() == 6);
    CHECK(all_bipartite_subgraphs(4).size() == 25);
    CHECK(all_bipartite_subgraphs(5).size() == 90);
}

TEST_CASE("star construction partitions the product") {
    for (int n = 2; n <= 10; ++n) {
        ProductCover c = star_construction(n);
        CHECK((long long)c.blocks.size() == (long long)(n - 1) * (n - 1));
        CHECK(check_product_cover(c, CoverMode::Partition).ok);
    }
}

TEST_CASE("cover checking catches failures and parity effects") {
    ProductCover empty;
    empty.n1 = empty.n2 = 2;
    auto missing = check_product_cover(empty, CoverMode::Partition);
    CHECK_FALSE(missing.ok);
    CHECK(missing.violating == std::pair{0, 0});

    // duplicating a block breaks a partition but flips nothing mod 2
    ProductCover c = star_construction(3);
    REQUIRE(check_product_cover(c, CoverMode::Odd).ok);
    c.blocks.push_back(c.blocks[0]);
    CHECK_FALSE(check_product_cover(c, CoverMode::Partition).ok);
    CHECK_FALSE(check_product_cover(c, CoverMode::Odd).ok);
    c.blocks.push_back(c.blocks[0]);  // twice more restores parity
    CHECK(check_product_cover(c, CoverMode::Odd).ok);
}

TEST_CASE("accounting identity on partition witnesses") {
    for (int n = 2; n <= 6; ++n) {
        ProductCover c = star_construction(n);
        long long covered = 0;
        for (const auto& b : c.blocks)
            covered += (long long)std::popcount(b.x1) * std::popcount(b.y1) *
                       std::popcount(b.x2) * std::popcount(b.y2);
        CHECK(covered == (long long)pair_count(n) * pair_count(n));
    }
}

TEST_CASE("g(2) = 1") {
    auto r = exact_product_value(ProductTarget::G, 2);
    CHECK(r.outcome == Outcome::Proven);
    CHECK(r.value == 1);
}

TEST_CASE("exact g(3): solver value confirmed by exhaustive small-subset search") {
    auto r = exact_product_value(ProductTarget::G, 3);
    REQUIRE(r.outcome == Outcome::Proven);
    CHECK(r.value <= 4);  // star bound
    CHECK(check_product_cover(r.witness, CoverMode::Partition).ok);

    // independent oracle: no partition with fewer blocks exists
    ProductCover shape;
    shape.n1 = shape.n2 = 3;
    auto parts = all_bipartite_subgraphs(3);
    std::vector<ProductBlock> blocks;
    for (const auto& l : parts)
        for (const auto& rr : parts) blocks.push_back({l.first, l.second, rr.first, rr.second});
    REQUIRE(blocks.size() == 36);
    int oracle = -1;
    for (int size = 1; size < r.value && oracle < 0; ++size) {
        std::vector<int> pick(size);
        std::function<bool(int, int)> rec = [&](int from, int depth) -> bool {
            if (depth == size) {
                ProductCover c = shape;
                for (int i = 0; i < size; ++i) c.blocks.push_back(blocks[pick[i]]);
                return check_product_cover(c, CoverMode::Partition).ok;
            }
            for (int b = from; b < int(blocks.size()); ++b) {
                pick[depth] = b;
                if (rec(b + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) oracle = size;
    }
    CHECK(oracle == -1);  // nothing smaller than the solver's value
}

TEST_CASE("odd covers: g~(n) <= g(n) on computed n") {
    for (int n = 2; n <= 3; ++n) {
        auto gt = exact_product_value(ProductTarget::GTilde, n);
        auto g = exact_product_value(ProductTarget::G, n);
        REQUIRE(gt.outcome == Outcome::Proven);
        REQUIRE(g.outcome == Outcome::Proven);
        CHECK(gt.value <= g.value);
        CHECK(check_product_cover(gt.witness, CoverMode::Odd).ok);
    }
}

TEST_CASE("h(n) at tiny sizes") {
    auto h2 = exact_product_value(ProductTarget::H, 2);
    REQUIRE(h2.outcome == Outcome::Proven);
    CHECK(check_product_cover(h2.witness, CoverMode::Partition).ok);
    CHECK(h2.value <= 3);  // 3 stars of K_4 times the single star of K_2
}

TEST_CASE("bound table rows") {
    auto rows = bound_table(2, 10);
    CHECK(rows.back().star_bound == 81);
    CHECK(rows.back().odd_cover_bound == 36);  // (ceil(10/2)+1)^2
    CHECK(rows[2].h_slope == Rational(48, 5));  // 12*4/5 at n=4
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].star_bound > rows[i - 1].star_bound);
}

TEST_CASE("block string round trip") {
    ProductBlock b{0b0011, 0b0100, 0b0001, 0b1010};
    CHECK(block_to_string(b) == "({1,2}|{3})x({1}|{2,4})");
}

TEST_CASE("certificates verify; tampering fails") {
    VerifierRegistry reg;
    register_product_partitions_verifiers(reg);

    Certificate star = make_star_certificate(5);
    CHECK(reg.verify(star).ok);
    Certificate sbad = star;
    auto blocks = sbad.witness["blocks"];
    blocks.erase(blocks.begin());
    sbad.witness["blocks"] = blocks;
    sbad.value = std::to_string(blocks.size());
    CHECK_FALSE(reg.verify(sbad).ok);

    auto g3 = exact_product_value(ProductTarget::G, 3);
    Certificate exact = make_product_exact_certificate(ProductTarget::G, 3, g3);
    CHECK(reg.verify(exact).ok);
}

TEST_SUITE_END();
