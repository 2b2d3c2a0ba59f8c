#include <doctest.h>

#include <random>
#include <set>

#include "combex/saturation_rainbow.hpp"

using namespace combex;

TEST_SUITE_BEGIN("saturation-rainbow");

namespace {

// quadruple-loop oracle over member lists
bool oracle_diamond(const SubsetFamily& f) {
    auto mem = f.members();
    for (uint32_t a : mem)
        for (uint32_t b : mem)
            for (uint32_t c : mem)
                for (uint32_t d : mem) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if ((a & ~(b & c)) != 0) continue;       // A <= B cap C
                    if (((b | c) & ~d) != 0) continue;       // B cup C <= D
                    if ((b & ~c) == 0 || (c & ~b) == 0) continue;  // incomparable
                    return true;
                }
    return false;
}

// exhaustive minimum over every subfamily of P([n])
int oracle_min_saturated(int n) {
    int best = -1;
    for (uint32_t fambits = 1; fambits < (uint32_t(1) << (1 << n)); ++fambits) {
        SubsetFamily f(n);
        for (int m = 0; m < (1 << n); ++m)
            if ((fambits >> m) & 1) f.set(m);
        if (oracle_diamond(f)) continue;
        bool saturated = true;
        for (uint32_t m = 0; m < f.universe_size() && saturated; ++m) {
            if (f.test(m)) continue;
            SubsetFamily ext = f;
            ext.set(m);
            if (!oracle_diamond(ext)) saturated = false;
        }
        if (saturated && (best < 0 || int(f.count()) < best)) best = int(f.count());
    }
    return best;
}

}  // namespace

TEST_CASE("P([2]) contains the canonical diamond") {
    SubsetFamily f(2);
    for (uint32_t m = 0; m < 4; ++m) f.set(m);
    auto check = contains_induced_diamond(f);
    REQUIRE(check.found);
    CHECK(check.witness == std::array<uint32_t, 4>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("singletons + empty set and the full chain are diamond-free") {
    for (int n = 2; n <= 5; ++n) {
        CHECK_FALSE(contains_induced_diamond(singletons_with_empty(n)).found);
        CHECK_FALSE(contains_induced_diamond(full_chain(n)).found);
    }
}

TEST_CASE("diamond detection matches the quadruple-loop oracle") {
    std::mt19937_64 rng(888);
    for (int it = 0; it < 500; ++it) {
        int n = 2 + int(rng() % 3);  // 2..4
        SubsetFamily f(n);
        for (uint32_t m = 0; m < f.universe_size(); ++m)
            if (rng() % 3 == 0) f.set(m);
        CHECK(contains_induced_diamond(f).found == oracle_diamond(f));
    }
}

TEST_CASE("saturation of the named families at n = 3") {
    auto sing = singletons_with_empty(3);
    auto check = is_diamond_saturated(sing);
    CHECK(check.saturated);
    CHECK(is_diamond_saturated(full_chain(3)).saturated);

    // the empty family is never saturated
    SubsetFamily empty(3);
    auto e = is_diamond_saturated(empty);
    CHECK_FALSE(e.saturated);
}

TEST_CASE("min_saturated matches the exhaustive oracle for n <= 3") {
    for (int n = 2; n <= 3; ++n) {
        auto r = min_saturated(n);
        REQUIRE(r.outcome == Outcome::Proven);
        CHECK(r.value == oracle_min_saturated(n));
        CHECK_FALSE(contains_induced_diamond(r.witness).found);
        CHECK(is_diamond_saturated(r.witness).saturated);
    }
}

TEST_CASE("min_saturated(4): between sqrt(n) and n+1") {
    auto r = min_saturated(4);
    REQUIRE(r.outcome == Outcome::Proven);
    CHECK(r.value >= 2);       // at least sqrt(n)
    CHECK(r.value <= 5);       // singletons + empty set has size n+1
    CHECK(is_diamond_saturated(r.witness).saturated);
}

TEST_CASE("proper colouring checks") {
    for (int n : {3, 4, 5, 6, 8}) CHECK(is_proper_colouring(properly_coloured_complete(n)));
    EdgeColouredGraph bad;
    bad.n = 3;
    bad.edges = {{0, 1, 0}, {1, 2, 0}};
    CHECK_FALSE(is_proper_colouring(bad));
}

TEST_CASE("single edge is covered by one path") {
    EdgeColouredGraph g;
    g.n = 2;
    g.edges = {{0, 1, 0}};
    auto cover = greedy_rainbow_cover(g);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0] == std::vector<int>{0, 1});
}

TEST_CASE("properly 3-coloured K_4: cover of at most 4 verified paths") {
    EdgeColouredGraph g = properly_coloured_complete(4);
    auto cover = greedy_rainbow_cover(g);
    CHECK(cover.size() <= 4);
    std::set<std::pair<int, int>> covered;
    for (const auto& p : cover) {
        CHECK(is_rainbow_path(g, p));
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            auto key = std::minmax(p[i], p[i + 1]);
            CHECK(covered.insert({key.first, key.second}).second);
        }
    }
    CHECK(covered.size() == g.edges.size());
}

TEST_CASE("greedy cover on a random corpus: rainbow edge-partitions") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 25; ++it) {
        int n = 4 + int(rng() % 6);  // 4..9
        EdgeColouredGraph g;
        g.n = n;
        // random graph, then greedy proper colouring
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) continue;
                std::vector<char> used(2 * n, 0);
                for (const auto& e : g.edges)
                    if (e[0] == u || e[1] == u || e[0] == v || e[1] == v) used[e[2]] = 1;
                int col = 0;
                while (used[col]) ++col;
                g.edges.push_back({u, v, col});
            }
        REQUIRE(is_proper_colouring(g));
        auto cover = greedy_rainbow_cover(g);
        std::set<std::pair<int, int>> covered;
        for (const auto& p : cover) {
            CHECK(is_rainbow_path(g, p));
            for (size_t i = 0; i + 1 < p.size(); ++i) {
                auto key = std::minmax(p[i], p[i + 1]);
                CHECK(covered.insert({key.first, key.second}).second);
            }
        }
        CHECK(covered.size() == g.edges.size());
        // n log n guarantee check at exact-greedy sizes
        int log2n = 0;
        while ((1 << log2n) < n) ++log2n;
        CHECK(int(cover.size()) <= n * std::max(1, log2n));
    }
}

TEST_CASE("greedy cover is deterministic") {
    EdgeColouredGraph g = properly_coloured_complete(6);
    auto a = greedy_rainbow_cover(g);
    auto b = greedy_rainbow_cover(g);
    CHECK(a == b);
}

TEST_CASE("certificates verify; tampering fails") {
    VerifierRegistry reg;
    register_saturation_rainbow_verifiers(reg);

    auto r = min_saturated(3);
    Certificate sat = make_min_saturated_certificate(r, 3);
    CHECK(reg.verify(sat).ok);
    Certificate bad = sat;
    auto sets = bad.witness["sets"];
    sets.erase(sets.begin());
    bad.witness["sets"] = sets;
    bad.value = std::to_string(sets.size());
    CHECK_FALSE(reg.verify(bad).ok);

    EdgeColouredGraph g = properly_coloured_complete(5);
    auto cover = greedy_rainbow_cover(g);
    Certificate rc = make_rainbow_cover_certificate(g, cover);
    CHECK(reg.verify(rc).ok);
    Certificate rbad = rc;
    auto paths = rbad.witness["paths"];
    paths.erase(paths.begin());
    rbad.witness["paths"] = paths;
    rbad.value = std::to_string(paths.size());
    CHECK_FALSE(reg.verify(rbad).ok);
}

TEST_SUITE_END();
