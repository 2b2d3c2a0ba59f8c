#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "combex/antipodal_paths.hpp"

using namespace combex;

TEST_SUITE_BEGIN("antipodal");

namespace {

// oracle: minimum colour changes over all walks of length <= n+4
int oracle_walk_changes(const EdgeColouring& c, uint64_t v) {
    int n = c.n;
    uint64_t target = antipode(v, n);
    size_t verts = size_t(1) << n;
    const int inf = 1 << 20;
    // f[v][col] over walks of exactly t steps
    std::vector<std::vector<int>> f(verts, std::vector<int>(c.colours, inf));
    for (int i = 0; i < n; ++i) {
        uint64_t u = v ^ (uint64_t(1) << i);
        int col = c.edge_colour(v, i);
        f[u][col] = std::min(f[u][col], 0);
    }
    int best = inf;
    for (int t = 1; t <= n + 4; ++t) {
        for (int col = 0; col < c.colours; ++col) best = std::min(best, f[target][col]);
        std::vector<std::vector<int>> g(verts, std::vector<int>(c.colours, inf));
        for (uint64_t u = 0; u < verts; ++u)
            for (int col = 0; col < c.colours; ++col) {
                if (f[u][col] >= inf) continue;
                for (int i = 0; i < n; ++i) {
                    uint64_t w = u ^ (uint64_t(1) << i);
                    int c2 = c.edge_colour(u, i);
                    int nd = f[u][col] + (c2 != col ? 1 : 0);
                    g[w][c2] = std::min(g[w][c2], nd);
                }
            }
        f.swap(g);
    }
    return best;
}

// oracle: minimum colour changes over all n! direction orders
int oracle_geodesic_changes(const EdgeColouring& c, uint64_t v) {
    int n = c.n;
    std::vector<int> dirs(n);
    std::iota(dirs.begin(), dirs.end(), 0);
    int best = 1 << 20;
    do {
        uint64_t u = v;
        int changes = 0, last = -1;
        for (int i : dirs) {
            int col = c.edge_colour(u, i);
            if (last >= 0 && col != last) ++changes;
            last = col;
            u ^= uint64_t(1) << i;
        }
        best = std::min(best, changes);
    } while (std::next_permutation(dirs.begin(), dirs.end()));
    return best;
}

}  // namespace

TEST_CASE("antipodal colouring predicate") {
    CHECK_FALSE(is_antipodal_colouring(monochromatic_colouring(3)));
    for (uint64_t seed = 0; seed < 5; ++seed)
        CHECK(is_antipodal_colouring(antipodal_random_colouring(4, seed)));
    // parity-of-lower-endpoint-weight colouring: verdict computed directly
    EdgeColouring parity = layered_colouring(3, 1);
    bool verdict = is_antipodal_colouring(parity);
    // antipodal edge of (v, v+e_i) joins weights n-1-w(v) and n-w(v): for
    // n=3 the lower weights w and 2-w have equal parity, so colours agree
    CHECK_FALSE(verdict);
}

TEST_CASE("walk minimum matches the bounded-walk oracle") {
    std::mt19937_64 rng(2468);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + int(rng() % 5);  // 2..6
        int colours = 2 + int(rng() % 2);
        EdgeColouring c = random_colouring(n, colours, rng());
        uint64_t v = rng() & cube_mask(n);
        CHECK(min_changes_path(c, v) == oracle_walk_changes(c, v));
    }
}

TEST_CASE("geodesic DP matches the n! enumeration oracle") {
    std::mt19937_64 rng(1357);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + int(rng() % 4);  // 2..5
        EdgeColouring c = random_colouring(n, 2 + int(rng() % 2), rng());
        uint64_t v = rng() & cube_mask(n);
        CHECK(min_changes_geodesic(c, v) == oracle_geodesic_changes(c, v));
    }
    for (int it = 0; it < 5; ++it) {
        EdgeColouring c = random_colouring(6, 2, 100 + it);
        uint64_t v = it;
        CHECK(min_changes_geodesic(c, v) == oracle_geodesic_changes(c, v));
    }
}

TEST_CASE("monochromatic colouring: zero changes, full-length geodesics") {
    for (int n : {2, 3, 5}) {
        EdgeColouring c = monochromatic_colouring(n);
        for (uint64_t v = 0; v < (uint64_t(1) << n); ++v) {
            CHECK(min_changes_path(c, v) == 0);
            CHECK(min_changes_geodesic(c, v) == 0);
        }
        CHECK(average_min_changes(c) == Rational(0));
        CHECK(monochromatic_geodesic_length(c) == n);
    }
}

TEST_CASE("direction split: at most one change from anywhere") {
    for (int n : {3, 4, 6}) {
        EdgeColouring c = direction_split_colouring(n);
        for (uint64_t v = 0; v < (uint64_t(1) << n); ++v) {
            CHECK(min_changes_path(c, v) <= 1);
            CHECK(min_changes_geodesic(c, v) <= 1);
            CHECK(min_changes_geodesic(c, v) >= min_changes_path(c, v));
        }
    }
}

TEST_CASE("layered width-1: n-1 changes from the all-zeros vertex") {
    for (int n = 2; n <= 8; ++n) {
        EdgeColouring c = layered_colouring(n, 1);
        CHECK(min_changes_geodesic(c, 0) == n - 1);
        // cross-check against exhaustive path enumeration at n = 4
        if (n == 4)
            for (uint64_t v = 0; v < 16; ++v)
                CHECK(min_changes_path(c, v) == oracle_walk_changes(c, v));
    }
}

TEST_CASE("averages: swap invariance and walk vs geodesic order") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 5; ++it) {
        int n = 4 + int(rng() % 3);
        EdgeColouring c = random_colouring(n, 2, rng());
        EdgeColouring swapped = c;
        for (auto& x : swapped.col) x = 1 - x;
        CHECK(average_min_changes(c) == average_min_changes(swapped));
        CHECK(average_min_changes(c) <= average_min_changes_geodesic(c));
    }
    // threads do not change the value
    EdgeColouring c = random_colouring(6, 2, 12345);
    CHECK(average_min_changes(c, 1) == average_min_changes(c, 4));
}

TEST_CASE("layered averages for trend inspection") {
    for (int n = 6; n <= 9; ++n) {
        int w = 1;
        while (w * w < n) ++w;  // ceil(sqrt(n))
        EdgeColouring c = layered_colouring(n, w);
        Rational avg = average_min_changes(c);
        CHECK(avg > Rational(0));
        MESSAGE("layered width-", w, " average at n=", n, ": ", avg.str());
    }
}

TEST_CASE("monochromatic geodesic length meets the n/2 guarantee on random colourings") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        EdgeColouring c = random_colouring(8, 2, seed);
        CHECK(monochromatic_geodesic_length(c) >= 4);
    }
    // direction split keeps a full monochromatic block
    EdgeColouring split = direction_split_colouring(6);
    CHECK(monochromatic_geodesic_length(split) >= 3);
}

TEST_CASE("k-colour conjecture check") {
    for (int n : {4, 6}) {
        for (int k : {1, 2, 3}) {
            if (k + 1 > n) continue;
            EdgeColouring c = direction_partition_colouring(n, k + 1);
            KColourCheck r = k_colour_conjecture_check(c, k, true);
            CHECK(r.min_changes == k);  // every geodesic meets all k+1 classes
            CHECK(r.within_k);
        }
    }
    // k = 1 is the two-colour geodesic question
    EdgeColouring c = random_colouring(5, 2, 77);
    KColourCheck r = k_colour_conjecture_check(c, 1, true);
    int direct = 1 << 20;
    for (uint64_t v = 0; v < 32; ++v) direct = std::min(direct, min_changes_geodesic(c, v));
    CHECK(r.min_changes == direct);
    // random 3-colourings at n=6: verdicts recorded
    int within = 0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
        EdgeColouring c3 = random_colouring(6, 3, seed);
        if (k_colour_conjecture_check(c3, 2).within_k) ++within;
    }
    MESSAGE("random 3-colourings at n=6 within 2 changes: ", within, "/10");
}

TEST_CASE("antipodal equivalence: monochromatic geodesic iff at most one change") {
    // exhaustive over all 64 antipodal colourings of Q_3
    int checked = 0;
    for (uint32_t bits = 0; bits < 64; ++bits) {
        EdgeColouring c = monochromatic_colouring(3);
        c.colours = 2;
        // 6 antipodal edge pairs in Q_3, enumerate canonical representatives
        int pair_idx = 0;
        for (const auto& e : all_cube_edges(3)) {
            uint64_t mirror = antipode(e.lower, 3) & ~(uint64_t(1) << e.dir);
            if (e.lower > mirror) continue;
            uint8_t colour = (bits >> pair_idx) & 1;
            c.set_edge_colour(e.lower, e.dir, colour);
            c.set_edge_colour(mirror, e.dir, 1 - colour);
            ++pair_idx;
        }
        REQUIRE(pair_idx == 6);
        REQUIRE(is_antipodal_colouring(c));
        int best = 1 << 20;
        for (uint64_t v = 0; v < 8; ++v) best = std::min(best, min_changes_geodesic(c, v));
        bool mono = best == 0;
        bool one_change = best <= 1;
        CHECK(mono == one_change);
        ++checked;
    }
    CHECK(checked == 64);
    // sampled n = 5 antipodal colourings
    for (uint64_t seed = 0; seed < 10; ++seed) {
        EdgeColouring c = antipodal_random_colouring(5, seed);
        int best = 1 << 20;
        for (uint64_t v = 0; v < 32; ++v) best = std::min(best, min_changes_geodesic(c, v));
        CHECK((best == 0) == (best <= 1));
    }
}

TEST_CASE("certificates verify; tampering fails") {
    VerifierRegistry reg;
    register_antipodal_verifiers(reg);

    EdgeColouring c = layered_colouring(5, 1);
    Certificate avg = make_average_certificate(c, "layered-w1");
    CHECK(reg.verify(avg).ok);
    Certificate bad = avg;
    bad.value = "0";
    CHECK_FALSE(reg.verify(bad).ok);

    Certificate mono = make_mono_geodesic_certificate(random_colouring(6, 2, 3), "random");
    CHECK(reg.verify(mono).ok);

    Certificate kc = make_k_check_certificate(direction_partition_colouring(5, 3), "dirs", 2);
    CHECK(reg.verify(kc).ok);
    Certificate kbad = kc;
    kbad.witness["within_k"] = false;
    CHECK_FALSE(reg.verify(kbad).ok);
}

TEST_SUITE_END();
