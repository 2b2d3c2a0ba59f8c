#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "combex/bitgraph.hpp"
#include "combex/certificate.hpp"
#include "combex/exact_cover.hpp"
#include "combex/rational.hpp"

using namespace combex;

TEST_SUITE_BEGIN("core");

TEST_CASE("rational reduction against a naive non-reducing oracle") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    for (int i = 0; i < 1000; ++i) {
        long a = num(rng), c = num(rng);
        long b = den(rng), d = den(rng);
        Rational sum = Rational(a, b) + Rational(c, d);
        // naive route: common denominator, no reduction until the end
        Rational naive(a * d + c * b, b * d);
        CHECK(sum == naive);
        long g = std::__gcd(std::abs(sum.num().get_si()) , sum.den().get_si());
        CHECK((g == 1 || sum.num() == 0));
        CHECK(sum.den() > 0);
    }
}

TEST_CASE("rational normalisation and parsing") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(14, 7).str() == "2");
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("certificate round-trips byte-identically") {
    Certificate c = make_certificate("demo/problem", {{"n", "4"}, {"k", "2"}}, "exact", "14",
                                     nlohmann::json{{"items", {1, 2, 3}}});
    c.runtime_ms = 17;
    c.seed = 42;
    std::string bytes = c.serialize();
    Certificate back = Certificate::parse(bytes);
    CHECK(back.serialize() == bytes);
    CHECK(back.problem == "demo/problem");
    CHECK(back.params.at("k") == "2");
    CHECK(back.seed.has_value());
}

namespace {

// independent oracle: enumerate all cliques recursively, no bounds
void oracle_extend(const std::vector<std::vector<char>>& adj, std::vector<int>& cur, int from,
                   int& best) {
    best = std::max(best, int(cur.size()));
    int n = int(adj.size());
    for (int v = from; v < n; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!adj[u][v]) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(v);
        oracle_extend(adj, cur, v + 1, best);
        cur.pop_back();
    }
}

int oracle_max_clique(const std::vector<std::vector<char>>& adj) {
    std::vector<int> cur;
    int best = 0;
    oracle_extend(adj, cur, 0, best);
    return best;
}

}  // namespace

TEST_CASE("max_clique trivial graphs") {
    BitGraph empty(5);
    auto r = max_clique(empty);
    CHECK(r.size == 1);
    CHECK(r.witness == std::vector<int>{0});

    BitGraph complete(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) complete.add_edge(u, v);
    auto r2 = max_clique(complete);
    CHECK(r2.size == 6);
    CHECK(r2.outcome == Outcome::Proven);
    CHECK(r2.witness.size() == 6);
}

TEST_CASE("max_clique agrees with exhaustive enumeration on 200 random graphs") {
    std::mt19937_64 rng(991);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + int(rng() % 20);
        double p = 0.2 + 0.6 * (it % 7) / 6.0;
        BitGraph g(n);
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<>(0, 1)(rng) < p) {
                    g.add_edge(u, v);
                    adj[u][v] = adj[v][u] = 1;
                }
        auto r = max_clique(g);
        CHECK(r.outcome == Outcome::Proven);
        CHECK(r.size == oracle_max_clique(adj));
        // witness must be a clique of the reported size
        CHECK(int(r.witness.size()) == r.size);
        for (size_t i = 0; i < r.witness.size(); ++i)
            for (size_t j = i + 1; j < r.witness.size(); ++j)
                CHECK(g.has_edge(r.witness[i], r.witness[j]));
    }
}

TEST_CASE("max_clique parallel matches sequential") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 10; ++it) {
        int n = 30;
        BitGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        SearchBudget seq;
        SearchBudget par;
        par.threads = 4;
        auto a = max_clique(g, seq);
        auto b = max_clique(g, par);
        CHECK(a.size == b.size);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("exact_cover_min basics") {
    {
        ExactCoverInstance inst{1, {{0}}};
        auto r = exact_cover_min(inst, CoverMode::Partition);
        CHECK(r.outcome == Outcome::Proven);
        CHECK(r.count == 1);
    }
    {
        ExactCoverInstance inst{2, {{0}, {1}, {0, 1}}};
        auto r = exact_cover_min(inst, CoverMode::Partition);
        CHECK(r.count == 1);
        CHECK(r.chosen == std::vector<int>{2});
    }
    {
        // element 2 forces {1,2}, leaving 0 coverable only with overlap
        ExactCoverInstance inst{3, {{0, 1}, {1, 2}}};
        auto r = exact_cover_min(inst, CoverMode::Partition);
        CHECK(r.outcome == Outcome::Infeasible);
    }
    {
        ExactCoverInstance inst{2, {{0}, {1}, {0, 1}}};
        auto r = exact_cover_min(inst, CoverMode::Odd);
        CHECK(r.count == 1);
        CHECK(verify_cover(inst, CoverMode::Odd, r.chosen));
    }
}

namespace {

int oracle_cover_min(const ExactCoverInstance& inst, CoverMode mode) {
    int m = int(inst.blocks.size());
    int best = -1;
    for (uint32_t sub = 0; sub < (uint32_t(1) << m); ++sub) {
        std::vector<int> cnt(inst.universe, 0);
        for (int b = 0; b < m; ++b)
            if ((sub >> b) & 1)
                for (int e : inst.blocks[b]) ++cnt[e];
        bool ok = true;
        for (int e = 0; e < inst.universe && ok; ++e) {
            if (mode == CoverMode::Partition && cnt[e] != 1) ok = false;
            if (mode == CoverMode::Odd && cnt[e] % 2 != 1) ok = false;
        }
        if (ok) {
            int used = std::popcount(sub);
            if (best < 0 || used < best) best = used;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("exact_cover_min matches exhaustive subset enumeration") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        ExactCoverInstance inst;
        inst.universe = 3 + int(rng() % 6);
        int m = 4 + int(rng() % 9);  // <= 12 blocks, oracle enumerates 2^m subsets
        for (int b = 0; b < m; ++b) {
            std::vector<int> blk;
            for (int e = 0; e < inst.universe; ++e)
                if (rng() % 3 == 0) blk.push_back(e);
            if (blk.empty()) blk.push_back(int(rng() % inst.universe));
            inst.blocks.push_back(blk);
        }
        for (CoverMode mode : {CoverMode::Partition, CoverMode::Odd}) {
            int oracle = oracle_cover_min(inst, mode);
            auto r = exact_cover_min(inst, mode);
            if (oracle < 0) {
                CHECK(r.outcome == Outcome::Infeasible);
            } else {
                REQUIRE(r.outcome == Outcome::Proven);
                CHECK(r.count == oracle);
                CHECK(verify_cover(inst, mode, r.chosen));
            }
        }
    }
}

TEST_SUITE_END();
