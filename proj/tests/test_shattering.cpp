#include <doctest.h>

#include <algorithm>
#include <random>

#include "combex/shattering.hpp"

using namespace combex;

TEST_SUITE_BEGIN("shatter");

TEST_CASE("permutation parse and format") {
    std::vector<int> p = parse_permutation("(2,4,1,5,3)");
    CHECK(p == std::vector<int>{2, 4, 1, 5, 3});
    CHECK(format_permutation(p) == "(2,4,1,5,3)");
    CHECK_THROWS(parse_permutation("(1,1,2)"));
}

TEST_CASE("S_5 example family: shattering pattern") {
    PermFamily f = s5_example_family();
    REQUIRE(f.perms.size() == 6);

    auto full = orders_induced(f, {2, 3, 5});
    CHECK(full.size() == 6);

    auto near = orders_induced(f, {1, 4, 5});
    CHECK(near.size() == 5);
    CHECK(near.count({4, 5, 1}) == 0);

    CHECK(t_shatters_all(f, 3, 4).ok);
    auto six = t_shatters_all(f, 3, 6);
    CHECK_FALSE(six.ok);  // {1,4,5} realises only 5 orders
    CHECK(orders_induced(f, six.failing).size() < 6);
}

TEST_CASE("single permutation induces exactly one order") {
    PermFamily f;
    f.n = 5;
    f.perms = {parse_permutation("(1,2,3,4,5)")};
    for (auto& x : std::vector<std::vector<int>>{{1, 2}, {2, 4, 5}, {1, 3, 4, 5}})
        CHECK(orders_induced(f, x).size() == 1);
}

TEST_CASE("identity plus reversal 2-shatters everything") {
    for (int n = 2; n <= 6; ++n) {
        PermFamily f;
        f.n = n;
        std::vector<int> id(n), rev(n);
        for (int i = 0; i < n; ++i) {
            id[i] = i + 1;
            rev[i] = n - i;
        }
        f.perms = {id, rev};
        for (int k = 2; k <= std::min(3, n); ++k) CHECK(t_shatters_all(f, k, 2).ok);
    }
}

TEST_CASE("order counts are bounded and monotone under adding permutations") {
    std::mt19937_64 rng(606);
    for (int it = 0; it < 50; ++it) {
        int n = 4 + int(rng() % 3);
        int k = 2 + int(rng() % 2);
        PermFamily f;
        f.n = n;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 1);
        int size = 1 + int(rng() % 5);
        for (int i = 0; i < size; ++i) {
            std::shuffle(p.begin(), p.end(), rng);
            f.perms.push_back(p);
        }
        std::vector<int> x;
        {
            std::vector<int> pool(n);
            std::iota(pool.begin(), pool.end(), 1);
            std::shuffle(pool.begin(), pool.end(), rng);
            x.assign(pool.begin(), pool.begin() + k);
            std::sort(x.begin(), x.end());
        }
        auto before = orders_induced(f, x);
        long long kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        CHECK((long long)before.size() <= std::min((long long)f.perms.size(), kfact));
        std::shuffle(p.begin(), p.end(), rng);
        f.perms.push_back(p);
        auto after = orders_induced(f, x);
        CHECK(after.size() >= before.size());
        for (const auto& o : before) CHECK(after.count(o));
    }
}

TEST_CASE("minimum families at t = 1 and t = 2") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= std::min(3, n); ++k) {
            auto r1 = min_family(n, k, 1);
            CHECK(r1.outcome == Outcome::Proven);
            CHECK(r1.value == 1);
            if (k >= 2) {
                auto r2 = min_family(n, k, 2);
                CHECK(r2.outcome == Outcome::Proven);
                CHECK(r2.value == 2);
                CHECK(t_shatters_all(r2.witness, k, 2).ok);
            }
        }
}

TEST_CASE("exact minimum at n=5, k=3, t=4") {
    auto r = min_family(5, 3, 4);
    REQUIRE(r.outcome == Outcome::Proven);
    CHECK(r.value >= 4);  // each permutation adds at most one order
    CHECK(r.value <= 6);  // the S_5 example family is a witness
    CHECK(t_shatters_all(r.witness, 3, 4).ok);
    MESSAGE("min family 4-shattering all 3-subsets of [5]: ", r.value);
}

TEST_CASE("minimum is monotone in t and in n") {
    int prev = 0;
    for (int t = 1; t <= 4; ++t) {
        auto r = min_family(5, 3, t);
        REQUIRE(r.outcome == Outcome::Proven);
        CHECK(r.value >= prev);
        prev = r.value;
    }
    int prev_n = 0;
    for (int n = 3; n <= 5; ++n) {
        auto r = min_family(n, 3, 3);
        REQUIRE(r.outcome == Outcome::Proven);
        CHECK(r.value >= prev_n);
        prev_n = r.value;
    }
}

TEST_CASE("certificates verify; tampering fails") {
    VerifierRegistry reg;
    register_shattering_verifiers(reg);

    Certificate s5 = make_s5_verification_certificate();
    CHECK(reg.verify(s5).ok);
    Certificate bad = s5;
    bad.witness["perms"][1] = "(1,2,3,4,5)";  // duplicate identity: shattering degrades
    CHECK_FALSE(reg.verify(bad).ok);

    auto r = min_family(5, 3, 4);
    Certificate mf = make_min_family_certificate(5, 3, 4, r);
    CHECK(reg.verify(mf).ok);
}

TEST_SUITE_END();
