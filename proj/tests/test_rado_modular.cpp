#include <doctest.h>

#include <functional>

#include "combex/rado_modular.hpp"

using namespace combex;

TEST_SUITE_BEGIN("rado");

namespace {

// direct oracle: valuation of every non-empty subset sum
int oracle_d(const ModularInstance& inst) {
    int k = int(inst.a.size());
    long long mod = inst.modulus();
    int best = 0;
    for (uint32_t s = 1; s < (uint32_t(1) << k); ++s) {
        long long sum = 0;
        for (int i = 0; i < k; ++i)
            if ((s >> i) & 1) sum = (sum + inst.a[i]) % mod;
        int val = 0;
        if (sum == 0)
            val = inst.r;
        else
            while (sum % 2 == 0 && val < inst.r) {
                sum /= 2;
                ++val;
            }
        best = std::max(best, val);
    }
    return best;
}

}  // namespace

TEST_CASE("compute_d examples") {
    CHECK(compute_d(make_instance(2, {1, 1})) == 1);   // sums 1 and 2
    CHECK(compute_d(make_instance(3, {3, 5})) == 3);   // 3+5 = 8 = 0 mod 8
    CHECK(compute_d(make_instance(5, {1})) == 0);
}

TEST_CASE("compute_d matches the subset-valuation oracle for all k <= 4, r <= 4") {
    for (int r = 0; r <= 4; ++r) {
        long long mod = 1LL << r;
        for (int k = 1; k <= 4; ++k) {
            // enumerate every coefficient tuple
            std::vector<long long> a(k, 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == k) {
                    ModularInstance inst = make_instance(r, a);
                    CHECK(compute_d(inst) == oracle_d(inst));
                    return;
                }
                for (long long v = 0; v < mod; ++v) {
                    a[pos] = v;
                    rec(pos + 1);
                }
            };
            if (std::pow(double(mod), k) <= 5000) rec(0);
        }
    }
}

TEST_CASE("colouring checks for r=2, a=(1,1)") {
    ModularInstance inst = make_instance(2, {1, 1});
    REQUIRE(compute_d(inst) == 1);

    // constant colouring fails with witness of odd entries
    ModColouring constant{2, {0, 0, 0, 0}};
    auto bad = colouring_ok(constant, inst);
    REQUIRE_FALSE(bad.ok);
    // the reported solution must break the divisibility: entries not all even
    long long mod = 4, sum = 0;
    bool all_even = true;
    for (long long x : bad.violating) {
        sum = (sum + x) % mod;
        all_even = all_even && (x % 2 == 0);
    }
    CHECK(sum == 0);
    CHECK_FALSE(all_even);

    // separating 1 and 3 works
    ModColouring split{2, {0, 0, 0, 1}};
    CHECK(colouring_ok(split, inst).ok);
}

TEST_CASE("vacuous divisibility when d = r") {
    // r=1, a=(1,1): d = 1 = r, so 2^0 | x_i always holds
    ModularInstance inst = make_instance(1, {1, 1});
    CHECK(compute_d(inst) == 1);
    ModColouring constant{1, {0, 0}};
    CHECK(colouring_ok(constant, inst).ok);
    CHECK(min_K(inst, 4).k == 1);
}

TEST_CASE("min_K for (r=2, a=(1,1)) is 2") {
    ModularInstance inst = make_instance(2, {1, 1});
    MinKResult r = min_K(inst, 4);
    CHECK(r.outcome == Outcome::Proven);
    CHECK(r.k == 2);
    CHECK(colouring_ok(r.witness, inst).ok);
}

TEST_CASE("refining a valid colouring keeps it valid") {
    ModularInstance inst = make_instance(3, {1, 3, 2});
    MinKResult base = min_K(inst, 6);
    REQUIRE(base.k >= 1);
    ModColouring refined = base.witness;
    // split the largest class by parity of the element
    int target = 0;
    std::vector<int> count(base.k, 0);
    for (int c : refined.colour) ++count[c];
    for (int c = 0; c < base.k; ++c)
        if (count[c] > count[target]) target = c;
    for (size_t x = 0; x < refined.colour.size(); ++x)
        if (refined.colour[x] == target && x % 2 == 1) refined.colour[x] = base.k;
    CHECK(colouring_ok(refined, inst).ok);
}

TEST_CASE("min_K certificate verifies; tampering fails") {
    VerifierRegistry reg;
    register_rado_verifiers(reg);
    ModularInstance inst = make_instance(2, {1, 1});
    MinKResult r = min_K(inst, 4);
    Certificate c = make_min_k_certificate(inst, r);
    CHECK(reg.verify(c).ok);
    Certificate bad = c;
    bad.witness["classes"] = {{0, 1, 2, 3}, nlohmann::json::array()};
    CHECK_FALSE(reg.verify(bad).ok);
}

TEST_SUITE_END();
