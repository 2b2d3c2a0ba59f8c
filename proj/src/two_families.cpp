#include "combex/two_families.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "combex/cube.hpp"

namespace combex {

namespace {

std::string set_str(uint64_t s) {
    std::string out = "{";
    bool first = true;
    while (s) {
        int e = std::countr_zero(s);
        s &= s - 1;
        if (!first) out += ",";
        out += std::to_string(e + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace

SystemCheck check_bollobas(const PairSystem& s) {
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        auto [A, B] = s.pairs[i];
        if (std::popcount(A) != s.a) return {false, "|A_" + std::to_string(i + 1) + "| != a"};
        if (std::popcount(B) != s.b) return {false, "|B_" + std::to_string(i + 1) + "| != b"};
        if (A & B) return {false, "A_" + std::to_string(i + 1) + " meets B_" + std::to_string(i + 1)};
    }
    for (size_t i = 0; i < s.pairs.size(); ++i)
        for (size_t j = 0; j < s.pairs.size(); ++j) {
            if (i == j) continue;
            if ((s.pairs[i].first & s.pairs[j].second) == 0)
                return {false, "A_" + std::to_string(i + 1) + " misses B_" + std::to_string(j + 1)};
        }
    return {};
}

SystemCheck check_conjecture(const PairSystem& s) {
    if (!(s.b >= s.a && s.a >= 2)) throw std::invalid_argument("check_conjecture needs b >= a >= 2");
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        auto [A, B] = s.pairs[i];
        if (std::popcount(A) != s.a) return {false, "|A_" + std::to_string(i + 1) + "| != a"};
        if (std::popcount(B) != s.b) return {false, "|B_" + std::to_string(i + 1) + "| != b"};
        if (std::popcount(A & B) != 2)
            return {false, "|A_" + std::to_string(i + 1) + " cap B_" + std::to_string(i + 1) + "| != 2"};
    }
    // condition 2: i != j, k unrestricted (k = i and k = j included)
    for (size_t i = 0; i < s.pairs.size(); ++i)
        for (size_t j = 0; j < s.pairs.size(); ++j) {
            if (i == j) continue;
            uint64_t cross = s.pairs[i].first & s.pairs[j].second;
            for (size_t k = 0; k < s.pairs.size(); ++k) {
                uint64_t diag = s.pairs[k].first & s.pairs[k].second;
                if ((cross & ~diag) == 0)
                    return {false, "A_" + std::to_string(i + 1) + " cap B_" + std::to_string(j + 1) +
                                       " = " + set_str(cross) + " lies inside A_" +
                                       std::to_string(k + 1) + " cap B_" + std::to_string(k + 1)};
            }
        }
    return {};
}

BigInt conj_bound(int a, int b) {
    if (!(b >= a && a >= 2)) throw std::invalid_argument("conj_bound needs b >= a >= 2");
    BigInt sum = 0;
    for (int i = 2; i <= a; ++i) sum += pow2(i - 2) * binomial(a + b - 2 * i, a - i);
    return sum;
}

PairSystem tight_construction(int a, int b) {
    if (!(b >= a && a >= 2)) throw std::invalid_argument("tight_construction needs b >= a >= 2");
    int ground = a + b - 2;
    uint64_t ground_mask = (uint64_t(1) << ground) - 1;
    PairSystem s;
    s.a = a;
    s.b = b;
    for (int c = 2; c <= a; ++c) {
        uint64_t pair_c = (uint64_t(1) << (2 * c - 4)) | (uint64_t(1) << (2 * c - 3));
        // one element from each earlier pair {2d-3, 2d-2}, 2 <= d < c
        int earlier = c - 2;
        uint64_t free_mask = ground_mask & ~((uint64_t(1) << (2 * (c - 1))) - 1);
        for (uint64_t sel = 0; sel < (uint64_t(1) << earlier); ++sel) {
            uint64_t chosen = pair_c;
            for (int d = 2; d < c; ++d) {
                int lo = 2 * d - 4, hi = 2 * d - 3;
                chosen |= uint64_t(1) << (((sel >> (d - 2)) & 1) ? hi : lo);
            }
            for_each_combination(ground - 2 * (c - 1), a - c, [&](uint64_t pick) {
                // map pick bits onto the free positions
                uint64_t A = chosen;
                uint64_t rest = free_mask;
                int bitpos = 0;
                while (rest) {
                    int e = std::countr_zero(rest);
                    rest &= rest - 1;
                    if ((pick >> bitpos) & 1) A |= uint64_t(1) << e;
                    ++bitpos;
                }
                uint64_t B = (ground_mask & ~A) | pair_c;
                s.pairs.emplace_back(A, B);
            });
        }
    }
    return s;
}

PairSystem reduced_system(const PairSystem& s) {
    PairSystem r;
    r.a = s.a - 2;
    r.b = s.b;
    for (auto [A, B] : s.pairs) r.pairs.emplace_back(A & ~B, B);
    return r;
}

namespace {

struct PairSearch {
    int a, b, ground;
    SearchClock clock;
    std::vector<std::pair<uint64_t, uint64_t>> candidates;
    std::vector<size_t> stack;
    std::vector<size_t> best;

    PairSearch(int a_, int b_, int g, const SearchBudget& bud)
        : a(a_), b(b_), ground(g), clock(bud) {
        // all pairs (A, B) with the required sizes and |A cap B| = 2
        for_each_combination(ground, a, [&](uint64_t A) {
            for_each_combination(ground, b, [&](uint64_t B) {
                if (std::popcount(A & B) == 2) candidates.emplace_back(A, B);
            });
        });
    }

    bool compatible(size_t cand) const {
        auto [An, Bn] = candidates[cand];
        uint64_t diag_n = An & Bn;
        // triples where the new pair plays i, j or k
        for (size_t x : stack) {
            auto [Ax, Bx] = candidates[x];
            uint64_t diag_x = Ax & Bx;
            uint64_t c1 = An & Bx;  // i = new, j = x
            uint64_t c2 = Ax & Bn;  // i = x, j = new
            if ((c1 & ~diag_n) == 0 || (c1 & ~diag_x) == 0) return false;
            if ((c2 & ~diag_n) == 0 || (c2 & ~diag_x) == 0) return false;
            for (size_t k : stack) {
                uint64_t diag_k = candidates[k].first & candidates[k].second;
                if ((c1 & ~diag_k) == 0 || (c2 & ~diag_k) == 0) return false;
            }
            // old cross pairs against the new diagonal
            for (size_t y : stack) {
                if (x == y) continue;
                if (((Ax & candidates[y].second) & ~diag_n) == 0) return false;
            }
        }
        return true;
    }

    void dfs(size_t from) {
        if (clock.tick()) return;
        if (stack.size() > best.size()) best = stack;
        for (size_t c = from; c < candidates.size(); ++c) {
            if (stack.size() + (candidates.size() - c) <= best.size()) break;
            if (!compatible(c)) continue;
            stack.push_back(c);
            dfs(c + 1);
            stack.pop_back();
            if (clock.stopped()) return;
        }
    }
};

}  // namespace

ExactMaxPairs exact_max_conjecture(int a, int b, int ground, const SearchBudget& budget) {
    if (!(b >= a && a >= 2)) throw std::invalid_argument("exact_max_conjecture needs b >= a >= 2");
    if (ground < 1 || ground > 16) throw std::invalid_argument("ground set too large for exact search");
    PairSearch s(a, b, ground, budget);
    s.dfs(0);
    ExactMaxPairs res;
    res.outcome = s.clock.stopped() ? Outcome::Budget : Outcome::Proven;
    res.value = int(s.best.size());
    res.witness.a = a;
    res.witness.b = b;
    for (size_t c : s.best) res.witness.pairs.push_back(s.candidates[c]);
    return res;
}

// ---------------- certificates ----------------

namespace {

nlohmann::json system_witness(const PairSystem& s) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [A, B] : s.pairs) {
        std::vector<int> av, bv;
        for (int e = 0; e < 64; ++e) {
            if ((A >> e) & 1) av.push_back(e + 1);
            if ((B >> e) & 1) bv.push_back(e + 1);
        }
        pairs.push_back({{"A", av}, {"B", bv}});
    }
    return nlohmann::json{{"pairs", pairs}};
}

PairSystem system_from_witness(const nlohmann::json& w, int a, int b) {
    PairSystem s;
    s.a = a;
    s.b = b;
    for (const auto& jp : w.at("pairs")) {
        uint64_t A = 0, B = 0;
        for (int e : jp.at("A")) A |= uint64_t(1) << (e - 1);
        for (int e : jp.at("B")) B |= uint64_t(1) << (e - 1);
        s.pairs.emplace_back(A, B);
    }
    return s;
}

}  // namespace

Certificate make_two_families_construct_certificate(int a, int b) {
    PairSystem s = tight_construction(a, b);
    auto check = check_conjecture(s);
    Certificate c = make_certificate(
        "two-families/construct", {{"a", std::to_string(a)}, {"b", std::to_string(b)}},
        "construction", std::to_string(s.pairs.size()), system_witness(s));
    c.witness["conjecture_bound"] = conj_bound(a, b).get_str();
    c.witness["conditions_hold"] = check.ok;
    return c;
}

Certificate make_two_families_exact_certificate(const ExactMaxPairs& r, int a, int b, int ground) {
    return make_certificate("two-families/exact-max",
                            {{"a", std::to_string(a)},
                             {"b", std::to_string(b)},
                             {"ground", std::to_string(ground)}},
                            r.outcome == Outcome::Proven ? "exact" : "bound",
                            std::to_string(r.value), system_witness(r.witness));
}

void register_two_families_verifiers(VerifierRegistry& reg) {
    reg.add("two-families/construct", [](const Certificate& c) -> VerifyResult {
        int a = std::stoi(c.params.at("a"));
        int b = std::stoi(c.params.at("b"));
        PairSystem s = system_from_witness(c.witness, a, b);
        if (std::to_string(s.pairs.size()) != c.value) return {false, "size mismatch"};
        if (BigInt(c.value) != conj_bound(a, b)) return {false, "size differs from the bound formula"};
        auto check = check_conjecture(s);
        if (!check.ok) return {false, "conditions fail: " + check.violation};
        return {true, "construction verified"};
    });

    reg.add("two-families/exact-max", [](const Certificate& c) -> VerifyResult {
        int a = std::stoi(c.params.at("a"));
        int b = std::stoi(c.params.at("b"));
        int ground = std::stoi(c.params.at("ground"));
        PairSystem s = system_from_witness(c.witness, a, b);
        if (int(s.pairs.size()) != std::stoi(c.value)) return {false, "witness size mismatch"};
        for (auto [A, B] : s.pairs)
            if ((A | B) >> ground) return {false, "witness uses elements outside the ground set"};
        if (!s.pairs.empty()) {
            auto check = check_conjecture(s);
            if (!check.ok) return {false, "conditions fail: " + check.violation};
        }
        if (BigInt(std::stoi(c.value)) > binomial(a + b - 2, a - 2))
            return {false, "value exceeds the Bollobas reduction bound"};
        return {true, "witness system verified"};
    });
}

}  // namespace combex
