#include "combex/shattering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "combex/cube.hpp"

namespace combex {

std::vector<int> parse_permutation(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
    std::vector<int> p;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(std::stoi(item));
    int n = int(p.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
    return p;
}

std::string format_permutation(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

PermFamily s5_example_family() {
    PermFamily f;
    f.n = 5;
    for (const char* w : {"(1,2,3,4,5)", "(2,4,1,5,3)", "(5,3,4,1,2)", "(1,4,3,5,2)",
                          "(3,1,2,5,4)", "(5,1,2,4,3)"})
        f.perms.push_back(parse_permutation(w));
    return f;
}

std::set<std::vector<int>> orders_induced(const PermFamily& p, const std::vector<int>& x) {
    std::set<std::vector<int>> out;
    for (const auto& perm : p.perms) {
        std::vector<int> order;
        for (int value : perm)
            if (std::find(x.begin(), x.end(), value) != x.end()) order.push_back(value);
        if (order.size() != x.size()) throw std::invalid_argument("X is not a subset of [n]");
        out.insert(order);
    }
    return out;
}

ShatterCheck t_shatters_all(const PermFamily& p, int k, int t) {
    long long kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    if (t < 1 || t > kfact) throw std::invalid_argument("need 1 <= t <= k!");
    ShatterCheck res;
    for_each_combination(p.n, k, [&](uint64_t mask) {
        if (!res.ok) return;
        std::vector<int> x;
        for (int i = 0; i < p.n; ++i)
            if ((mask >> i) & 1) x.push_back(i + 1);
        if (int(orders_induced(p, x).size()) < t) {
            res.ok = false;
            res.failing = x;
        }
    });
    return res;
}

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Lehmer rank of the appearance order of subset `x` under `perm`
int order_rank(const std::vector<int>& perm, const std::vector<int>& x) {
    int k = int(x.size());
    std::vector<int> seq;  // positions of x's elements, as ranks within x
    for (int value : perm) {
        auto it = std::lower_bound(x.begin(), x.end(), value);
        if (it != x.end() && *it == value) seq.push_back(int(it - x.begin()));
    }
    int rank = 0;
    for (int i = 0; i < k; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < k; ++j)
            if (seq[j] < seq[i]) ++smaller;
        rank = rank * (k - i) + smaller;
    }
    return rank;
}

struct ShatterSearch {
    int n, k, t;
    SearchClock clock;
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<int>> subsets;
    std::vector<std::vector<uint32_t>> ord;  // [perm][subset] -> order rank
    std::vector<uint32_t> masks;
    bool found = false;
    std::vector<int> stack, solution;

    ShatterSearch(int n_, int k_, int t_, const SearchBudget& b) : n(n_), k(k_), t(t_), clock(b) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 1);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for_each_combination(n, k, [&](uint64_t mask) {
            std::vector<int> x;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) x.push_back(i + 1);
            subsets.push_back(x);
        });
        ord.assign(perms.size(), std::vector<uint32_t>(subsets.size()));
        for (size_t pi = 0; pi < perms.size(); ++pi)
            for (size_t si = 0; si < subsets.size(); ++si)
                ord[pi][si] = uint32_t(order_rank(perms[pi], subsets[si]));
        masks.assign(subsets.size(), 0);
    }

    int max_deficit() const {
        int worst = 0;
        for (uint32_t m : masks) worst = std::max(worst, t - std::popcount(m));
        return worst;
    }

    void dfs(size_t from, int remaining) {
        if (found || clock.tick()) return;
        int deficit = max_deficit();
        if (deficit == 0) {
            found = true;
            solution = stack;
            return;
        }
        if (deficit > remaining) return;
        for (size_t idx = from; idx < perms.size(); ++idx) {
            if (perms.size() - idx < size_t(remaining)) break;
            // skip permutations that contribute nothing new
            bool useful = false;
            for (size_t si = 0; si < subsets.size() && !useful; ++si)
                if (!((masks[si] >> ord[idx][si]) & 1)) useful = true;
            if (!useful) continue;
            std::vector<uint32_t> saved = masks;
            for (size_t si = 0; si < subsets.size(); ++si)
                masks[si] |= uint32_t(1) << ord[idx][si];
            stack.push_back(int(idx));
            dfs(idx + 1, remaining - 1);
            stack.pop_back();
            masks = saved;
            if (found || clock.stopped()) return;
        }
    }

    // deterministic greedy upper bound, used when the exact search times out
    std::vector<int> greedy() {
        std::vector<uint32_t> got(subsets.size(), 0);
        std::vector<int> picked{0};  // identity first
        for (size_t si = 0; si < subsets.size(); ++si) got[si] |= uint32_t(1) << ord[0][si];
        while (true) {
            int worst = 0;
            for (uint32_t m : got) worst = std::max(worst, t - std::popcount(m));
            if (worst == 0) break;
            size_t best_idx = 0;
            long long best_gain = -1;
            for (size_t idx = 0; idx < perms.size(); ++idx) {
                long long gain = 0;
                for (size_t si = 0; si < subsets.size(); ++si)
                    if (std::popcount(got[si]) < t && !((got[si] >> ord[idx][si]) & 1)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_idx = idx;
                }
            }
            if (best_gain <= 0) break;
            picked.push_back(int(best_idx));
            for (size_t si = 0; si < subsets.size(); ++si)
                got[si] |= uint32_t(1) << ord[best_idx][si];
        }
        return picked;
    }
};

}  // namespace

MinFamilyResult min_family(int n, int k, int t, const SearchBudget& budget) {
    if (n < 1 || n > 7) throw std::invalid_argument("min_family supports n <= 7");
    if (k < 1 || k > std::min(n, 4)) throw std::invalid_argument("min_family supports k <= 4");
    if (t < 1 || t > factorial(k)) throw std::invalid_argument("need 1 <= t <= k!");

    MinFamilyResult res;
    ShatterSearch s(n, k, t, budget);

    if (t == 1) {
        res.value = 1;
        res.witness.n = n;
        res.witness.perms = {s.perms[0]};
        return res;
    }

    // each permutation realises at most one order per subset, so size >= t;
    // the first permutation is the identity (relabelling symmetry)
    for (int size = t; size <= int(s.perms.size()); ++size) {
        s.masks.assign(s.subsets.size(), 0);
        for (size_t si = 0; si < s.subsets.size(); ++si) s.masks[si] |= uint32_t(1) << s.ord[0][si];
        s.stack = {0};
        s.found = false;
        s.dfs(1, size - 1);
        if (s.found) {
            res.outcome = Outcome::Proven;
            res.value = size;
            res.witness.n = n;
            for (int idx : s.solution) res.witness.perms.push_back(s.perms[idx]);
            return res;
        }
        if (s.clock.stopped()) {
            auto picked = s.greedy();
            res.outcome = Outcome::Budget;
            res.value = int(picked.size());
            res.witness.n = n;
            for (int idx : picked) res.witness.perms.push_back(s.perms[idx]);
            return res;
        }
    }
    throw std::logic_error("no t-shattering family exists at all sizes");  // unreachable: all of S_n works
}

// ---------------- certificates ----------------

namespace {

nlohmann::json family_witness(const PermFamily& f) {
    nlohmann::json perms = nlohmann::json::array();
    for (const auto& p : f.perms) perms.push_back(format_permutation(p));
    return nlohmann::json{{"perms", perms}};
}

PermFamily family_from_witness(const nlohmann::json& w, int n) {
    PermFamily f;
    f.n = n;
    for (const auto& j : w.at("perms")) f.perms.push_back(parse_permutation(j.get<std::string>()));
    for (const auto& p : f.perms)
        if (int(p.size()) != n) throw std::invalid_argument("permutation of wrong size");
    return f;
}

}  // namespace

Certificate make_s5_verification_certificate() {
    PermFamily f = s5_example_family();
    Certificate c = make_certificate("shatter/verify", {{"example", "paper-s5"}}, "verification",
                                     "4", family_witness(f));
    c.witness["k"] = 3;
    c.witness["fully_shattered"] = {2, 3, 5};
    c.witness["missing_subset"] = {1, 4, 5};
    c.witness["missing_order"] = {4, 5, 1};
    return c;
}

Certificate make_min_family_certificate(int n, int k, int t, const MinFamilyResult& r) {
    return make_certificate(
        "shatter/min-family",
        {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"t", std::to_string(t)}},
        r.outcome == Outcome::Proven ? "exact" : "bound", std::to_string(r.value),
        family_witness(r.witness));
}

void register_shattering_verifiers(VerifierRegistry& reg) {
    reg.add("shatter/verify", [](const Certificate& c) -> VerifyResult {
        PermFamily f = family_from_witness(c.witness, 5);
        int k = c.witness.at("k").get<int>();
        int t = std::stoi(c.value);
        if (!t_shatters_all(f, k, t).ok) return {false, "family does not t-shatter"};
        std::vector<int> full = c.witness.at("fully_shattered").get<std::vector<int>>();
        if (orders_induced(f, full).size() != 6) return {false, "claimed subset not fully shattered"};
        std::vector<int> missing_subset = c.witness.at("missing_subset").get<std::vector<int>>();
        std::vector<int> missing_order = c.witness.at("missing_order").get<std::vector<int>>();
        auto got = orders_induced(f, missing_subset);
        if (got.size() != 5) return {false, "claimed near-miss subset has wrong order count"};
        if (got.count(missing_order)) return {false, "claimed missing order is realised"};
        return {true, "shattering example verified"};
    });

    reg.add("shatter/min-family", [](const Certificate& c) -> VerifyResult {
        int n = std::stoi(c.params.at("n"));
        int k = std::stoi(c.params.at("k"));
        int t = std::stoi(c.params.at("t"));
        PermFamily f = family_from_witness(c.witness, n);
        if (std::to_string(f.perms.size()) != c.value) return {false, "family size mismatch"};
        if (!t_shatters_all(f, k, t).ok) return {false, "witness family does not t-shatter"};
        if (std::stoi(c.value) < t && c.kind == "exact")
            return {false, "value below the trivial lower bound"};
        return {true, "witness family verified"};
    });
}

}  // namespace combex
