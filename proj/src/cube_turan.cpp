#include "combex/cube_turan.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace combex {

namespace {

uint64_t subcube_key(const Subcube& s) { return (s.stars << kMaxCubeDim) | s.values; }

void check_homogeneous(const SubcubeSet& s) {
    for (const auto& m : s.members) {
        if (m.n != s.n || m.k() != s.k)
            throw std::invalid_argument("SubcubeSet member with wrong n or k");
        if (m.values & m.stars) throw std::invalid_argument("subcube with value on a star");
    }
}

}  // namespace

BigInt subcube_layer_size(int n, int k) { return binomial(n, k) * pow2(n - k); }

FreeCheck is_free(const SubcubeSet& s, int d) {
    if (!(s.k <= d && d <= s.n)) throw std::invalid_argument("is_free needs k <= d <= n");
    check_homogeneous(s);
    std::unordered_set<uint64_t> members;
    members.reserve(s.members.size() * 2);
    for (const auto& m : s.members) members.insert(subcube_key(m));

    for (const auto& t : all_subcubes(s.n, d)) {
        bool all_in = true;
        for (const auto& inner : subcubes_within(t, s.k)) {
            if (!members.count(subcube_key(inner))) {
                all_in = false;
                break;
            }
        }
        if (all_in) return {false, t};
    }
    return {true, std::nullopt};
}

std::string turan_construction_name(TuranConstruction c) {
    switch (c) {
        case TuranConstruction::WeightMod4K0: return "weight_mod4_k0";
        case TuranConstruction::C13: return "C13";
        case TuranConstruction::D2: return "D2";
        case TuranConstruction::C2: return "C2";
    }
    return "?";
}

std::optional<TuranConstruction> parse_turan_construction(const std::string& name) {
    if (name == "weight_mod4_k0") return TuranConstruction::WeightMod4K0;
    if (name == "C13") return TuranConstruction::C13;
    if (name == "D2") return TuranConstruction::D2;
    if (name == "C2") return TuranConstruction::C2;
    return std::nullopt;
}

int turan_construction_d(TuranConstruction c, int param) {
    switch (c) {
        case TuranConstruction::WeightMod4K0: return 3;
        case TuranConstruction::C13: return 3;
        case TuranConstruction::D2: return param + 1;
        case TuranConstruction::C2: return 3 * param + 2;
    }
    return 0;
}

SubcubeSet construct_turan(TuranConstruction kind, int n, int param) {
    if (n < 1 || n > kMaxCubeDim) throw std::invalid_argument("construct_turan: bad n");
    SubcubeSet out;
    out.n = n;
    switch (kind) {
        case TuranConstruction::WeightMod4K0: {
            out.k = 0;
            for (uint64_t v = 0; v < (uint64_t(1) << n); ++v)
                if (weight(v) % 4 != 0) out.members.push_back({n, 0, v});
            break;
        }
        case TuranConstruction::C13: {
            out.k = 1;
            for (const auto& s : all_subcubes(n, 1)) {
                int f = std::countr_zero(s.stars);
                int w0 = std::popcount(s.values & ((uint64_t(1) << f) - 1));
                int w1 = std::popcount(s.values >> (f + 1));
                if (!(w0 % 2 == 0 && w1 % 2 == 0)) out.members.push_back(s);
            }
            break;
        }
        case TuranConstruction::D2: {
            int d = param;
            if (d < 2 || n < d) throw std::invalid_argument("D2 needs a partition of [n] into d >= 2 parts");
            out.k = 2;
            // coordinate i (1-based) goes to part i mod d; parts differ in size by <= 1
            for (const auto& s : all_subcubes(n, 2)) {
                int lo = std::countr_zero(s.stars);
                int hi = 63 - std::countl_zero(s.stars);
                bool same_part = ((lo + 1) % d) == ((hi + 1) % d);
                bool zero_sum = std::popcount(s.values) % d == 0;
                if (!(same_part && zero_sum)) out.members.push_back(s);
            }
            break;
        }
        case TuranConstruction::C2: {
            int m = param;
            if (m < 1 || n < 2) throw std::invalid_argument("C2 needs m >= 1 and n >= 2");
            out.k = 2;
            for (const auto& s : all_subcubes(n, 2)) {
                int lo = std::countr_zero(s.stars);
                int hi = 63 - std::countl_zero(s.stars);
                int w0 = std::popcount(s.values & ((uint64_t(1) << lo) - 1));
                int w1 = std::popcount(s.values & (((uint64_t(1) << hi) - 1) & ~((uint64_t(1) << (lo + 1)) - 1)));
                int w2 = std::popcount(s.values >> (hi + 1));
                int q = m + 1;
                if (!(w0 % q == 0 && w1 % q == 0 && w2 % q == 0)) out.members.push_back(s);
            }
            break;
        }
    }
    return out;
}

// ---------------- exact ex_k(n,d) ----------------

namespace {

struct ExSearch {
    int n, k, d;
    SearchClock clock;
    std::vector<Subcube> universe;            // all k-subcubes
    std::vector<std::vector<int>> tlists;     // per d-subcube: contained k-subcube indices
    std::vector<std::vector<int>> in_t;       // per k-subcube: d-subcubes containing it
    std::vector<int> hit_count;               // per d-subcube: #excluded members of its list
    std::vector<char> excluded, forbidden;
    std::vector<int> stack;
    int best = -1;
    std::vector<int> best_set;

    ExSearch(int n_, int k_, int d_, const SearchBudget& b) : n(n_), k(k_), d(d_), clock(b) {}

    void build() {
        universe = all_subcubes(n, k);
        std::unordered_map<uint64_t, int> index;
        for (size_t i = 0; i < universe.size(); ++i) index[subcube_key(universe[i])] = int(i);
        for (const auto& t : all_subcubes(n, d)) {
            std::vector<int> list;
            for (const auto& inner : subcubes_within(t, k)) list.push_back(index.at(subcube_key(inner)));
            std::sort(list.begin(), list.end());
            tlists.push_back(std::move(list));
        }
        in_t.assign(universe.size(), {});
        for (size_t t = 0; t < tlists.size(); ++t)
            for (int u : tlists[t]) in_t[u].push_back(int(t));
        hit_count.assign(tlists.size(), 0);
        excluded.assign(universe.size(), 0);
        forbidden.assign(universe.size(), 0);
    }

    // greedy hitting set to seed the upper bound
    void greedy_seed() {
        std::vector<int> cnt(tlists.size(), 0);
        std::vector<char> ex(universe.size(), 0);
        std::vector<int> sol;
        while (true) {
            int open = -1;
            for (size_t t = 0; t < tlists.size(); ++t)
                if (cnt[t] == 0) { open = int(t); break; }
            if (open < 0) break;
            int pick = -1, gain = -1;
            for (int u : tlists[open]) {
                int g = 0;
                for (int t2 : in_t[u])
                    if (cnt[t2] == 0) ++g;
                if (g > gain) { gain = g; pick = u; }
            }
            ex[pick] = 1;
            sol.push_back(pick);
            for (int t2 : in_t[pick]) ++cnt[t2];
        }
        best = int(sol.size());
        best_set = sol;
    }

    int packing_lower_bound() {
        // greedy packing of pairwise-disjoint uncovered d-subcube lists
        std::vector<char> used(universe.size(), 0);
        int packed = 0;
        for (size_t t = 0; t < tlists.size(); ++t) {
            if (hit_count[t] > 0) continue;
            bool disjoint = true;
            for (int u : tlists[t])
                if (used[u]) { disjoint = false; break; }
            if (!disjoint) continue;
            for (int u : tlists[t]) used[u] = 1;
            ++packed;
        }
        return packed;
    }

    void exclude(int u) {
        excluded[u] = 1;
        stack.push_back(u);
        for (int t : in_t[u]) ++hit_count[t];
    }
    void unexclude(int u) {
        excluded[u] = 0;
        stack.pop_back();
        for (int t : in_t[u]) --hit_count[t];
    }

    void dfs(bool root) {
        if (clock.tick()) return;
        int open = -1;
        for (size_t t = 0; t < tlists.size(); ++t)
            if (hit_count[t] == 0) { open = int(t); break; }
        if (open < 0) {
            if (best < 0 || int(stack.size()) < best) {
                best = int(stack.size());
                best_set = stack;
            }
            return;
        }
        if (best >= 0 && int(stack.size()) + packing_lower_bound() >= best) return;

        std::vector<int> branch;
        for (int u : tlists[open])
            if (!forbidden[u]) branch.push_back(u);
        if (branch.empty()) return;
        if (root) branch.resize(1);  // symmetry: stab of the first d-subcube is transitive on its list

        std::vector<int> newly_forbidden;
        for (int u : branch) {
            exclude(u);
            dfs(false);
            unexclude(u);
            if (clock.stopped()) break;
            forbidden[u] = 1;
            newly_forbidden.push_back(u);
        }
        for (int u : newly_forbidden) forbidden[u] = 0;
    }
};

}  // namespace

TuranResult exact_ex(int n, int k, int d, const SearchBudget& budget) {
    if (!(0 <= k && k <= d && d <= n)) throw std::invalid_argument("exact_ex needs 0 <= k <= d <= n");
    BigInt total = subcube_layer_size(n, k);
    if (total > 100000) throw std::invalid_argument("exact_ex: |Q_k^n| too large for exact search");

    ExSearch s(n, k, d, budget);
    s.build();
    s.greedy_seed();
    s.dfs(true);

    TuranResult res;
    res.n = n;
    res.k = k;
    res.d = d;
    res.outcome = s.clock.stopped() ? Outcome::Budget : Outcome::Proven;
    res.value = total - s.best;
    res.witness.n = n;
    res.witness.k = k;
    std::vector<char> ex(s.universe.size(), 0);
    for (int u : s.best_set) ex[u] = 1;
    for (size_t i = 0; i < s.universe.size(); ++i)
        if (!ex[i]) res.witness.members.push_back(s.universe[i]);
    res.density = Rational(res.value, total);

    auto check = is_free(res.witness, d);
    if (!check.free) throw std::logic_error("exact_ex produced a non-free witness");
    return res;
}

std::vector<std::pair<int, Rational>> turan_density_profile(TuranConstruction kind, int param,
                                                            int n_lo, int n_hi) {
    std::vector<std::pair<int, Rational>> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        SubcubeSet s = construct_turan(kind, n, param);
        out.emplace_back(n, Rational(BigInt(s.members.size()), subcube_layer_size(n, s.k)));
    }
    return out;
}

// ---------------- certificates ----------------

namespace {

nlohmann::json subcube_set_witness(const SubcubeSet& s) {
    std::vector<std::string> words;
    words.reserve(s.members.size());
    for (const auto& m : s.members) words.push_back(subcube_to_string(m));
    std::sort(words.begin(), words.end());
    return nlohmann::json{{"subcubes", words}};
}

SubcubeSet subcube_set_from_witness(const nlohmann::json& w, int expect_n, int expect_k) {
    SubcubeSet s;
    s.n = expect_n;
    s.k = expect_k;
    for (const auto& j : w.at("subcubes")) {
        Subcube c = parse_subcube(j.get<std::string>());
        s.members.push_back(c);
    }
    return s;
}

}  // namespace

Certificate make_turan_free_certificate(TuranConstruction kind, int n, int param) {
    SubcubeSet s = construct_turan(kind, n, param);
    int d = turan_construction_d(kind, param);
    auto check = is_free(s, d);
    Certificate c = make_certificate(
        "cube-turan/free",
        {{"kind", turan_construction_name(kind)},
         {"n", std::to_string(n)},
         {"param", std::to_string(param)},
         {"d", std::to_string(d)}},
        "verification", check.free ? std::to_string(s.members.size()) : "not-free",
        subcube_set_witness(s));
    if (!check.free) c.witness["violator"] = subcube_to_string(*check.violator);
    return c;
}

Certificate make_turan_exact_certificate(const TuranResult& r) {
    Certificate c = make_certificate(
        "cube-turan/exact",
        {{"n", std::to_string(r.n)}, {"k", std::to_string(r.k)}, {"d", std::to_string(r.d)}},
        r.outcome == Outcome::Proven ? "exact" : "bound", r.value.get_str(),
        subcube_set_witness(r.witness));
    c.witness["density"] = r.density.str();
    return c;
}

Certificate make_turan_density_certificate(TuranConstruction kind, int param, int n_lo, int n_hi) {
    auto profile = turan_density_profile(kind, param, n_lo, n_hi);
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [n, dens] : profile) rows.push_back({{"n", n}, {"density", dens.str()}});
    return make_certificate("cube-turan/density",
                            {{"kind", turan_construction_name(kind)},
                             {"param", std::to_string(param)},
                             {"n_lo", std::to_string(n_lo)},
                             {"n_hi", std::to_string(n_hi)}},
                            "verification", profile.empty() ? "0" : profile.back().second.str(),
                            nlohmann::json{{"profile", rows}});
}

void register_cube_turan_verifiers(VerifierRegistry& reg) {
    reg.add("cube-turan/free", [](const Certificate& c) -> VerifyResult {
        auto kind = parse_turan_construction(c.params.at("kind"));
        if (!kind) return {false, "unknown construction"};
        int n = std::stoi(c.params.at("n"));
        int param = std::stoi(c.params.at("param"));
        int d = std::stoi(c.params.at("d"));
        SubcubeSet expect = construct_turan(*kind, n, param);
        SubcubeSet got = subcube_set_from_witness(c.witness, n, expect.k);
        auto sortcubes = [](std::vector<Subcube> v) { std::sort(v.begin(), v.end()); return v; };
        if (sortcubes(expect.members) != sortcubes(got.members))
            return {false, "witness does not match the named construction"};
        if (c.value != std::to_string(got.members.size())) return {false, "size mismatch"};
        auto check = is_free(got, d);
        if (!check.free) return {false, "witness set is not Q_d-free"};
        return {true, "free construction verified"};
    });

    reg.add("cube-turan/exact", [](const Certificate& c) -> VerifyResult {
        int n = std::stoi(c.params.at("n"));
        int k = std::stoi(c.params.at("k"));
        int d = std::stoi(c.params.at("d"));
        SubcubeSet got = subcube_set_from_witness(c.witness, n, k);
        std::vector<Subcube> sorted = got.members;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return {false, "duplicate subcubes in witness"};
        for (const auto& m : got.members)
            if (m.k() != k) return {false, "witness subcube with wrong k"};
        if (BigInt(c.value) != BigInt(int(got.members.size())))
            return {false, "witness size differs from value"};
        auto check = is_free(got, d);
        if (!check.free) return {false, "witness set is not Q_d-free"};
        return {true, "witness attains the stated value and is free"};
    });

    reg.add("cube-turan/density", [](const Certificate& c) -> VerifyResult {
        auto kind = parse_turan_construction(c.params.at("kind"));
        if (!kind) return {false, "unknown construction"};
        int param = std::stoi(c.params.at("param"));
        int n_lo = std::stoi(c.params.at("n_lo"));
        int n_hi = std::stoi(c.params.at("n_hi"));
        auto profile = turan_density_profile(*kind, param, n_lo, n_hi);
        const auto& rows = c.witness.at("profile");
        if (rows.size() != profile.size()) return {false, "row count mismatch"};
        for (size_t i = 0; i < profile.size(); ++i) {
            if (rows[i].at("n").get<int>() != profile[i].first) return {false, "n mismatch"};
            if (rows[i].at("density").get<std::string>() != profile[i].second.str())
                return {false, "density mismatch"};
        }
        return {true, "density profile verified"};
    });
}

}  // namespace combex
