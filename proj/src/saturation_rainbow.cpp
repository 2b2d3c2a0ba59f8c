#include "combex/saturation_rainbow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace combex {

namespace {

// anySub[m]: some member of f is a subset of m; anySup[m]: superset.
void subset_tables(const SubsetFamily& f, std::vector<char>& any_sub, std::vector<char>& any_sup) {
    uint32_t u = f.universe_size();
    any_sub.assign(u, 0);
    any_sup.assign(u, 0);
    for (uint32_t m = 0; m < u; ++m) {
        any_sub[m] = f.test(m);
        for (int i = 0; i < f.n && !any_sub[m]; ++i)
            if ((m >> i) & 1) any_sub[m] |= any_sub[m & ~(uint32_t(1) << i)];
    }
    for (uint32_t m = u; m-- > 0;) {
        any_sup[m] = f.test(m);
        for (int i = 0; i < f.n && !any_sup[m]; ++i)
            if (!((m >> i) & 1)) any_sup[m] |= any_sup[m | (uint32_t(1) << i)];
    }
}

uint32_t find_subset_member(const SubsetFamily& f, uint32_t m) {
    for (uint32_t a = 0; a < f.universe_size(); ++a)
        if (f.test(a) && (a & ~m) == 0) return a;
    return ~uint32_t(0);
}

uint32_t find_superset_member(const SubsetFamily& f, uint32_t m) {
    for (uint32_t d = 0; d < f.universe_size(); ++d)
        if (f.test(d) && (m & ~d) == 0) return d;
    return ~uint32_t(0);
}

}  // namespace

DiamondCheck contains_induced_diamond(const SubsetFamily& f) {
    std::vector<uint32_t> members = f.members();
    std::vector<char> any_sub, any_sup;
    subset_tables(f, any_sub, any_sup);
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            uint32_t b = members[i], c = members[j];
            if ((b & ~c) == 0 || (c & ~b) == 0) continue;  // comparable
            uint32_t meet = b & c, join = b | c;
            if (any_sub[meet] && any_sup[join]) {
                DiamondCheck res;
                res.found = true;
                res.witness = {find_subset_member(f, meet), b, c, find_superset_member(f, join)};
                return res;
            }
        }
    return {};
}

SaturationCheck is_diamond_saturated(const SubsetFamily& f) {
    if (contains_induced_diamond(f).found)
        throw std::invalid_argument("is_diamond_saturated: family already contains a diamond");
    for (uint32_t m = 0; m < f.universe_size(); ++m) {
        if (f.test(m)) continue;
        SubsetFamily ext = f;
        ext.set(m);
        if (!contains_induced_diamond(ext).found) return {false, m};
    }
    return {true, 0};
}

SubsetFamily singletons_with_empty(int n) {
    SubsetFamily f(n);
    f.set(0);
    for (int i = 0; i < n; ++i) f.set(uint32_t(1) << i);
    return f;
}

SubsetFamily full_chain(int n) {
    SubsetFamily f(n);
    uint32_t m = 0;
    f.set(0);
    for (int i = 0; i < n; ++i) {
        m |= uint32_t(1) << i;
        f.set(m);
    }
    return f;
}

namespace {

struct SaturationSearch {
    int n;
    SearchClock clock;
    std::optional<SubsetFamily> found;

    SaturationSearch(int n_, const SearchBudget& b) : n(n_), clock(b) {}

    void dfs(SubsetFamily& f, uint32_t next, int remaining) {
        if (found || clock.tick()) return;
        if (remaining == 0) {
            if (is_diamond_saturated(f).saturated) found = f;
            return;
        }
        for (uint32_t m = next; m < f.universe_size(); ++m) {
            if (f.universe_size() - m < uint32_t(remaining)) break;
            f.set(m);
            if (!contains_induced_diamond(f).found) dfs(f, m + 1, remaining - 1);
            f.reset(m);
            if (found || clock.stopped()) return;
        }
    }
};

}  // namespace

MinSaturatedResult min_saturated(int n, const SearchBudget& budget) {
    if (n < 1 || n > 6) throw std::invalid_argument("min_saturated supports 1 <= n <= 6");
    SaturationSearch s(n, budget);
    for (int size = 1; size <= (1 << n); ++size) {
        SubsetFamily f(n);
        s.dfs(f, 0, size);
        if (s.found) {
            MinSaturatedResult res;
            res.outcome = Outcome::Proven;
            res.value = size;
            res.witness = *s.found;
            return res;
        }
        if (s.clock.stopped()) break;
    }

    // budget ran out: fall back to the named families
    MinSaturatedResult res;
    res.outcome = Outcome::Budget;
    for (const SubsetFamily& f : {singletons_with_empty(n), full_chain(n)}) {
        if (!contains_induced_diamond(f).found && is_diamond_saturated(f).saturated) {
            res.value = int(f.count());
            res.witness = f;
            return res;
        }
    }
    res.value = -1;  // no upper bound available
    return res;
}

// ---------------- rainbow path covers ----------------

bool is_proper_colouring(const EdgeColouredGraph& g) {
    for (size_t i = 0; i < g.edges.size(); ++i)
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            const auto& a = g.edges[i];
            const auto& b = g.edges[j];
            bool incident = a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
            if (incident && a[2] == b[2]) return false;
        }
    return true;
}

EdgeColouredGraph properly_coloured_complete(int n) {
    EdgeColouredGraph g;
    g.n = n;
    if (n % 2 == 0) {
        int m = n - 1;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) g.edges.push_back({i, j, (i + j) % m});
            g.edges.push_back({i, n - 1, (2 * i) % m});
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, (i + j) % n});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_rainbow_path(const EdgeColouredGraph& g, const std::vector<int>& path) {
    if (path.size() < 2) return false;
    std::vector<char> seen_v(g.n, 0);
    std::vector<char> seen_c;
    for (int v : path) {
        if (v < 0 || v >= g.n || seen_v[v]) return false;
        seen_v[v] = 1;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int u = std::min(path[i], path[i + 1]);
        int v = std::max(path[i], path[i + 1]);
        int colour = -1;
        for (const auto& e : g.edges)
            if (e[0] == u && e[1] == v) colour = e[2];
        if (colour < 0) return false;
        if (colour >= int(seen_c.size())) seen_c.resize(colour + 1, 0);
        if (seen_c[colour]) return false;
        seen_c[colour] = 1;
    }
    return true;
}

namespace {

struct PathSearch {
    int n;
    std::vector<std::vector<std::pair<int, int>>> adj;  // v -> (u, colour), active edges
    std::vector<int> best;

    std::vector<int> canonical(const std::vector<int>& p) const {
        std::vector<int> rev(p.rbegin(), p.rend());
        return std::min(p, rev);
    }

    void consider(const std::vector<int>& p) {
        if (p.size() < 2) return;
        std::vector<int> canon = canonical(p);
        if (canon.size() > best.size() || (canon.size() == best.size() && canon < best))
            best = canon;
    }

    void dfs(std::vector<int>& path, uint32_t visited, uint64_t colours) {
        consider(path);
        int cur = path.back();
        for (auto [next, col] : adj[cur]) {
            if ((visited >> next) & 1) continue;
            if ((colours >> col) & 1) continue;
            path.push_back(next);
            dfs(path, visited | (uint32_t(1) << next), colours | (uint64_t(1) << col));
            path.pop_back();
        }
    }

    std::vector<int> longest_exact() {
        best.clear();
        for (int v = 0; v < n; ++v) {
            std::vector<int> path{v};
            dfs(path, uint32_t(1) << v, 0);
        }
        return best;
    }

    std::vector<int> longest_heuristic() {
        best.clear();
        for (int v = 0; v < n; ++v) {
            std::vector<int> path{v};
            uint32_t visited = uint32_t(1) << v;
            uint64_t colours = 0;
            while (true) {
                int cur = path.back();
                int pick = -1, pick_col = -1;
                for (auto [next, col] : adj[cur])
                    if (!((visited >> next) & 1) && !((colours >> col) & 1) &&
                        (pick < 0 || next < pick)) {
                        pick = next;
                        pick_col = col;
                    }
                if (pick < 0) break;
                path.push_back(pick);
                visited |= uint32_t(1) << pick;
                colours |= uint64_t(1) << pick_col;
            }
            consider(path);
        }
        return best;
    }
};

}  // namespace

std::vector<std::vector<int>> greedy_rainbow_cover(const EdgeColouredGraph& g) {
    if (!is_proper_colouring(g)) throw std::invalid_argument("colouring is not proper");
    int max_colour = 0;
    for (const auto& e : g.edges) max_colour = std::max(max_colour, e[2]);
    if (max_colour >= 64) throw std::invalid_argument("at most 64 colours supported");

    std::vector<std::array<int, 3>> active = g.edges;
    std::vector<std::vector<int>> cover;
    while (!active.empty()) {
        PathSearch ps;
        ps.n = g.n;
        ps.adj.assign(g.n, {});
        for (const auto& e : active) {
            ps.adj[e[0]].emplace_back(e[1], e[2]);
            ps.adj[e[1]].emplace_back(e[0], e[2]);
        }
        std::vector<int> path = (g.n <= 12) ? ps.longest_exact() : ps.longest_heuristic();
        if (path.size() < 2) throw std::logic_error("no rainbow path found on a nonempty graph");
        cover.push_back(path);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int u = std::min(path[i], path[i + 1]);
            int v = std::max(path[i], path[i + 1]);
            active.erase(std::remove_if(active.begin(), active.end(),
                                        [&](const std::array<int, 3>& e) {
                                            return e[0] == u && e[1] == v;
                                        }),
                         active.end());
        }
    }
    return cover;
}

// ---------------- certificates ----------------

namespace {

nlohmann::json family_bits_witness(const SubsetFamily& f) {
    std::vector<std::string> sets;
    for (uint32_t m : f.members()) {
        std::string s(f.n, '0');
        for (int i = 0; i < f.n; ++i)
            if ((m >> i) & 1) s[i] = '1';
        sets.push_back(s);
    }
    std::sort(sets.begin(), sets.end());
    return nlohmann::json{{"sets", sets}};
}

SubsetFamily family_from_witness(const nlohmann::json& w, int n) {
    SubsetFamily f(n);
    for (const auto& j : w.at("sets")) {
        std::string s = j.get<std::string>();
        if (int(s.size()) != n) throw std::invalid_argument("set bitstring of wrong length");
        uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            if (s[i] == '1') m |= uint32_t(1) << i;
        f.set(m);
    }
    return f;
}

}  // namespace

Certificate make_min_saturated_certificate(const MinSaturatedResult& r, int n) {
    return make_certificate("saturation/min-saturated", {{"n", std::to_string(n)}},
                            r.outcome == Outcome::Proven ? "exact" : "bound",
                            std::to_string(r.value), family_bits_witness(r.witness));
}

Certificate make_rainbow_cover_certificate(const EdgeColouredGraph& g,
                                           const std::vector<std::vector<int>>& cover) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e[0], e[1], e[2]});
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : cover) paths.push_back(p);
    Certificate c = make_certificate(
        "rainbow/cover", {{"n", std::to_string(g.n)}}, "construction",
        std::to_string(cover.size()),
        nlohmann::json{{"edges", edges}, {"paths", paths}});
    c.witness["heuristic"] = g.n > 12;
    return c;
}

void register_saturation_rainbow_verifiers(VerifierRegistry& reg) {
    reg.add("saturation/min-saturated", [](const Certificate& c) -> VerifyResult {
        int n = std::stoi(c.params.at("n"));
        SubsetFamily f = family_from_witness(c.witness, n);
        if (std::to_string(f.count()) != c.value) return {false, "family size mismatch"};
        if (contains_induced_diamond(f).found) return {false, "witness family contains a diamond"};
        if (!is_diamond_saturated(f).saturated) return {false, "witness family is not saturated"};
        return {true, "witness family is diamond-saturated"};
    });

    reg.add("rainbow/cover", [](const Certificate& c) -> VerifyResult {
        int n = std::stoi(c.params.at("n"));
        EdgeColouredGraph g;
        g.n = n;
        for (const auto& je : c.witness.at("edges"))
            g.edges.push_back({je[0].get<int>(), je[1].get<int>(), je[2].get<int>()});
        if (!is_proper_colouring(g)) return {false, "colouring is not proper"};
        std::vector<std::vector<int>> cover;
        for (const auto& jp : c.witness.at("paths")) cover.push_back(jp.get<std::vector<int>>());
        if (std::to_string(cover.size()) != c.value) return {false, "path count mismatch"};
        std::map<std::pair<int, int>, int> used;
        for (const auto& p : cover) {
            if (!is_rainbow_path(g, p)) return {false, "a path is not a rainbow path"};
            for (size_t i = 0; i + 1 < p.size(); ++i) {
                auto key = std::minmax(p[i], p[i + 1]);
                if (++used[{key.first, key.second}] > 1) return {false, "paths share an edge"};
            }
        }
        if (used.size() != g.edges.size()) return {false, "paths do not cover every edge"};
        return {true, "rainbow edge-partition verified"};
    });
}

}  // namespace combex
