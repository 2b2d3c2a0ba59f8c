#include "combex/one_factorizations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace combex {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_perfect_matching(const CubeMatching& m) {
    if (int(m.edges.size()) != (1 << (m.d - 1))) return false;
    std::vector<char> hit(size_t(1) << m.d, 0);
    for (const auto& e : m.edges) {
        if (e.dir < 0 || e.dir >= m.d) return false;
        if ((e.lower >> e.dir) & 1) return false;
        if (hit[e.lower] || hit[e.upper()]) return false;
        hit[e.lower] = hit[e.upper()] = 1;
    }
    return true;
}

bool is_one_factorization(const OneFactorization& f) {
    if (int(f.factors.size()) != f.d) return false;
    size_t edge_total = 0;
    std::map<std::pair<uint64_t, int>, int> seen;
    for (const auto& m : f.factors) {
        if (m.d != f.d || !is_perfect_matching(m)) return false;
        for (const auto& e : m.edges) {
            if (++seen[{e.lower, e.dir}] > 1) return false;
            ++edge_total;
        }
    }
    return edge_total == size_t(f.d) << (f.d - 1);
}

OneFactorization direction_factorization(int d) {
    OneFactorization f;
    f.d = d;
    for (int dir = 0; dir < d; ++dir) {
        CubeMatching m;
        m.d = d;
        for (uint64_t v = 0; v < (uint64_t(1) << d); ++v)
            if (!((v >> dir) & 1)) m.edges.push_back({v, dir});
        f.factors.push_back(std::move(m));
    }
    return f;
}

bool union_connected(const OneFactorization& f, const std::vector<int>& idx) {
    if (idx.empty()) throw std::invalid_argument("union_connected: empty index set");
    int verts = 1 << f.d;
    DisjointSet ds(verts);
    for (int i : idx)
        for (const auto& e : f.factors.at(i).edges) ds.unite(int(e.lower), int(e.upper()));
    int root = ds.find(0);
    for (int v = 1; v < verts; ++v)
        if (ds.find(v) != root) return false;
    return true;
}

int r_of(const OneFactorization& f) {
    for (int r = 1; r <= f.d; ++r) {
        bool all_ok = true;
        for_each_combination(f.d, r, [&](uint64_t pick) {
            if (!all_ok) return;
            std::vector<int> idx;
            for (int i = 0; i < f.d; ++i)
                if ((pick >> i) & 1) idx.push_back(i);
            if (!union_connected(f, idx)) all_ok = false;
        });
        if (all_ok) return r;
    }
    return f.d;  // the union of all factors is Q_d, connected
}

namespace {

void enumerate_matchings(int d, std::vector<char>& matched, std::vector<CubeEdge>& cur,
                         std::vector<CubeMatching>& out) {
    int verts = 1 << d;
    int v = 0;
    while (v < verts && matched[v]) ++v;
    if (v == verts) {
        out.push_back({d, cur});
        return;
    }
    for (int dir = 0; dir < d; ++dir) {
        int u = v ^ (1 << dir);
        if (matched[u]) continue;
        matched[v] = matched[u] = 1;
        cur.push_back({uint64_t(std::min(v, u)), dir});
        enumerate_matchings(d, matched, cur, out);
        cur.pop_back();
        matched[v] = matched[u] = 0;
    }
}

}  // namespace

std::vector<CubeMatching> all_perfect_matchings(int d) {
    if (d < 1 || d > 4) throw std::invalid_argument("all_perfect_matchings supports 1 <= d <= 4");
    std::vector<CubeMatching> out;
    std::vector<char> matched(size_t(1) << d, 0);
    std::vector<CubeEdge> cur;
    enumerate_matchings(d, matched, cur, out);
    return out;
}

namespace {

// edge masks over the all_cube_edges(d) order
struct EdgeIndex {
    int d;
    std::vector<CubeEdge> edges;
    std::map<std::pair<uint64_t, int>, int> index;

    explicit EdgeIndex(int d_) : d(d_), edges(all_cube_edges(d_)) {
        for (size_t i = 0; i < edges.size(); ++i) index[{edges[i].lower, edges[i].dir}] = int(i);
    }
    uint64_t mask_of(const CubeMatching& m) const {
        uint64_t mask = 0;
        for (const auto& e : m.edges) mask |= uint64_t(1) << index.at({e.lower, e.dir});
        return mask;
    }
};

// automorphisms of Q_d: v -> perm(v) xor c
struct CubeAut {
    std::vector<int> perm;  // bit i -> bit perm[i]
    uint64_t c = 0;

    uint64_t apply_vertex(uint64_t v, int d) const {
        uint64_t y = 0;
        for (int i = 0; i < d; ++i)
            if ((v >> i) & 1) y |= uint64_t(1) << perm[i];
        return y ^ c;
    }
    CubeEdge apply_edge(const CubeEdge& e, int d) const {
        uint64_t a = apply_vertex(e.lower, d);
        int dir = perm[e.dir];
        uint64_t b = a ^ (uint64_t(1) << dir);
        return {std::min(a, b), dir};
    }
};

std::vector<CubeAut> all_cube_automorphisms(int d) {
    std::vector<CubeAut> out;
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        for (uint64_t c = 0; c < (uint64_t(1) << d); ++c) out.push_back({p, c});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

uint64_t apply_aut_to_mask(const CubeAut& g, uint64_t mask, const EdgeIndex& ei) {
    uint64_t out = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        CubeEdge img = g.apply_edge(ei.edges[i], ei.d);
        out |= uint64_t(1) << ei.index.at({img.lower, img.dir});
    }
    return out;
}

struct FactorizationSearch {
    int d;
    EdgeIndex ei;
    std::vector<uint64_t> pm_masks;
    std::vector<std::vector<int>> pm_by_edge;  // edge -> PMs containing it
    uint64_t full;
    SearchClock clock;

    std::vector<int> stack;
    std::function<void(const std::vector<int>&)> emit;
    std::optional<std::vector<char>> root_allowed;  // restriction for the first factor

    FactorizationSearch(int d_, const SearchBudget& b) : d(d_), ei(d_), clock(b) {
        auto pms = all_perfect_matchings(d);
        for (const auto& m : pms) pm_masks.push_back(ei.mask_of(m));
        pm_by_edge.assign(ei.edges.size(), {});
        for (size_t p = 0; p < pm_masks.size(); ++p)
            for (size_t e = 0; e < ei.edges.size(); ++e)
                if ((pm_masks[p] >> e) & 1) pm_by_edge[e].push_back(int(p));
        full = (ei.edges.size() == 64) ? ~uint64_t(0) : (uint64_t(1) << ei.edges.size()) - 1;
    }

    void dfs(uint64_t covered) {
        if (clock.tick()) return;
        if (covered == full) {
            emit(stack);
            return;
        }
        int e = std::countr_zero(~covered);
        for (int p : pm_by_edge[e]) {
            if (pm_masks[p] & covered) continue;
            if (stack.empty() && root_allowed && !(*root_allowed)[p]) continue;
            stack.push_back(p);
            dfs(covered | pm_masks[p]);
            stack.pop_back();
            if (clock.stopped()) return;
        }
    }

    OneFactorization to_factorization(const std::vector<int>& picks) const {
        OneFactorization f;
        f.d = d;
        for (int p : picks) {
            CubeMatching m;
            m.d = d;
            uint64_t mask = pm_masks[p];
            while (mask) {
                int i = std::countr_zero(mask);
                mask &= mask - 1;
                m.edges.push_back(ei.edges[i]);
            }
            f.factors.push_back(std::move(m));
        }
        return f;
    }
};

}  // namespace

std::vector<OneFactorization> all_one_factorizations_q3() {
    FactorizationSearch s(3, SearchBudget{});
    std::vector<OneFactorization> out;
    s.emit = [&](const std::vector<int>& picks) { out.push_back(s.to_factorization(picks)); };
    s.dfs(0);
    return out;
}

ExhaustiveR exhaustive_r(int d, const SearchBudget& budget) {
    if (d != 3 && d != 4) throw std::invalid_argument("exhaustive_r supports d in {3, 4}");
    FactorizationSearch s(d, budget);

    if (d == 4) {
        // first factor (the one through the lowest edge) taken up to the
        // stabiliser of that edge in Aut(Q_4); r_of is Aut-invariant
        auto auts = all_cube_automorphisms(d);
        std::vector<CubeAut> stab;
        CubeEdge e0 = s.ei.edges[0];
        for (const auto& g : auts)
            if (g.apply_edge(e0, d) == e0) stab.push_back(g);
        std::vector<char> allowed(s.pm_masks.size(), 0);
        for (size_t p = 0; p < s.pm_masks.size(); ++p) {
            if (!(s.pm_masks[p] & 1)) continue;
            uint64_t canon = s.pm_masks[p];
            for (const auto& g : stab)
                canon = std::min(canon, apply_aut_to_mask(g, s.pm_masks[p], s.ei));
            allowed[p] = (canon == s.pm_masks[p]);
        }
        s.root_allowed = allowed;
    }

    ExhaustiveR res;
    res.d = d;
    res.r = d + 1;
    s.emit = [&](const std::vector<int>& picks) {
        ++res.factorizations_seen;
        OneFactorization f = s.to_factorization(picks);
        int r = r_of(f);
        if (r < res.r) {
            res.r = r;
            res.witness = f;
        }
    };
    s.dfs(0);
    res.outcome = s.clock.stopped() ? Outcome::Budget : Outcome::Proven;
    return res;
}

// ---------------- generic bipartite machinery ----------------

BipartiteHost cube_host(int d) {
    BipartiteHost h;
    std::vector<int> xid(size_t(1) << d, -1), yid(size_t(1) << d, -1);
    int nx = 0, ny = 0;
    for (uint64_t v = 0; v < (uint64_t(1) << d); ++v)
        (weight(v) % 2 == 0 ? xid[v] = nx++ : yid[v] = ny++);
    h.nx = nx;
    h.adj.assign(nx, {});
    for (uint64_t v = 0; v < (uint64_t(1) << d); ++v) {
        if (weight(v) % 2 != 0) continue;
        for (int i = 0; i < d; ++i) h.adj[xid[v]].push_back(yid[v ^ (uint64_t(1) << i)]);
    }
    for (auto& a : h.adj) std::sort(a.begin(), a.end());
    return h;
}

HostMatching to_host_matching(const CubeMatching& m) {
    std::vector<int> xid(size_t(1) << m.d, -1), yid(size_t(1) << m.d, -1);
    int nx = 0, ny = 0;
    for (uint64_t v = 0; v < (uint64_t(1) << m.d); ++v)
        (weight(v) % 2 == 0 ? xid[v] = nx++ : yid[v] = ny++);
    HostMatching f(nx, -1);
    for (const auto& e : m.edges) {
        uint64_t a = e.lower, b = e.upper();
        if (weight(a) % 2 != 0) std::swap(a, b);
        f[xid[a]] = yid[b];
    }
    return f;
}

BipartiteHost complete_host(int m) {
    BipartiteHost h;
    h.nx = m;
    h.adj.assign(m, {});
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) h.adj[x].push_back(y);
    return h;
}

int matching_permutation_sign(const HostMatching& mi, const HostMatching& mj) {
    int n = int(mi.size());
    if (int(mj.size()) != n) throw std::invalid_argument("matchings on different hosts");
    std::vector<int> inv_j(n, -1);
    for (int x = 0; x < n; ++x) inv_j[mj[x]] = x;
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ++cycles;
        int y = x;
        while (!seen[y]) {
            seen[y] = 1;
            y = inv_j[mi[y]];
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

MatchingGraph matching_graph(const BipartiteHost& host, const std::vector<HostMatching>& m) {
    int nx = host.nx;
    if (nx % 2 != 0) throw std::invalid_argument("matching_graph: classes must have even size");
    std::map<std::pair<int, int>, int> covered;
    size_t host_edges = 0;
    for (int x = 0; x < nx; ++x) host_edges += host.adj[x].size();
    for (const auto& f : m) {
        if (int(f.size()) != nx) throw std::invalid_argument("matching with wrong class size");
        for (int x = 0; x < nx; ++x) {
            bool in_host =
                std::find(host.adj[x].begin(), host.adj[x].end(), f[x]) != host.adj[x].end();
            if (!in_host) throw std::invalid_argument("matching edge not in host");
            if (++covered[{x, f[x]}] > 1) throw std::invalid_argument("matchings overlap");
        }
    }
    if (covered.size() != host_edges) throw std::invalid_argument("matchings do not cover the host");

    MatchingGraph g;
    g.m = int(m.size());
    g.adj.assign(g.m, std::vector<char>(g.m, 0));
    for (int i = 0; i < g.m; ++i)
        for (int j = i + 1; j < g.m; ++j) {
            DisjointSet ds(2 * nx);
            for (int x = 0; x < nx; ++x) {
                ds.unite(x, nx + m[i][x]);
                ds.unite(x, nx + m[j][x]);
            }
            int root = ds.find(0);
            bool conn = true;
            for (int v = 1; v < 2 * nx; ++v)
                if (ds.find(v) != root) { conn = false; break; }
            g.adj[i][j] = g.adj[j][i] = conn;
        }

    // 2-colouring attempt
    std::vector<int> colour(g.m, -1);
    g.bipartite = true;
    for (int start = 0; start < g.m && g.bipartite; ++start) {
        if (colour[start] >= 0) continue;
        colour[start] = 0;
        std::vector<int> queue{start};
        while (!queue.empty() && g.bipartite) {
            int v = queue.back();
            queue.pop_back();
            for (int u = 0; u < g.m; ++u) {
                if (!g.adj[v][u]) continue;
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if (colour[u] == colour[v]) {
                    g.bipartite = false;
                    break;
                }
            }
        }
    }
    return g;
}

// ---------------- certificates ----------------

namespace {

nlohmann::json factorization_witness(const OneFactorization& f) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& m : f.factors) {
        std::vector<std::string> edges;
        for (const auto& e : m.edges)
            edges.push_back(vertex_bits(e.lower, f.d) + "-" + vertex_bits(e.upper(), f.d));
        std::sort(edges.begin(), edges.end());
        factors.push_back(edges);
    }
    return nlohmann::json{{"factors", factors}};
}

uint64_t parse_vertex_bits(const std::string& s) {
    uint64_t v = 0;
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') v |= uint64_t(1) << i;
    return v;
}

OneFactorization factorization_from_witness(const nlohmann::json& w, int d) {
    OneFactorization f;
    f.d = d;
    for (const auto& jf : w.at("factors")) {
        CubeMatching m;
        m.d = d;
        for (const auto& je : jf) {
            std::string s = je.get<std::string>();
            auto dash = s.find('-');
            uint64_t a = parse_vertex_bits(s.substr(0, dash));
            uint64_t b = parse_vertex_bits(s.substr(dash + 1));
            uint64_t diff = a ^ b;
            if (std::popcount(diff) != 1) throw std::invalid_argument("not a cube edge");
            int dir = std::countr_zero(diff);
            m.edges.push_back({std::min(a, b), dir});
        }
        f.factors.push_back(std::move(m));
    }
    return f;
}

}  // namespace

Certificate make_exhaustive_r_certificate(const ExhaustiveR& r) {
    Certificate c = make_certificate(
        "one-factor/exhaustive-r", {{"d", std::to_string(r.d)}},
        r.outcome == Outcome::Proven ? "exact" : "bound", std::to_string(r.r),
        factorization_witness(r.witness));
    c.witness["factorizations_seen"] = r.factorizations_seen;
    return c;
}

void register_one_factorization_verifiers(VerifierRegistry& reg) {
    reg.add("one-factor/exhaustive-r", [](const Certificate& c) -> VerifyResult {
        int d = std::stoi(c.params.at("d"));
        OneFactorization f = factorization_from_witness(c.witness, d);
        if (!is_one_factorization(f)) return {false, "witness is not a 1-factorization"};
        if (r_of(f) != std::stoi(c.value)) return {false, "witness does not attain the value"};
        return {true, "witness factorization attains r"};
    });
}

}  // namespace combex
