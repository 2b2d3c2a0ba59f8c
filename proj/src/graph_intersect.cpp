#include "combex/graph_intersect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "combex/bitgraph.hpp"

namespace combex {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // pairs (i, i+1..n-1) start at i*n - i(i+3)/2 ... derived from lex order
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

LabeledGraph complement(const LabeledGraph& g) {
    uint64_t full = (uint64_t(1) << pair_count(g.n)) - 1;
    return {g.n, full & ~g.edges};
}

Pattern parse_pattern(const std::string& text) {
    Pattern h;
    std::stringstream ss(text);
    std::string item;
    int maxv = 0;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("pattern edge needs 'u-v'");
        int u = std::stoi(item.substr(0, dash));
        int v = std::stoi(item.substr(dash + 1));
        if (u == v || u < 1 || v < 1) throw std::invalid_argument("bad pattern edge");
        h.edges.emplace_back(u - 1, v - 1);
        maxv = std::max({maxv, u, v});
    }
    h.v = maxv;
    return h;
}

Pattern edge_pattern() { return {2, {{0, 1}}}; }
Pattern triangle_pattern() { return {3, {{0, 1}, {0, 2}, {1, 2}}}; }
Pattern path3_pattern() { return {4, {{0, 1}, {1, 2}, {2, 3}}}; }

Pattern clique_pattern(int t) {
    Pattern h;
    h.v = t;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) h.edges.emplace_back(i, j);
    return h;
}

namespace {

bool extend_injection(const LabeledGraph& g, const Pattern& h, std::vector<int>& map,
                      std::vector<char>& used, size_t next) {
    if (next == size_t(h.v)) return true;
    for (int target = 0; target < g.n; ++target) {
        if (used[target]) continue;
        bool ok = true;
        for (const auto& [u, v] : h.edges) {
            int a = -1, b = -1;
            if (u == int(next)) a = target, b = (v < int(next)) ? map[v] : -1;
            else if (v == int(next)) a = target, b = (u < int(next)) ? map[u] : -1;
            if (a >= 0 && b >= 0 && !((g.edges >> pair_index(g.n, a, b)) & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = target;
        used[target] = 1;
        if (extend_injection(g, h, map, used, next + 1)) return true;
        used[target] = 0;
    }
    return false;
}

}  // namespace

bool contains_copy(const LabeledGraph& g, const Pattern& h) {
    if (h.v > g.n) return false;
    std::vector<int> map(h.v, -1);
    std::vector<char> used(g.n, 0);
    return extend_injection(g, h, map, used, 0);
}

FamilyViolation is_H_intersecting(const std::vector<LabeledGraph>& family, const Pattern& h) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i; j < family.size(); ++j) {
            LabeledGraph inter{family[i].n, family[i].edges & family[j].edges};
            if (!contains_copy(inter, h)) return {false, std::pair{i, j}};
        }
    return {};
}

namespace {

bool colourable(const LabeledGraph& g, int k) {
    if (g.n == 0) return true;
    // order vertices by degree, descending
    std::vector<int> deg(g.n, 0), order(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j && ((g.edges >> pair_index(g.n, i, j)) & 1)) ++deg[i];
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    std::vector<int> colour(g.n, -1);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == g.n) return true;
        int v = order[idx];
        int cap = 0;
        for (int j = 0; j < idx; ++j) cap = std::max(cap, colour[order[j]] + 1);
        cap = std::min(k, cap + 1);  // first unused colour breaks symmetry
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int j = 0; j < idx; ++j) {
                int u = order[j];
                if (colour[u] == c && ((g.edges >> pair_index(g.n, v, u)) & 1)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colour[v] = c;
            if (rec(idx + 1)) return true;
            colour[v] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

int chromatic_number(const LabeledGraph& g) {
    if (g.n > 8) throw std::invalid_argument("chromatic_number is exact only for n <= 8");
    if (g.n == 0) return 0;
    if (g.edges == 0) return 1;
    for (int k = 1; k <= g.n; ++k)
        if (colourable(g, k)) return k;
    return g.n;
}

FamilyViolation is_chromatic_intersecting(const std::vector<LabeledGraph>& family, int t) {
    if (t < 1) throw std::invalid_argument("is_chromatic_intersecting needs t >= 1");
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i; j < family.size(); ++j) {
            LabeledGraph inter{family[i].n, family[i].edges & family[j].edges};
            if (chromatic_number(inter) < t) return {false, std::pair{i, j}};
        }
    return {};
}

ExactGResult exact_g(int n, const Pattern& h, const SearchBudget& budget) {
    if (n > 5) throw std::invalid_argument("exact_g supports n <= 5");
    std::vector<LabeledGraph> vertices;
    int m = pair_count(n);
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        LabeledGraph g{n, mask};
        if (contains_copy(g, h)) vertices.push_back(g);
    }
    BitGraph compat(int(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            LabeledGraph inter{n, vertices[i].edges & vertices[j].edges};
            if (contains_copy(inter, h)) compat.add_edge(int(i), int(j));
        }
    CliqueResult clique = max_clique(compat, budget);

    ExactGResult res;
    res.outcome = clique.outcome;
    res.value = clique.size;
    for (int idx : clique.witness) res.witness.push_back(vertices[idx]);
    return res;
}

// ---------------- certificates ----------------

namespace {

nlohmann::json family_witness(const std::vector<LabeledGraph>& family) {
    nlohmann::json graphs = nlohmann::json::array();
    for (const auto& g : family) graphs.push_back(g.edges);
    return nlohmann::json{{"graphs", graphs}};
}

}  // namespace

Certificate make_exact_g_certificate(const ExactGResult& r, int n, const std::string& pattern) {
    return make_certificate("graph-intersect/exact-g",
                            {{"n", std::to_string(n)}, {"pattern", pattern}},
                            r.outcome == Outcome::Proven ? "exact" : "bound", r.value.get_str(),
                            family_witness(r.witness));
}

void register_graph_intersect_verifiers(VerifierRegistry& reg) {
    reg.add("graph-intersect/exact-g", [](const Certificate& c) -> VerifyResult {
        int n = std::stoi(c.params.at("n"));
        Pattern h = parse_pattern(c.params.at("pattern"));
        std::vector<LabeledGraph> family;
        for (const auto& j : c.witness.at("graphs"))
            family.push_back({n, j.get<uint64_t>()});
        if (BigInt(int(family.size())) != BigInt(c.value)) return {false, "witness size mismatch"};
        std::vector<LabeledGraph> sorted = family;
        std::sort(sorted.begin(), sorted.end(),
                  [](const LabeledGraph& a, const LabeledGraph& b) { return a.edges < b.edges; });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return {false, "duplicate graphs in witness"};
        auto check = is_H_intersecting(family, h);
        if (!check.ok) return {false, "witness family is not H-intersecting"};
        // the trivial upper bound must hold for any H with an edge
        if (!h.edges.empty() && BigInt(c.value) > pow2(pair_count(n) - 1))
            return {false, "value exceeds the trivial bound"};
        return {true, "witness family verified"};
    });
}

}  // namespace combex
