#include "combex/bitgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace combex {

void BitGraph::add_edge(int u, int v) {
    if (u == v) return;
    row(u)[v >> 6] |= uint64_t(1) << (v & 63);
    row(v)[u >> 6] |= uint64_t(1) << (u & 63);
}

int BitGraph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
    return d;
}

namespace {

using Words = std::vector<uint64_t>;

bool empty_set(const Words& s) {
    for (uint64_t w : s) if (w) return false;
    return true;
}

int pop_lowest(Words& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i]) {
            int b = std::countr_zero(s[i]);
            s[i] &= s[i] - 1;
            return int(i) * 64 + b;
        }
    }
    return -1;
}

void intersect_neighbours(const BitGraph& g, const Words& p, int v, Words& out) {
    const uint64_t* r = g.row(v);
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] & r[i];
}

// Greedy colouring of P; emits vertices ordered by colour class, so bounds
// are non-decreasing along `order`.
void colour_sort(const BitGraph& g, const Words& p, std::vector<int>& order,
                 std::vector<int>& bounds) {
    order.clear();
    bounds.clear();
    Words uncoloured = p;
    Words cand(p.size());
    int colour = 0;
    while (!empty_set(uncoloured)) {
        ++colour;
        cand = uncoloured;
        while (true) {
            int v = pop_lowest(cand);
            if (v < 0) break;
            uncoloured[v >> 6] &= ~(uint64_t(1) << (v & 63));
            order.push_back(v);
            bounds.push_back(colour);
            const uint64_t* r = g.row(v);
            for (size_t i = 0; i < cand.size(); ++i) cand[i] &= ~r[i];
        }
    }
}

struct SearchShared {
    const BitGraph& g;
    SearchClock clock;
    std::atomic<int> best;
    std::mutex mu;
    std::vector<int> best_witness;  // merged under mu, tie-break lexicographic

    SearchShared(const BitGraph& g_, const SearchBudget& b) : g(g_), clock(b), best(0) {}

    void offer(int size, const std::vector<int>& clique) {
        std::lock_guard<std::mutex> lk(mu);
        if (size > int(best_witness.size()) ||
            (size == int(best_witness.size()) && clique < best_witness)) {
            if (size >= int(best_witness.size())) best_witness = clique;
        }
        int cur = best.load(std::memory_order_relaxed);
        while (size > cur && !best.compare_exchange_weak(cur, size)) {}
    }
};

void expand(SearchShared& sh, Words& p, std::vector<int>& clique) {
    if (sh.clock.tick()) return;
    if (empty_set(p)) {
        sh.offer(int(clique.size()), clique);
        return;
    }
    std::vector<int> order, bounds;
    colour_sort(sh.g, p, order, bounds);
    Words np(p.size());
    for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
        int v = order[idx];
        if (int(clique.size()) + bounds[idx] <= sh.best.load(std::memory_order_relaxed)) return;
        intersect_neighbours(sh.g, p, v, np);
        clique.push_back(v);
        if (empty_set(np)) {
            sh.offer(int(clique.size()), clique);
        } else {
            Words saved = np;
            expand(sh, saved, clique);
        }
        clique.pop_back();
        p[v >> 6] &= ~(uint64_t(1) << (v & 63));
        if (sh.clock.stopped()) return;
    }
}

// Decision search: is there a clique of size `need` inside p?
bool exists_clique(const BitGraph& g, const Words& p, int need, SearchClock& clock) {
    if (need <= 0) return true;
    if (clock.tick()) return false;
    std::vector<int> order, bounds;
    colour_sort(g, p, order, bounds);
    if (!bounds.empty() && bounds.back() < need) return false;
    Words np(p.size());
    Words rest = p;
    for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
        int v = order[idx];
        if (bounds[idx] < need) return false;
        intersect_neighbours(g, rest, v, np);
        if (exists_clique(g, np, need - 1, clock)) return true;
        rest[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }
    return false;
}

}  // namespace

CliqueResult max_clique(const BitGraph& g, const SearchBudget& budget) {
    CliqueResult res;
    if (g.size() == 0) return res;

    SearchShared sh(g, budget);
    // seed with a single vertex so the pruning bound is never vacuous
    sh.offer(1, {0});

    std::vector<int> roots, root_bounds;
    Words all(g.words(), 0);
    for (int v = 0; v < g.size(); ++v) all[v >> 6] |= uint64_t(1) << (v & 63);
    colour_sort(g, all, roots, root_bounds);

    int threads = std::max(1, budget.threads);
    if (threads == 1) {
        Words p = all;
        std::vector<int> clique;
        expand(sh, p, clique);
    } else {
        // Root split: thread t owns root branches t, t+T, t+2T, ...
        // in the same descending order the sequential search uses.
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                Words np(g.words());
                for (int idx = int(roots.size()) - 1; idx >= 0; --idx) {
                    if ((int(roots.size()) - 1 - idx) % threads != t) continue;
                    int v = roots[idx];
                    if (1 + root_bounds[idx] <= sh.best.load()) continue;
                    // candidates: neighbours of v among roots before idx
                    Words p(g.words(), 0);
                    for (int j = 0; j < idx; ++j) {
                        int u = roots[j];
                        p[u >> 6] |= uint64_t(1) << (u & 63);
                    }
                    intersect_neighbours(g, p, v, np);
                    std::vector<int> clique{v};
                    Words branch = np;
                    expand(sh, branch, clique);
                    if (sh.clock.stopped()) break;
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    res.size = sh.best.load();
    res.outcome = sh.clock.stopped() ? Outcome::Budget : Outcome::Proven;
    res.witness = sh.best_witness;
    std::sort(res.witness.begin(), res.witness.end());

    // Deterministic witness: lexicographically least clique of the found size.
    SearchClock extraction_clock(SearchBudget{budget.time_limit_s, std::nullopt, 1, budget.seed});
    Words p = all;
    Words np(g.words());
    std::vector<int> lex;
    int need = res.size;
    for (int v = 0; v < g.size() && need > 0; ++v) {
        if (!((p[v >> 6] >> (v & 63)) & 1)) continue;
        intersect_neighbours(g, p, v, np);
        if (exists_clique(g, np, need - 1, extraction_clock)) {
            lex.push_back(v);
            p = np;
            --need;
        } else {
            p[v >> 6] &= ~(uint64_t(1) << (v & 63));
        }
        if (extraction_clock.stopped()) break;
    }
    if (need == 0) res.witness = lex;
    return res;
}

}  // namespace combex
