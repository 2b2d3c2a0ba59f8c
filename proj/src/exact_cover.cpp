#include "combex/exact_cover.hpp"

#include <algorithm>
#include <bit>

namespace combex {

namespace {

using Words = std::vector<uint64_t>;

int count_bits(const Words& w) {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
}

struct CoverSearch {
    const ExactCoverInstance& inst;
    SearchClock clock;
    int words;
    std::vector<Words> bmask;       // block -> element bitmask
    int max_block = 1;
    int best = -1;                  // best count found, -1 = none
    std::vector<int> best_chosen;
    std::vector<int> stack;

    CoverSearch(const ExactCoverInstance& in, const SearchBudget& b)
        : inst(in), clock(b), words((in.universe + 63) / 64) {
        bmask.reserve(inst.blocks.size());
        for (const auto& blk : inst.blocks) {
            Words w(words, 0);
            for (int e : blk) w[e >> 6] |= uint64_t(1) << (e & 63);
            bmask.push_back(std::move(w));
            max_block = std::max(max_block, int(blk.size()));
        }
    }

    bool bound_cut(int uncovered) {
        int lb = (uncovered + max_block - 1) / max_block;
        return best >= 0 && int(stack.size()) + lb >= best;
    }

    void record() {
        if (best < 0 || int(stack.size()) < best) {
            best = int(stack.size());
            best_chosen = stack;
        }
    }

    // ---- partition mode ----

    void partition_dfs(Words& covered, int uncovered,
                       const std::optional<RootRestriction>& root) {
        if (clock.tick()) return;
        if (uncovered == 0) {
            record();
            return;
        }
        if (bound_cut(uncovered)) return;

        // branch on the uncovered element with the fewest usable blocks;
        // a root restriction pins the element instead
        int elem = -1;
        int fewest = -1;
        if (root) {
            elem = root->element;
        } else {
            for (int e = 0; e < inst.universe; ++e) {
                if ((covered[e >> 6] >> (e & 63)) & 1) continue;
                int c = 0;
                for (size_t b = 0; b < bmask.size(); ++b) {
                    if (!((bmask[b][e >> 6] >> (e & 63)) & 1)) continue;
                    bool ok = true;
                    for (int w = 0; w < words; ++w)
                        if (bmask[b][w] & covered[w]) { ok = false; break; }
                    if (ok) ++c;
                }
                if (fewest < 0 || c < fewest) {
                    fewest = c;
                    elem = e;
                    if (c == 0) break;
                }
            }
            if (fewest == 0) return;  // dead end
        }

        std::vector<int> usable;
        for (size_t b = 0; b < bmask.size(); ++b) {
            if (!((bmask[b][elem >> 6] >> (elem & 63)) & 1)) continue;
            bool ok = true;
            for (int w = 0; w < words; ++w)
                if (bmask[b][w] & covered[w]) { ok = false; break; }
            if (ok) usable.push_back(int(b));
        }
        // larger blocks first: reaches good covers sooner, tightens the bound
        std::stable_sort(usable.begin(), usable.end(), [&](int x, int y) {
            return inst.blocks[x].size() > inst.blocks[y].size();
        });
        if (root) {
            std::vector<int> filtered;
            for (int b : usable)
                if (std::find(root->blocks.begin(), root->blocks.end(), b) != root->blocks.end())
                    filtered.push_back(b);
            usable = filtered;
        }

        for (int b : usable) {
            int sz = int(inst.blocks[b].size());
            for (int w = 0; w < words; ++w) covered[w] |= bmask[b][w];
            stack.push_back(b);
            partition_dfs(covered, uncovered - sz, std::nullopt);
            stack.pop_back();
            for (int w = 0; w < words; ++w) covered[w] &= ~bmask[b][w];
            if (clock.stopped()) return;
        }
    }

    // ---- odd mode: include/exclude over block indices ----

    std::vector<Words> reach;  // reach[i] = union of blocks i..end

    void odd_dfs(size_t i, Words& deficit, int deficit_count) {
        if (clock.tick()) return;
        if (deficit_count == 0) {
            record();
            return;
        }
        if (i == bmask.size()) return;
        if (bound_cut(deficit_count)) return;
        for (int w = 0; w < words; ++w)
            if (deficit[w] & ~reach[i][w]) return;  // some needed element unreachable

        // include block i
        Words nd(words);
        int ndc = 0;
        for (int w = 0; w < words; ++w) {
            nd[w] = deficit[w] ^ bmask[i][w];
            ndc += std::popcount(nd[w]);
        }
        stack.push_back(int(i));
        odd_dfs(i + 1, nd, ndc);
        stack.pop_back();
        if (clock.stopped()) return;
        // exclude block i
        odd_dfs(i + 1, deficit, deficit_count);
    }
};

}  // namespace

CoverResult exact_cover_min(const ExactCoverInstance& inst, CoverMode mode,
                            const SearchBudget& budget,
                            const std::optional<RootRestriction>& root) {
    CoverSearch s(inst, budget);
    if (mode == CoverMode::Partition) {
        Words covered(s.words, 0);
        s.partition_dfs(covered, inst.universe, root);
    } else {
        s.reach.assign(s.bmask.size() + 1, Words(s.words, 0));
        for (int i = int(s.bmask.size()) - 1; i >= 0; --i) {
            s.reach[i] = s.reach[i + 1];
            for (int w = 0; w < s.words; ++w) s.reach[i][w] |= s.bmask[i][w];
        }
        Words deficit(s.words, 0);
        for (int e = 0; e < inst.universe; ++e) deficit[e >> 6] |= uint64_t(1) << (e & 63);
        s.odd_dfs(0, deficit, inst.universe);
    }

    CoverResult res;
    if (s.clock.stopped()) {
        res.outcome = Outcome::Budget;
    } else if (s.best < 0) {
        res.outcome = Outcome::Infeasible;
    } else {
        res.outcome = Outcome::Proven;
    }
    if (s.best >= 0) {
        res.count = s.best;
        res.chosen = s.best_chosen;
        std::sort(res.chosen.begin(), res.chosen.end());
    }
    return res;
}

bool verify_cover(const ExactCoverInstance& inst, CoverMode mode, const std::vector<int>& chosen) {
    std::vector<int> cnt(inst.universe, 0);
    for (int b : chosen) {
        if (b < 0 || b >= int(inst.blocks.size())) return false;
        for (int e : inst.blocks[b]) {
            if (e < 0 || e >= inst.universe) return false;
            ++cnt[e];
        }
    }
    for (int e = 0; e < inst.universe; ++e) {
        if (mode == CoverMode::Partition && cnt[e] != 1) return false;
        if (mode == CoverMode::Odd && cnt[e] % 2 != 1) return false;
    }
    // chosen sets must be distinct blocks
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace combex
