#include "combex/torus_walks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace combex {

namespace {

size_t ipow(int n, int k) {
    size_t r = 1;
    while (k--) r *= size_t(n);
    return r;
}

// neighbour table: vertex -> 2k neighbours (+e_i then -e_i per axis)
std::vector<int> neighbour_table(int n, int k) {
    size_t verts = ipow(n, k);
    std::vector<int> nb(verts * 2 * k);
    std::vector<int> coord(k);
    for (size_t v = 0; v < verts; ++v) {
        size_t rest = v;
        for (int i = 0; i < k; ++i) {
            coord[i] = int(rest % n);
            rest /= n;
        }
        long long stride = 1;
        for (int i = 0; i < k; ++i) {
            int up = (coord[i] + 1) % n;
            int dn = (coord[i] + n - 1) % n;
            nb[v * 2 * k + 2 * i] = int((long long)v + (up - coord[i]) * stride);
            nb[v * 2 * k + 2 * i + 1] = int((long long)v + (dn - coord[i]) * stride);
            stride *= n;
        }
    }
    return nb;
}

void check_balanced(const TorusColouring& c) {
    size_t reds = 0;
    for (uint8_t r : c.red) reds += r ? 1 : 0;
    if (2 * reds != c.red.size())
        throw std::invalid_argument("colouring is not balanced");
}

}  // namespace

TorusColouring torus_colouring_from_bits(int n, int k, const std::string& bits) {
    if (bits.size() != ipow(n, k)) throw std::invalid_argument("bitstring length != n^k");
    TorusColouring c{n, k, std::vector<uint8_t>(bits.size(), 0)};
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bits must be 0/1");
        c.red[i] = bits[i] == '1';
    }
    check_balanced(c);
    return c;
}

std::string torus_colouring_bits(const TorusColouring& c) {
    std::string s(c.red.size(), '0');
    for (size_t i = 0; i < c.red.size(); ++i)
        if (c.red[i]) s[i] = '1';
    return s;
}

TorusColouring checkerboard(int n, int k) {
    if (n % 2 != 0) throw std::invalid_argument("checkerboard needs even n");
    TorusColouring c{n, k, std::vector<uint8_t>(ipow(n, k), 0)};
    for (size_t v = 0; v < c.red.size(); ++v) {
        size_t rest = v;
        int sum = 0;
        for (int i = 0; i < k; ++i) {
            sum += int(rest % n);
            rest /= n;
        }
        c.red[v] = sum % 2;
    }
    return c;
}

TorusColouring half_space_stripes(int n, int k) {
    if (n % 2 != 0) throw std::invalid_argument("stripes need even n");
    TorusColouring c{n, k, std::vector<uint8_t>(ipow(n, k), 0)};
    for (size_t v = 0; v < c.red.size(); ++v) c.red[v] = int(v % n) < n / 2;
    return c;
}

namespace {

StayPair pair_from_counts(long long red_stay, long long blue_stay, size_t half, long long denom) {
    return {Rational(red_stay, (long long)half * denom), Rational(blue_stay, (long long)half * denom)};
}

}  // namespace

StayPair stay_pair(const TorusColouring& c) {
    check_balanced(c);
    int twok = 2 * c.k;
    auto nb = neighbour_table(c.n, c.k);
    std::vector<int> stay1(c.red.size(), 0);  // same-colour neighbours
    for (size_t v = 0; v < c.red.size(); ++v)
        for (int d = 0; d < twok; ++d)
            if (c.red[nb[v * twok + d]] == c.red[v]) ++stay1[v];
    long long red2 = 0, blue2 = 0;
    for (size_t v = 0; v < c.red.size(); ++v) {
        long long cnt = 0;
        for (int d = 0; d < twok; ++d) {
            size_t u = nb[v * twok + d];
            if (c.red[u] == c.red[v]) cnt += stay1[u];
        }
        (c.red[v] ? red2 : blue2) += cnt;
    }
    return pair_from_counts(red2, blue2, c.red.size() / 2, (long long)twok * twok);
}

StayPair one_step_pair(const TorusColouring& c) {
    check_balanced(c);
    int twok = 2 * c.k;
    auto nb = neighbour_table(c.n, c.k);
    long long red1 = 0, blue1 = 0;
    for (size_t v = 0; v < c.red.size(); ++v) {
        long long cnt = 0;
        for (int d = 0; d < twok; ++d)
            if (c.red[nb[v * twok + d]] == c.red[v]) ++cnt;
        (c.red[v] ? red1 : blue1) += cnt;
    }
    return pair_from_counts(red1, blue1, c.red.size() / 2, twok);
}

// ---------------- exact convex geometry ----------------

namespace {

using QPoint = std::pair<Rational, Rational>;

Rational cross(const QPoint& o, const QPoint& a, const QPoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

}  // namespace

std::vector<QPoint> convex_hull(std::vector<QPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<QPoint> hull;
    // lower then upper chain, counterclockwise
    for (int pass = 0; pass < 2; ++pass) {
        size_t base = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= base + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= Rational(0))
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return hull;
}

bool point_in_convex_hull(const std::vector<QPoint>& hull, const QPoint& p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) {
        if (cross(hull[0], hull[1], p) != Rational(0)) return false;
        QPoint lo = std::min(hull[0], hull[1]), hi = std::max(hull[0], hull[1]);
        return lo <= p && p <= hi;
    }
    for (size_t i = 0; i < hull.size(); ++i) {
        const QPoint& a = hull[i];
        const QPoint& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < Rational(0)) return false;
    }
    return true;
}

std::vector<QPoint> hull_k2_vertices() {
    return {{Rational(0), Rational(0)},      {Rational(1, 2), Rational(1, 4)},
            {Rational(3, 4), Rational(9, 16)}, {Rational(1, 4), Rational(1, 2)},
            {Rational(9, 16), Rational(3, 4)}, {Rational(1), Rational(1)}};
}

std::vector<QPoint> hull_conjecture_vertices(int k) {
    if (k < 2) throw std::invalid_argument("conjectured hull needs k >= 2");
    std::vector<QPoint> pts{{Rational(0), Rational(0)}};
    for (int l = k; l <= 2 * k; ++l) {
        Rational x(l, 2 * k);
        Rational y(BigInt(l) * l, BigInt(2 * k) * (2 * k));
        pts.emplace_back(x, y);
        pts.emplace_back(y, x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool hull_k2_membership(const StayPair& p) {
    static const std::vector<QPoint> hull = convex_hull(hull_k2_vertices());
    return point_in_convex_hull(hull, {p.p_r, p.p_b});
}

bool hull_conjecture_membership(const StayPair& p, int k) {
    return point_in_convex_hull(convex_hull(hull_conjecture_vertices(k)), {p.p_r, p.p_b});
}

// ---------------- sweeps ----------------

namespace {

struct Collector {
    std::map<StayPair, std::pair<size_t, std::string>> pairs;  // pair -> (index, bits)

    void offer(const StayPair& p, size_t index, const std::string& bits) {
        auto it = pairs.find(p);
        if (it == pairs.end() || index < it->second.first) pairs[p] = {index, bits};
    }
    void merge(const Collector& other) {
        for (const auto& [p, v] : other.pairs) offer(p, v.first, v.second);
    }
};

SweepResult finish(Collector& col, size_t seen) {
    SweepResult res;
    res.colourings_seen = seen;
    for (auto& [p, v] : col.pairs) res.pairs.push_back({p, v.second});
    return res;
}

}  // namespace

SweepResult sweep_pairs_exhaustive(int n, int k, int threads) {
    size_t verts = ipow(n, k);
    if (verts > 60) throw std::invalid_argument("exhaustive sweep supports n^k <= 60");
    BigInt total = binomial(unsigned(verts), unsigned(verts / 2));
    if (total > 10000000) throw std::invalid_argument("exhaustive sweep over 10^7 colourings");

    // Gosper enumeration of all balanced masks, deterministic order
    std::vector<uint64_t> masks;
    masks.reserve(size_t(total.get_ui()));
    uint64_t mask = (uint64_t(1) << (verts / 2)) - 1;
    uint64_t limit = (verts == 64) ? ~uint64_t(0) : (uint64_t(1) << verts);
    while (mask < limit) {
        masks.push_back(mask);
        uint64_t c = mask & -mask;
        uint64_t r = mask + c;
        if (r >= limit || r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }

    threads = std::max(1, threads);
    std::vector<Collector> cols(threads);
    auto work = [&](int t) {
        for (size_t i = t; i < masks.size(); i += threads) {
            TorusColouring c{n, k, std::vector<uint8_t>(verts, 0)};
            for (size_t v = 0; v < verts; ++v) c.red[v] = (masks[i] >> v) & 1;
            cols[t].offer(stay_pair(c), i, torus_colouring_bits(c));
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
        for (int t = 1; t < threads; ++t) cols[0].merge(cols[t]);
    }
    return finish(cols[0], masks.size());
}

SweepResult sweep_pairs_random(int n, int k, size_t count, uint64_t seed) {
    size_t verts = ipow(n, k);
    if (verts % 2 != 0) throw std::invalid_argument("n^k must be even for balanced colourings");
    std::mt19937_64 rng(seed);
    std::vector<int> idx(verts);
    std::iota(idx.begin(), idx.end(), 0);
    Collector col;
    for (size_t i = 0; i < count; ++i) {
        std::shuffle(idx.begin(), idx.end(), rng);
        TorusColouring c{n, k, std::vector<uint8_t>(verts, 0)};
        for (size_t j = 0; j < verts / 2; ++j) c.red[idx[j]] = 1;
        col.offer(stay_pair(c), i, torus_colouring_bits(c));
    }
    return finish(col, count);
}

// ---------------- certificates ----------------

Certificate make_sweep_certificate(const SweepResult& r, int n, int k, const std::string& mode) {
    nlohmann::json rows = nlohmann::json::array();
    bool all_k2 = true;
    for (const auto& e : r.pairs) {
        bool in_hull = (k == 2) ? hull_k2_membership(e.pair)
                                : hull_conjecture_membership(e.pair, k);
        all_k2 = all_k2 && in_hull;
        rows.push_back({{"p_r", e.pair.p_r.str()},
                        {"p_b", e.pair.p_b.str()},
                        {"bits", e.witness_bits},
                        {"in_hull", in_hull}});
    }
    Certificate c = make_certificate(
        "torus-walks/sweep",
        {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"mode", mode}}, "verification",
        std::to_string(r.pairs.size()), nlohmann::json{{"pairs", rows}});
    c.witness["colourings_seen"] = r.colourings_seen;
    c.witness["all_in_hull"] = all_k2;
    return c;
}

void register_torus_walks_verifiers(VerifierRegistry& reg) {
    reg.add("torus-walks/sweep", [](const Certificate& c) -> VerifyResult {
        int n = std::stoi(c.params.at("n"));
        int k = std::stoi(c.params.at("k"));
        const auto& rows = c.witness.at("pairs");
        if (std::to_string(rows.size()) != c.value) return {false, "pair count mismatch"};
        for (const auto& row : rows) {
            TorusColouring col = torus_colouring_from_bits(n, k, row.at("bits").get<std::string>());
            StayPair p = stay_pair(col);
            if (p.p_r.str() != row.at("p_r").get<std::string>() ||
                p.p_b.str() != row.at("p_b").get<std::string>())
                return {false, "recomputed stay pair differs from the witness"};
            bool in_hull = (k == 2) ? hull_k2_membership(p) : hull_conjecture_membership(p, k);
            if (in_hull != row.at("in_hull").get<bool>())
                return {false, "hull membership verdict differs"};
        }
        return {true, "all witnessed stay pairs verified"};
    });
}

}  // namespace combex
