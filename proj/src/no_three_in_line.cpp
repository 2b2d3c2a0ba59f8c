#include "combex/no_three_in_line.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace combex {

namespace {

bool collinear(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
    long long x1 = b.first - a.first, y1 = b.second - a.second;
    long long x2 = c.first - a.first, y2 = c.second - a.second;
    return y1 * x2 == y2 * x1;
}

}  // namespace

No3Check verify_no3(const PointSet& s) {
    const auto& p = s.points;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            for (size_t k = j + 1; k < p.size(); ++k)
                if (collinear(p[i], p[j], p[k])) return {false, {p[i], p[j], p[k]}};
    return {};
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PointSet modular_parabola(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("modular_parabola needs a prime");
    PointSet s;
    for (long long i = 0; i < p; ++i) s.points.emplace_back(i + 1, (i * i) % p + 1);
    return s;
}

namespace {

// direction from c to p, reduced and sign-normalised
std::pair<long long, long long> normalised_direction(const GridPoint& c, const GridPoint& p) {
    long long dx = p.first - c.first, dy = p.second - c.second;
    long long g = std::gcd(std::abs(dx), std::abs(dy));
    dx /= g;
    dy /= g;
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

std::vector<GridPoint> scan_points(long long n, ScanOrder order, uint64_t seed) {
    std::vector<GridPoint> cells;
    cells.reserve(size_t(n) * size_t(n));
    switch (order) {
        case ScanOrder::RowMajor:
            for (long long y = 1; y <= n; ++y)
                for (long long x = 1; x <= n; ++x) cells.emplace_back(x, y);
            break;
        case ScanOrder::Spiral: {
            // outward square rings around the centre cell
            long long cx = (n + 1) / 2, cy = (n + 1) / 2;
            cells.emplace_back(cx, cy);
            for (long long ring = 1; ring < n; ++ring) {
                for (long long x = cx - ring; x <= cx + ring; ++x)
                    for (long long y : {cy - ring, cy + ring})
                        if (1 <= x && x <= n && 1 <= y && y <= n) cells.emplace_back(x, y);
                for (long long y = cy - ring + 1; y <= cy + ring - 1; ++y)
                    for (long long x : {cx - ring, cx + ring})
                        if (1 <= x && x <= n && 1 <= y && y <= n) cells.emplace_back(x, y);
                if (cells.size() == size_t(n) * size_t(n)) break;
            }
            break;
        }
        case ScanOrder::Random: {
            for (long long y = 1; y <= n; ++y)
                for (long long x = 1; x <= n; ++x) cells.emplace_back(x, y);
            std::mt19937_64 rng(seed);
            std::shuffle(cells.begin(), cells.end(), rng);
            break;
        }
    }
    return cells;
}

}  // namespace

PointSet greedy_extend(const PointSet& s, long long n, ScanOrder order, uint64_t seed) {
    if (!verify_no3(s).ok) throw std::invalid_argument("greedy_extend: seed set has three in line");
    PointSet cur = s;
    std::unordered_set<long long> present;
    auto key = [](const GridPoint& p) { return p.first * 2000003 + p.second; };
    for (const auto& p : cur.points) present.insert(key(p));

    for (const auto& cand : scan_points(n, order, seed)) {
        if (present.count(key(cand))) continue;
        // blocked iff two current points share a line through cand
        std::unordered_set<long long> dirs;
        bool blocked = false;
        for (const auto& p : cur.points) {
            auto [dx, dy] = normalised_direction(cand, p);
            long long dkey = dx * 4000037 + dy;
            if (!dirs.insert(dkey).second) {
                blocked = true;
                break;
            }
        }
        if (blocked) continue;
        cur.points.push_back(cand);
        present.insert(key(cand));
    }
    return cur;
}

std::vector<std::pair<long long, Rational>> line_density_profile(const PointSet& s, long long n_max) {
    std::vector<std::pair<long long, Rational>> out;
    for (long long n = 1; n <= n_max; ++n) {
        long long count = 0;
        for (const auto& [x, y] : s.points)
            if (1 <= x && x <= n && 1 <= y && y <= n) ++count;
        out.emplace_back(n, Rational(count, n));
    }
    return out;
}

std::string points_to_csv(const PointSet& s) {
    std::string out;
    for (const auto& [x, y] : s.points)
        out += std::to_string(x) + "," + std::to_string(y) + "\n";
    return out;
}

PointSet points_from_csv(const std::string& text) {
    PointSet s;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("CSV line needs 'x,y'");
        s.points.emplace_back(std::stoll(line.substr(0, comma)), std::stoll(line.substr(comma + 1)));
    }
    return s;
}

// ---------------- certificates ----------------

namespace {

nlohmann::json point_witness(const PointSet& s) {
    PointSet sorted = s;
    std::sort(sorted.points.begin(), sorted.points.end());
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& [x, y] : sorted.points) pts.push_back({x, y});
    return nlohmann::json{{"points", pts}};
}

PointSet points_from_witness(const nlohmann::json& w) {
    PointSet s;
    for (const auto& j : w.at("points")) s.points.emplace_back(j[0].get<long long>(), j[1].get<long long>());
    return s;
}

const char* order_name(ScanOrder o) {
    switch (o) {
        case ScanOrder::RowMajor: return "row-major";
        case ScanOrder::Spiral: return "spiral";
        case ScanOrder::Random: return "random";
    }
    return "?";
}

}  // namespace

Certificate make_parabola_certificate(long long p) {
    PointSet s = modular_parabola(p);
    return make_certificate("no-three/parabola", {{"p", std::to_string(p)}}, "construction",
                            std::to_string(s.points.size()), point_witness(s));
}

Certificate make_greedy_certificate(const PointSet& result, long long n, ScanOrder order,
                                    uint64_t seed) {
    Certificate c = make_certificate(
        "no-three/greedy", {{"n", std::to_string(n)}, {"order", order_name(order)}},
        "construction", std::to_string(result.points.size()), point_witness(result));
    if (order == ScanOrder::Random) c.seed = (long long)seed;
    return c;
}

void register_no_three_verifiers(VerifierRegistry& reg) {
    reg.add("no-three/parabola", [](const Certificate& c) -> VerifyResult {
        long long p = std::stoll(c.params.at("p"));
        PointSet s = points_from_witness(c.witness);
        if (!is_prime(p)) return {false, "p is not prime"};
        if (std::to_string(s.points.size()) != c.value || (long long)s.points.size() != p)
            return {false, "wrong point count"};
        PointSet expect = modular_parabola(p);
        std::sort(expect.points.begin(), expect.points.end());
        PointSet got = s;
        std::sort(got.points.begin(), got.points.end());
        if (expect.points != got.points) return {false, "witness is not the modular parabola"};
        if (!verify_no3(s).ok) return {false, "three points collinear"};
        return {true, "parabola verified"};
    });

    reg.add("no-three/greedy", [](const Certificate& c) -> VerifyResult {
        long long n = std::stoll(c.params.at("n"));
        PointSet s = points_from_witness(c.witness);
        if (std::to_string(s.points.size()) != c.value) return {false, "point count mismatch"};
        for (const auto& [x, y] : s.points)
            if (x < 1 || x > n || y < 1 || y > n) return {false, "point outside the grid"};
        if (!verify_no3(s).ok) return {false, "three points collinear"};
        if ((long long)s.points.size() > 2 * n) return {false, "more than 2n points"};
        // maximality: every other grid point sees two witness points on one line
        std::unordered_set<long long> present;
        for (const auto& p : s.points) present.insert(p.first * 2000003 + p.second);
        for (long long y = 1; y <= n; ++y)
            for (long long x = 1; x <= n; ++x) {
                GridPoint cand{x, y};
                if (present.count(x * 2000003 + y)) continue;
                std::unordered_set<long long> dirs;
                bool blocked = false;
                for (const auto& p : s.points) {
                    long long dx = p.first - cand.first, dy = p.second - cand.second;
                    long long g = std::gcd(std::abs(dx), std::abs(dy));
                    dx /= g;
                    dy /= g;
                    if (dx < 0 || (dx == 0 && dy < 0)) { dx = -dx; dy = -dy; }
                    if (!dirs.insert(dx * 4000037 + dy).second) { blocked = true; break; }
                }
                if (!blocked) return {false, "witness set is not maximal"};
            }
        return {true, "maximal no-three-in-line set verified"};
    });
}

}  // namespace combex
