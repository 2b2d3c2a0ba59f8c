#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <bit>

namespace combex {

// Bit i (LSB) holds coordinate i+1; printable ternary strings read
// coordinate 1 leftmost, matching that convention.

constexpr int kMaxCubeDim = 32;

inline uint64_t cube_mask(int n) { return (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1; }

inline int weight(uint64_t v) { return std::popcount(v); }

inline uint64_t antipode(uint64_t v, int n) { return ~v & cube_mask(n); }

// A subcube of Q_n: star positions may take either value, the rest are
// pinned to `values`. Invariant: values & stars == 0.
struct Subcube {
    int n = 0;
    uint64_t stars = 0;
    uint64_t values = 0;

    int k() const { return std::popcount(stars); }
    bool is_vertex() const { return stars == 0; }

    bool operator==(const Subcube&) const = default;
    auto operator<=>(const Subcube&) const = default;
};

std::string subcube_to_string(const Subcube& s);
Subcube parse_subcube(const std::string& text);

// True iff every vertex of `inner` is a vertex of `outer`: inner's stars lie
// inside outer's stars and the two agree outside outer's stars.
bool subcube_contains(const Subcube& outer, const Subcube& inner);

// All k-subcubes contained in `outer`; exactly C(d,k)*2^(d-k) of them where
// d = outer.k().
std::vector<Subcube> subcubes_within(const Subcube& outer, int k);

// The full cube Q_n as a subcube (all positions starred).
Subcube full_cube(int n);

// All k-subcubes of Q_n, in a fixed deterministic order.
std::vector<Subcube> all_subcubes(int n, int k);

// Edge of Q_n identified by its lower endpoint (bit `dir` clear) and
// direction.
struct CubeEdge {
    uint64_t lower = 0;
    int dir = 0;

    uint64_t upper() const { return lower | (uint64_t(1) << dir); }
    bool operator==(const CubeEdge&) const = default;
    auto operator<=>(const CubeEdge&) const = default;
};

std::vector<CubeEdge> all_cube_edges(int n);

// "0101..." with coordinate 1 leftmost, matching the subcube string convention.
std::string vertex_bits(uint64_t v, int d);

// Enumeration helpers shared by the search modules.
void for_each_combination(int n, int k, const std::function<void(uint64_t)>& fn);
void for_each_submask(uint64_t mask, const std::function<void(uint64_t)>& fn);

}  // namespace combex
