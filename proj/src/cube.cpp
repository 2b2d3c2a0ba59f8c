#include "combex/cube.hpp"

#include <stdexcept>

namespace combex {

std::string subcube_to_string(const Subcube& s) {
    std::string out(s.n, '0');
    for (int i = 0; i < s.n; ++i) {
        if ((s.stars >> i) & 1)
            out[i] = '*';
        else if ((s.values >> i) & 1)
            out[i] = '1';
    }
    return out;
}

Subcube parse_subcube(const std::string& text) {
    if (text.size() > kMaxCubeDim) throw std::invalid_argument("subcube string too long");
    Subcube s;
    s.n = int(text.size());
    for (int i = 0; i < s.n; ++i) {
        switch (text[i]) {
            case '*': s.stars |= uint64_t(1) << i; break;
            case '1': s.values |= uint64_t(1) << i; break;
            case '0': break;
            default: throw std::invalid_argument("subcube characters must be 0, 1 or *");
        }
    }
    return s;
}

bool subcube_contains(const Subcube& outer, const Subcube& inner) {
    if (outer.n != inner.n) throw std::invalid_argument("subcube dimension mismatch");
    if (inner.stars & ~outer.stars) return false;
    return ((inner.values ^ outer.values) & ~outer.stars) == 0;
}

std::vector<Subcube> subcubes_within(const Subcube& outer, int k) {
    int d = outer.k();
    if (k < 0 || k > d) throw std::invalid_argument("k out of range for subcubes_within");
    std::vector<int> star_pos;
    for (int i = 0; i < outer.n; ++i)
        if ((outer.stars >> i) & 1) star_pos.push_back(i);

    std::vector<Subcube> out;
    for_each_combination(d, k, [&](uint64_t pick) {
        uint64_t new_stars = 0;
        uint64_t free_bits = 0;
        for (int j = 0; j < d; ++j) {
            uint64_t b = uint64_t(1) << star_pos[j];
            if ((pick >> j) & 1)
                new_stars |= b;
            else
                free_bits |= b;
        }
        for_each_submask(free_bits, [&](uint64_t assign) {
            out.push_back({outer.n, new_stars, outer.values | assign});
        });
    });
    return out;
}

std::string vertex_bits(uint64_t v, int d) {
    std::string s(d, '0');
    for (int i = 0; i < d; ++i)
        if ((v >> i) & 1) s[i] = '1';
    return s;
}

Subcube full_cube(int n) { return {n, cube_mask(n), 0}; }

std::vector<Subcube> all_subcubes(int n, int k) { return subcubes_within(full_cube(n), k); }

std::vector<CubeEdge> all_cube_edges(int n) {
    std::vector<CubeEdge> out;
    out.reserve(size_t(n) << (n > 0 ? n - 1 : 0));
    for (uint64_t v = 0; v < (uint64_t(1) << n); ++v)
        for (int i = 0; i < n; ++i)
            if (!((v >> i) & 1)) out.push_back({v, i});
    return out;
}

void for_each_combination(int n, int k, const std::function<void(uint64_t)>& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(0);
        return;
    }
    uint64_t mask = (uint64_t(1) << k) - 1;
    uint64_t limit = uint64_t(1) << n;
    while (mask < limit) {
        fn(mask);
        // Gosper's hack
        uint64_t c = mask & -mask;
        uint64_t r = mask + c;
        if (r >= limit || r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

void for_each_submask(uint64_t mask, const std::function<void(uint64_t)>& fn) {
    uint64_t sub = mask;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

}  // namespace combex
