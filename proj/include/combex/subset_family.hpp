#pragma once

#include <cstdint>
#include <vector>

#include <bit>

namespace combex {

// A family of subsets of [n], stored as a 2^n-bit membership mask.
// Subsets are encoded as bitmasks: element i of [n] is bit i.
struct SubsetFamily {
    int n = 0;
    std::vector<uint64_t> bits;

    SubsetFamily() = default;
    explicit SubsetFamily(int n_) : n(n_), bits(((size_t(1) << n_) + 63) / 64, 0) {}

    uint32_t universe_size() const { return uint32_t(1) << n; }

    bool test(uint32_t m) const { return (bits[m >> 6] >> (m & 63)) & 1; }
    void set(uint32_t m) { bits[m >> 6] |= uint64_t(1) << (m & 63); }
    void reset(uint32_t m) { bits[m >> 6] &= ~(uint64_t(1) << (m & 63)); }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : bits) c += std::popcount(w);
        return c;
    }

    std::vector<uint32_t> members() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for (uint32_t m = 0; m < universe_size(); ++m)
            if (test(m)) out.push_back(m);
        return out;
    }

    bool operator==(const SubsetFamily&) const = default;
};

}  // namespace combex
