#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/rational.hpp"

namespace combex {

using GridPoint = std::pair<long long, long long>;  // 1-based coordinates

struct PointSet {
    std::vector<GridPoint> points;  // distinct
};

struct No3Check {
    bool ok = true;
    std::array<GridPoint, 3> violating{};  // filled when !ok
};

// Collinearity over the rationals, exact integer cross products.
No3Check verify_no3(const PointSet& s);

bool is_prime(long long n);

// {(i, i^2 mod p) : 0 <= i < p}, shifted to 1-based coordinates.
PointSet modular_parabola(long long p);

enum class ScanOrder { RowMajor, Spiral, Random };

// Extends S to an inclusion-maximal no-three-in-line subset of [n]^2 in the
// given scan order. One pass suffices: a point blocked once stays blocked.
PointSet greedy_extend(const PointSet& s, long long n, ScanOrder order, uint64_t seed = 0);

// |S cap [n]^2| / n for n = 1..N
std::vector<std::pair<long long, Rational>> line_density_profile(const PointSet& s, long long n_max);

std::string points_to_csv(const PointSet& s);
PointSet points_from_csv(const std::string& text);

Certificate make_parabola_certificate(long long p);
Certificate make_greedy_certificate(const PointSet& result, long long n, ScanOrder order,
                                    uint64_t seed);
void register_no_three_verifiers(VerifierRegistry& reg);

}  // namespace combex
