#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"

namespace combex {

// The equation a_1 x_1 + ... + a_k x_k = 0 over Z/2^r.
struct ModularInstance {
    int r = 0;
    std::vector<long long> a;  // reduced mod 2^r

    long long modulus() const { return 1LL << r; }
};

ModularInstance make_instance(int r, std::vector<long long> coeffs);

// Largest d <= r such that 2^d divides some non-empty subset sum of the
// coefficients (a sum of 0 counts as valuation r).
int compute_d(const ModularInstance& inst);

struct ModColouring {
    int r = 0;
    std::vector<int> colour;  // size 2^r, values 0..K-1

    int classes() const;
};

struct RadoCheck {
    bool ok = true;
    std::vector<long long> violating;  // a monochromatic solution breaking divisibility
};

// All monochromatic solutions x must satisfy 2^(r-d) | x_i for every i.
RadoCheck colouring_ok(const ModColouring& c, const ModularInstance& inst);

struct MinKResult {
    Outcome outcome = Outcome::Proven;
    int k = 0;  // least number of colours; 0 = none found up to the cap
    ModColouring witness;
};

// Least K <= k_max with a valid colouring, by exhaustive search over set
// partitions of Z/2^r in restricted-growth order (colour symmetry removed).
MinKResult min_K(const ModularInstance& inst, int k_max, const SearchBudget& budget = {});

Certificate make_min_k_certificate(const ModularInstance& inst, const MinKResult& r);
void register_rado_verifiers(VerifierRegistry& reg);

}  // namespace combex
