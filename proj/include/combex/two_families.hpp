#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/rational.hpp"

namespace combex {

// Indexed pairs (A_i, B_i) of finite sets over a ground set of at most 64
// integers; element e of the ground set is bit e-1.
struct PairSystem {
    int a = 0;
    int b = 0;
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
};

struct SystemCheck {
    bool ok = true;
    std::string violation;  // empty when ok
};

// Bollobas conditions: |A_i| = a, |B_i| = b, A_i disjoint from B_i, and
// A_i meets B_j whenever i != j.
SystemCheck check_bollobas(const PairSystem& s);

// Conjectured conditions: |A_i| = a, |B_i| = b, |A_i cap B_i| = 2, and
// A_i cap B_j is not contained in A_k cap B_k for all i != j, k free.
SystemCheck check_conjecture(const PairSystem& s);

// sum_{i=2}^a 2^(i-2) C(a+b-2i, a-i)
BigInt conj_bound(int a, int b);

// The bound-attaining example: for each 2 <= c <= a all admissible A through the pair
// {2c-3, 2c-2}, with B = (ground \ A) + that pair, over ground [a+b-2].
PairSystem tight_construction(int a, int b);

struct ExactMaxPairs {
    Outcome outcome = Outcome::Proven;
    int value = 0;
    PairSystem witness;
};

// Maximum |I| over systems on ground set [ground] passing check_conjecture.
ExactMaxPairs exact_max_conjecture(int a, int b, int ground, const SearchBudget& budget = {});

// The derived Bollobas system (A_i \ B_i, B_i) of a conjecture system.
PairSystem reduced_system(const PairSystem& s);

Certificate make_two_families_construct_certificate(int a, int b);
Certificate make_two_families_exact_certificate(const ExactMaxPairs& r, int a, int b, int ground);
void register_two_families_verifiers(VerifierRegistry& reg);

}  // namespace combex
