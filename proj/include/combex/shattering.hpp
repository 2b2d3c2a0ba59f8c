#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"

namespace combex {

// Families of permutations of [n], one-line notation, values 1..n.
struct PermFamily {
    int n = 0;
    std::vector<std::vector<int>> perms;
};

std::vector<int> parse_permutation(const std::string& text);  // "(2,4,1,5,3)"
std::string format_permutation(const std::vector<int>& p);

// The example family from S_5 that 4-shatters every 3-subset of [5].
PermFamily s5_example_family();

// Relative orders of X realised by the family: each order is the sequence of
// X's elements by position of appearance.
std::set<std::vector<int>> orders_induced(const PermFamily& p, const std::vector<int>& x);

struct ShatterCheck {
    bool ok = true;
    std::vector<int> failing;  // a k-subset with fewer than t orders
};

ShatterCheck t_shatters_all(const PermFamily& p, int k, int t);

struct MinFamilyResult {
    Outcome outcome = Outcome::Proven;
    int value = 0;  // minimum family size, or a greedy upper bound on Budget
    PermFamily witness;
};

// min{|P| : P t-shatters every k-subset of [n]}. Exact search by iterative
// deepening over the family size; the first permutation is pinned to the
// identity (value relabelling maps any family to one containing it).
MinFamilyResult min_family(int n, int k, int t, const SearchBudget& budget = {});

Certificate make_s5_verification_certificate();
Certificate make_min_family_certificate(int n, int k, int t, const MinFamilyResult& r);
void register_shattering_verifiers(VerifierRegistry& reg);

}  // namespace combex
