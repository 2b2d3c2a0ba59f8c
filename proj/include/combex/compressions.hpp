#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/subset_family.hpp"

namespace combex {

// Families over P([n]) with the two down-compressions and the upwards
// directed edge boundary.

// |{(A, A+i) : A in F, i not in A, A+i not in F}|
long long directed_boundary(const SubsetFamily& f);

bool is_down_set(const SubsetFamily& f);
bool is_up_set(const SubsetFamily& f);

// C_i: delete the sets whose lower copy is missing.
SubsetFamily c_compress(const SubsetFamily& f, int i);
// D_i: add the missing lower copies.
SubsetFamily d_compress(const SubsetFamily& f, int i);

struct PairedCheck {
    long long boundary = 0;
    long long boundary_c = 0;
    long long boundary_d = 0;
    bool holds_average = false;  // b >= (b_C + b_D) / 2
    bool holds_min = false;      // b >= min(b_C, b_D)
};

PairedCheck paired_inequality_check(const SubsetFamily& f, int i);

// Smallest witnesses (by family bitmask) of single-compression boundary
// growth at the given n, if any exist.
std::optional<std::pair<SubsetFamily, int>> find_c_increase(int n);
std::optional<std::pair<SubsetFamily, int>> find_d_increase(int n);

struct FlowResult {
    long long value = 0;
    std::vector<std::vector<uint32_t>> paths;  // vertex chains, each strictly upward
};

// Maximum number of edge-disjoint upwards directed paths from the down-set A
// to the up-set B (disjoint from A), by unit-capacity max flow on the
// upward-oriented cube; the witness is a path decomposition of the flow.
FlowResult edge_disjoint_upward_paths(const SubsetFamily& a, const SubsetFamily& b);

// Random disjoint (down-set, up-set) pair of the given sizes; deterministic
// in the seed. Retries internally until the disjointness constraint holds.
std::pair<SubsetFamily, SubsetFamily> random_disjoint_down_up(int n, size_t size_a, size_t size_b,
                                                              uint64_t seed);

Certificate make_paired_inequality_certificate(int n);
Certificate make_flow_certificate(const SubsetFamily& a, const SubsetFamily& b,
                                  const FlowResult& r);
void register_compressions_verifiers(VerifierRegistry& reg);

}  // namespace combex
