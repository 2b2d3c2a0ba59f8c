#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/cube.hpp"
#include "combex/rational.hpp"

namespace combex {

// Total edge colouring of Q_n. col[v*n + i] holds the colour of the edge
// (v, v + e_i) for the lower endpoint v (bit i clear); the accessor accepts
// either endpoint.
struct EdgeColouring {
    int n = 0;
    int colours = 1;  // palette size; ids 0..colours-1
    std::vector<uint8_t> col;

    uint8_t edge_colour(uint64_t v, int dir) const {
        uint64_t lower = v & ~(uint64_t(1) << dir);
        return col[size_t(lower) * n + dir];
    }
    void set_edge_colour(uint64_t v, int dir, uint8_t c) {
        uint64_t lower = v & ~(uint64_t(1) << dir);
        col[size_t(lower) * n + dir] = c;
    }
};

EdgeColouring monochromatic_colouring(int n);
EdgeColouring direction_split_colouring(int n);               // direction < n/2 vs rest
EdgeColouring direction_partition_colouring(int n, int parts);  // direction mod parts
EdgeColouring layered_colouring(int n, int width);            // colour = (weight/width) mod 2
EdgeColouring random_colouring(int n, int colours, uint64_t seed);
EdgeColouring antipodal_random_colouring(int n, uint64_t seed);

// vw and its antipodal image always differ (2-colour predicate).
bool is_antipodal_colouring(const EdgeColouring& c);

// Minimum number of colour changes over all walks from v to its antipode;
// shortest path over (vertex, last edge colour) states.
int min_changes_path(const EdgeColouring& c, uint64_t v);

// Minimum over geodesics (each direction used exactly once); subset DP.
int min_changes_geodesic(const EdgeColouring& c, uint64_t v);

Rational average_min_changes(const EdgeColouring& c, int threads = 1);
Rational average_min_changes_geodesic(const EdgeColouring& c, int threads = 1);

// Longest monochromatic geodesic segment (distinct directions, any start).
int monochromatic_geodesic_length(const EdgeColouring& c);

struct KColourCheck {
    int min_changes = 0;   // min over antipodal pairs of geodesic colour changes
    bool within_k = false;
    uint64_t argmin_vertex = 0;
};

// Scans antipodal pairs; stops at the first pair within k changes unless
// `full_scan` is set.
KColourCheck k_colour_conjecture_check(const EdgeColouring& c, int k, bool full_scan = false);

nlohmann::json colouring_witness(const EdgeColouring& c);
EdgeColouring colouring_from_witness(const nlohmann::json& w, int n);

Certificate make_average_certificate(const EdgeColouring& c, const std::string& name);
Certificate make_mono_geodesic_certificate(const EdgeColouring& c, const std::string& name);
Certificate make_k_check_certificate(const EdgeColouring& c, const std::string& name, int k);
void register_antipodal_verifiers(VerifierRegistry& reg);

}  // namespace combex
