#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/rational.hpp"

namespace combex {

// Balanced red-blue colouring of the discrete torus T_n^k. Vertices are
// indexed in row-major coordinate order; red[v] != 0 marks red.
struct TorusColouring {
    int n = 0;
    int k = 0;
    std::vector<uint8_t> red;  // size n^k, exactly half set

    size_t vertex_count() const { return red.size(); }
};

TorusColouring torus_colouring_from_bits(int n, int k, const std::string& bits);
std::string torus_colouring_bits(const TorusColouring& c);
TorusColouring checkerboard(int n, int k);        // parity of the coordinate sum
TorusColouring half_space_stripes(int n, int k);  // first coordinate < n/2

struct StayPair {
    Rational p_r;
    Rational p_b;

    bool operator==(const StayPair& o) const { return p_r == o.p_r && p_b == o.p_b; }
    bool operator<(const StayPair& o) const {
        if (p_r != o.p_r) return p_r < o.p_r;
        return p_b < o.p_b;
    }
};

// Probability that a non-lazy walk from a random red vertex stays red for
// its first two steps (steps uniform over the 2k signed directions), and the
// blue counterpart. Exact rationals.
StayPair stay_pair(const TorusColouring& c);

// One-step stay probabilities (q_R, q_B); p <= q componentwise.
StayPair one_step_pair(const TorusColouring& c);

// Exact membership in the k=2 hull of {(0,0),(1/2,1/4),(3/4,9/16),(1,1)}
// plus mirrors; boundary counts as inside.
bool hull_k2_membership(const StayPair& p);

// The conjectured hull for general k: {(0,0)} + {(l/2k, l^2/4k^2)} + mirrors.
bool hull_conjecture_membership(const StayPair& p, int k);

std::vector<std::pair<Rational, Rational>> hull_k2_vertices();
std::vector<std::pair<Rational, Rational>> hull_conjecture_vertices(int k);

// Exact convex-geometry helpers (shared with the tests).
std::vector<std::pair<Rational, Rational>> convex_hull(
    std::vector<std::pair<Rational, Rational>> pts);
bool point_in_convex_hull(const std::vector<std::pair<Rational, Rational>>& hull,
                          const std::pair<Rational, Rational>& p);

struct SweepEntry {
    StayPair pair;
    std::string witness_bits;  // first colouring attaining the pair
};

struct SweepResult {
    Outcome outcome = Outcome::Proven;
    size_t colourings_seen = 0;
    std::vector<SweepEntry> pairs;  // deduplicated, sorted by pair
};

// Exhaustive sweep over all balanced colourings (guarded) or a seeded random
// sample. Deterministic: identical parameters give identical output.
SweepResult sweep_pairs_exhaustive(int n, int k, int threads = 1);
SweepResult sweep_pairs_random(int n, int k, size_t count, uint64_t seed);

Certificate make_sweep_certificate(const SweepResult& r, int n, int k, const std::string& mode);
void register_torus_walks_verifiers(VerifierRegistry& reg);

}  // namespace combex
