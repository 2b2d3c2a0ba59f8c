#pragma once

#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/cube.hpp"

namespace combex {

// Perfect matchings and 1-factorizations of Q_d, plus the bipartite
// permutation-sign machinery behind Laufer's lemma.

struct CubeMatching {
    int d = 0;
    std::vector<CubeEdge> edges;  // 2^(d-1) disjoint edges covering V(Q_d)
};

struct OneFactorization {
    int d = 0;
    std::vector<CubeMatching> factors;  // d pairwise edge-disjoint factors covering E(Q_d)
};

bool is_perfect_matching(const CubeMatching& m);
bool is_one_factorization(const OneFactorization& f);

// Factor i = all edges in direction i.
OneFactorization direction_factorization(int d);

// Union of the selected factors connected on all 2^d vertices?
bool union_connected(const OneFactorization& f, const std::vector<int>& idx);

// Least r such that every r-subset of factors has a connected union.
int r_of(const OneFactorization& f);

std::vector<CubeMatching> all_perfect_matchings(int d);  // d <= 4

// All 1-factorizations of Q_3 (each factorization listed once, as an
// unordered set of factors in a deterministic order).
std::vector<OneFactorization> all_one_factorizations_q3();

struct ExhaustiveR {
    Outcome outcome = Outcome::Proven;
    int d = 0;
    int r = 0;  // minimum of r_of over enumerated factorizations
    OneFactorization witness;
    size_t factorizations_seen = 0;
};

// d = 3: complete enumeration. d = 4: enumeration with the first factor
// reduced to orbit representatives under the stabiliser of the lowest edge
// in Aut(Q_4); budget-guarded.
ExhaustiveR exhaustive_r(int d, const SearchBudget& budget = {});

// ---- generic bipartite hosts (Laufer's lemma applies to any of them) ----

struct BipartiteHost {
    int nx = 0;                         // both classes of size nx
    std::vector<std::vector<int>> adj;  // adj[x] = neighbours y of x
};

// A perfect matching viewed as the function X -> Y.
using HostMatching = std::vector<int>;

BipartiteHost cube_host(int d);  // X = even-weight vertices of Q_d
HostMatching to_host_matching(const CubeMatching& m);
BipartiteHost complete_host(int m);  // K_{m,m}

// sign of pi_{j,i} = M_j^{-1} M_i on X
int matching_permutation_sign(const HostMatching& mi, const HostMatching& mj);

struct MatchingGraph {
    int m = 0;
    std::vector<std::vector<char>> adj;  // adjacency: union of the two matchings connected
    bool bipartite = false;
};

// Preconditions: M partitions E(host) and nx is even; Lemma 2.2 then says
// the verdict must be bipartite.
MatchingGraph matching_graph(const BipartiteHost& host, const std::vector<HostMatching>& m);

Certificate make_exhaustive_r_certificate(const ExhaustiveR& r);
void register_one_factorization_verifiers(VerifierRegistry& reg);

}  // namespace combex
