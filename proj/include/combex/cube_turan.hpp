#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/cube.hpp"
#include "combex/rational.hpp"

namespace combex {

// A homogeneous set of k-subcubes of Q_n.
struct SubcubeSet {
    int n = 0;
    int k = 0;
    std::vector<Subcube> members;  // distinct, each with k stars
};

struct FreeCheck {
    bool free = false;
    std::optional<Subcube> violator;  // a d-subcube all of whose k-subcubes are in S
};

// S is Q_d-free iff every d-subcube contains some k-subcube outside S.
FreeCheck is_free(const SubcubeSet& s, int d);

BigInt subcube_layer_size(int n, int k);  // |Q_k^n| = C(n,k) 2^(n-k)

enum class TuranConstruction {
    WeightMod4K0,  // vertices of weight not divisible by 4 (k = 0)
    C13,           // 1-subcubes with w0, w1 not both even
    D2,            // 2-subcubes, d-part balanced partition variant; param = d
    C2,            // 2-subcubes, w0,w1,w2 not all divisible by m+1; param = m
};

std::string turan_construction_name(TuranConstruction c);
std::optional<TuranConstruction> parse_turan_construction(const std::string& name);

// The forbidden-cube order each construction is built against.
int turan_construction_d(TuranConstruction c, int param);

SubcubeSet construct_turan(TuranConstruction kind, int n, int param = 0);

struct TuranResult {
    Outcome outcome = Outcome::Proven;
    int n = 0, k = 0, d = 0;
    BigInt value;        // ex_k(n,d) when Proven, else a lower bound
    SubcubeSet witness;  // Q_d-free set attaining `value`
    Rational density;    // value / |Q_k^n|
};

// Exact ex_k(n,d): branch and bound over which k-subcubes to leave out,
// always branching inside a currently violated d-subcube. The root branch is
// collapsed to a single choice: coordinate permutations and 0/1 swaps act
// transitively on the k-subcubes of the first violated d-subcube.
TuranResult exact_ex(int n, int k, int d, const SearchBudget& budget = {});

std::vector<std::pair<int, Rational>> turan_density_profile(TuranConstruction kind, int param,
                                                            int n_lo, int n_hi);

Certificate make_turan_free_certificate(TuranConstruction kind, int n, int param);
Certificate make_turan_exact_certificate(const TuranResult& r);
Certificate make_turan_density_certificate(TuranConstruction kind, int param, int n_lo, int n_hi);

void register_cube_turan_verifiers(VerifierRegistry& reg);

}  // namespace combex
