#include "combex/rado_modular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace combex {

ModularInstance make_instance(int r, std::vector<long long> coeffs) {
    if (r < 0 || r > 20) throw std::invalid_argument("r out of range");
    if (coeffs.empty()) throw std::invalid_argument("need k >= 1 coefficients");
    ModularInstance inst{r, std::move(coeffs)};
    long long mod = inst.modulus();
    for (auto& c : inst.a) c = ((c % mod) + mod) % mod;
    return inst;
}

int compute_d(const ModularInstance& inst) {
    int k = int(inst.a.size());
    if (k > 24) throw std::invalid_argument("too many coefficients for subset enumeration");
    long long mod = inst.modulus();
    int best = 0;
    for (uint32_t subset = 1; subset < (uint32_t(1) << k); ++subset) {
        long long sum = 0;
        for (int i = 0; i < k; ++i)
            if ((subset >> i) & 1) sum += inst.a[i];
        sum %= mod;
        int val = inst.r;  // sum == 0 counts as full valuation
        if (sum != 0) {
            val = 0;
            while (sum % 2 == 0) {
                sum /= 2;
                ++val;
            }
        }
        best = std::max(best, std::min(val, inst.r));
    }
    return best;
}

int ModColouring::classes() const {
    int k = 0;
    for (int c : colour) k = std::max(k, c + 1);
    return k;
}

RadoCheck colouring_ok(const ModColouring& c, const ModularInstance& inst) {
    if (c.r != inst.r) throw std::invalid_argument("colouring modulus mismatch");
    long long mod = inst.modulus();
    if ((long long)c.colour.size() != mod) throw std::invalid_argument("colouring not total");
    int k = int(inst.a.size());
    double space = std::pow(double(mod), k);
    if (space > 1e8) throw std::invalid_argument("solution space too large to enumerate");
    int d = compute_d(inst);
    long long divisor = 1LL << (inst.r - d);

    std::vector<long long> x(k, 0);
    while (true) {
        // monochromatic?
        bool mono = true;
        for (int i = 1; i < k && mono; ++i)
            if (c.colour[x[i]] != c.colour[x[0]]) mono = false;
        if (mono) {
            long long sum = 0;
            for (int i = 0; i < k; ++i) sum = (sum + inst.a[i] * x[i]) % mod;
            if (sum == 0) {
                bool divisible = true;
                for (int i = 0; i < k && divisible; ++i)
                    if (x[i] % divisor != 0) divisible = false;
                if (!divisible) return {false, x};
            }
        }
        // odometer
        int pos = 0;
        while (pos < k && ++x[pos] == mod) x[pos++] = 0;
        if (pos == k) break;
    }
    return {};
}

namespace {

// restricted-growth strings with exactly `k` classes
bool next_partition_search(const ModularInstance& inst, int classes, ModColouring& out,
                           SearchClock& clock) {
    long long mod = inst.modulus();
    std::vector<int> rgs(mod, 0);
    std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
        if (clock.tick()) return false;
        if (pos == mod) {
            if (used != classes) return false;
            ModColouring c{inst.r, rgs};
            return colouring_ok(c, inst).ok;
        }
        // cannot reach `classes` distinct values any more
        if (used + (mod - pos) < classes) return false;
        int cap = std::min(used + 1, classes);
        for (int v = 0; v < cap; ++v) {
            rgs[pos] = v;
            if (rec(pos + 1, std::max(used, v + 1))) return true;
        }
        return false;
    };
    if (rec(0, 0)) {
        out = ModColouring{inst.r, rgs};
        return true;
    }
    return false;
}

}  // namespace

MinKResult min_K(const ModularInstance& inst, int k_max, const SearchBudget& budget) {
    SearchClock clock(budget);
    MinKResult res;
    for (int k = 1; k <= k_max; ++k) {
        ModColouring witness;
        if (next_partition_search(inst, k, witness, clock)) {
            res.outcome = Outcome::Proven;
            res.k = k;
            res.witness = witness;
            return res;
        }
        if (clock.stopped()) {
            res.outcome = Outcome::Budget;
            res.k = 0;
            return res;
        }
    }
    res.outcome = Outcome::Proven;  // search complete: no valid colouring up to k_max
    res.k = 0;
    return res;
}

// ---------------- certificates ----------------

Certificate make_min_k_certificate(const ModularInstance& inst, const MinKResult& r) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long long c : inst.a) coeffs.push_back(c);
    nlohmann::json classes = nlohmann::json::array();
    if (r.k > 0) {
        for (int cls = 0; cls < r.k; ++cls) {
            nlohmann::json members = nlohmann::json::array();
            for (long long x = 0; x < inst.modulus(); ++x)
                if (r.witness.colour[x] == cls) members.push_back(x);
            classes.push_back(members);
        }
    }
    Certificate c = make_certificate(
        "rado/min-k", {{"r", std::to_string(inst.r)}, {"k_max", "unbounded"}},
        r.outcome == Outcome::Proven ? "exact" : "bound", std::to_string(r.k),
        nlohmann::json{{"coefficients", coeffs}, {"classes", classes}});
    c.witness["d"] = compute_d(inst);
    return c;
}

void register_rado_verifiers(VerifierRegistry& reg) {
    reg.add("rado/min-k", [](const Certificate& cert) -> VerifyResult {
        int r = std::stoi(cert.params.at("r"));
        std::vector<long long> coeffs;
        for (const auto& j : cert.witness.at("coefficients")) coeffs.push_back(j.get<long long>());
        ModularInstance inst = make_instance(r, coeffs);
        if (cert.witness.at("d").get<int>() != compute_d(inst)) return {false, "d mismatch"};
        int k = std::stoi(cert.value);
        if (k == 0) return {true, "no-colouring result carries no witness to check"};
        ModColouring col{r, std::vector<int>(size_t(inst.modulus()), -1)};
        const auto& classes = cert.witness.at("classes");
        if (int(classes.size()) != k) return {false, "class count mismatch"};
        for (int cls = 0; cls < k; ++cls)
            for (const auto& j : classes[cls]) {
                long long x = j.get<long long>();
                if (x < 0 || x >= inst.modulus() || col.colour[x] != -1)
                    return {false, "classes are not a partition"};
                col.colour[x] = cls;
            }
        for (int c : col.colour)
            if (c < 0) return {false, "classes do not cover Z/2^r"};
        auto check = colouring_ok(col, inst);
        if (!check.ok) return {false, "witness colouring admits a bad monochromatic solution"};
        return {true, "witness colouring verified"};
    });
}

}  // namespace combex
