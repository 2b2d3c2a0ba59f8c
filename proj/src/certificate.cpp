#include "combex/certificate.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace combex {

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["problem"] = problem;
    j["params"] = params;
    j["kind"] = kind;
    j["value"] = value;
    j["witness"] = witness;
    nlohmann::json meta;
    meta["runtime_ms"] = runtime_ms;
    meta["tool_version"] = tool_version;
    if (seed) meta["seed"] = *seed;
    j["meta"] = meta;
    return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
    Certificate c;
    c.problem = j.at("problem").get<std::string>();
    if (j.contains("params")) {
        for (auto& [k, v] : j.at("params").items()) c.params[k] = v.get<std::string>();
    }
    c.kind = j.at("kind").get<std::string>();
    c.value = j.at("value").get<std::string>();
    c.witness = j.value("witness", nlohmann::json());
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        c.runtime_ms = m.value("runtime_ms", 0LL);
        c.tool_version = m.value("tool_version", std::string());
        if (m.contains("seed")) c.seed = m.at("seed").get<long long>();
    }
    return c;
}

std::string Certificate::serialize() const { return to_json().dump(2) + "\n"; }

Certificate Certificate::parse(const std::string& text) {
    return from_json(nlohmann::json::parse(text));
}

void Certificate::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize();
}

Certificate Certificate::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Certificate make_certificate(std::string problem, std::map<std::string, std::string> params,
                             std::string kind, std::string value, nlohmann::json witness) {
    Certificate c;
    c.problem = std::move(problem);
    c.params = std::move(params);
    c.kind = std::move(kind);
    c.value = std::move(value);
    c.witness = std::move(witness);
    c.tool_version = kToolVersion;
    return c;
}

void VerifierRegistry::add(const std::string& problem, Verifier v) {
    verifiers_[problem] = std::move(v);
}

VerifyResult VerifierRegistry::verify(const Certificate& c) const {
    auto it = verifiers_.find(c.problem);
    if (it == verifiers_.end()) return {false, "no verifier registered for '" + c.problem + "'"};
    try {
        return it->second(c);
    } catch (const std::exception& e) {
        return {false, std::string("verifier threw: ") + e.what()};
    }
}

VerifyResult VerifierRegistry::verify_file(const std::string& path) const {
    try {
        return verify(Certificate::load(path));
    } catch (const std::exception& e) {
        return {false, std::string("cannot load certificate: ") + e.what()};
    }
}

void register_cube_turan_verifiers(VerifierRegistry&);
void register_one_factorization_verifiers(VerifierRegistry&);
void register_two_families_verifiers(VerifierRegistry&);
void register_graph_intersect_verifiers(VerifierRegistry&);
void register_no_three_verifiers(VerifierRegistry&);
void register_torus_walks_verifiers(VerifierRegistry&);
void register_saturation_rainbow_verifiers(VerifierRegistry&);
void register_antipodal_verifiers(VerifierRegistry&);
void register_compressions_verifiers(VerifierRegistry&);
void register_rado_verifiers(VerifierRegistry&);
void register_product_partitions_verifiers(VerifierRegistry&);
void register_shattering_verifiers(VerifierRegistry&);

VerifierRegistry& default_registry() {
    static VerifierRegistry reg = [] {
        VerifierRegistry r;
        register_cube_turan_verifiers(r);
        register_one_factorization_verifiers(r);
        register_two_families_verifiers(r);
        register_graph_intersect_verifiers(r);
        register_no_three_verifiers(r);
        register_torus_walks_verifiers(r);
        register_saturation_rainbow_verifiers(r);
        register_antipodal_verifiers(r);
        register_compressions_verifiers(r);
        register_rado_verifiers(r);
        register_product_partitions_verifiers(r);
        register_shattering_verifiers(r);
        return r;
    }();
    return reg;
}

}  // namespace combex
