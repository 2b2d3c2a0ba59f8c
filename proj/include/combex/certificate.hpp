#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace combex {

// Machine-checkable record of one computed fact. A certificate must be
// re-checkable from `witness` and `params` alone; verifiers never see the
// solver state that produced it.
struct Certificate {
    std::string problem;                          // e.g. "cube-turan/exact"
    std::map<std::string, std::string> params;    // decimal strings, no precision loss
    std::string kind;                             // construction | exact | verification | bound
    std::string value;                            // integer or rational, as string
    nlohmann::json witness;                       // problem-specific encoding
    long long runtime_ms = 0;
    std::string tool_version;
    std::optional<long long> seed;

    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json& j);

    // Canonical byte form: sorted keys, two-space indent, trailing newline.
    std::string serialize() const;
    static Certificate parse(const std::string& text);

    void save(const std::string& path) const;
    static Certificate load(const std::string& path);
};

Certificate make_certificate(std::string problem, std::map<std::string, std::string> params,
                             std::string kind, std::string value, nlohmann::json witness);

struct VerifyResult {
    bool ok = false;
    std::string message;
};

using Verifier = std::function<VerifyResult(const Certificate&)>;

class VerifierRegistry {
  public:
    void add(const std::string& problem, Verifier v);
    VerifyResult verify(const Certificate& c) const;
    VerifyResult verify_file(const std::string& path) const;

  private:
    std::map<std::string, Verifier> verifiers_;
};

// Registers the verifiers of every problem module.
VerifierRegistry& default_registry();

inline constexpr const char* kToolVersion = "0.1.0";

// CLI / tool exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitBudget = 3;

}  // namespace combex
