#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wedge {

inline constexpr const char* kToolVersion = "wedge 0.1.0";

enum class ClaimStatus { Pass, Fail, Skip };

std::string to_string(ClaimStatus s);

struct Claim {
    std::string id;
    std::string description;
    std::string paper_anchor;
    ClaimStatus status = ClaimStatus::Fail;
    nlohmann::json witness;
};

struct Report {
    std::vector<Claim> claims;  // sorted by id
    std::string tool_version;
    long long elapsed_ms = 0;
};

struct ClaimInfo {
    std::string id;
    std::string description;
};

// Registry listing, sorted by id.
std::vector<ClaimInfo> list_claims();

struct UnknownClaimError : std::runtime_error {
    explicit UnknownClaimError(const std::string& what, std::vector<std::string> near)
        : std::runtime_error(what), suggestions(std::move(near)) {}
    std::vector<std::string> suggestions;
};

// Runs the named claims (all when empty). Checkers are pure; expensive shared
// context is computed once per report. Throws UnknownClaimError for a bad id.
Report run_claims(const std::vector<std::string>& ids = {});

std::string emit_text(const Report& r);
std::string emit_json(const Report& r);  // stable schema, stable key order

bool any_failed(const Report& r);

}  // namespace wedge
