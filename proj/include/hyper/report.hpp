#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyper {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

/// Result of a verification suite.  The wall time is informational and is
/// kept out of the JSON form, which must be byte-identical for a fixed
/// seed and flag set.
struct Report {
    std::string suite;
    std::uint64_t seed{0};
    std::uint64_t trials{0};
    std::vector<CheckResult> checks;
    double wall_ms{0.0};

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const;
    std::string human_table() const;
};

inline CheckResult make_check(std::string name, double residual, double tolerance) {
    const bool ok = residual <= tolerance;
    return CheckResult{std::move(name), residual, tolerance, ok};
}

} // namespace hyper
