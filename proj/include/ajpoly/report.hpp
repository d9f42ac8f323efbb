#pragma once

#include "json.hpp"

#include <string>

namespace ajpoly {

/// Append-only JSON verification report with a fixed schema version.
class Report {
public:
    explicit Report(const std::string& command);

    nlohmann::json& params() { return j_["params"]; }
    nlohmann::json& results() { return j_["results"]; }

    void add_check(const std::string& name, bool pass, const nlohmann::json& detail = {});
    bool all_passed() const { return pass_; }

    /// Serialize with stable key order and fixed float formatting.
    std::string dump() const;
    void write(const std::string& path, bool quiet) const;

private:
    nlohmann::json j_;
    bool pass_ = true;
};

/// Deterministic float formatting helper ("%.17g").
std::string format_double(double v);

}  // namespace ajpoly
