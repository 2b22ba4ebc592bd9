#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lkd {

struct CheckRecord {
    std::string name;
    std::string status;   // "pass" | "fail" | "skipped"
    std::string witness;  // present iff fail
    double elapsed = 0.0;
};

struct Report {
    std::string suite;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    void add_pass(const std::string& name);
    void add_fail(const std::string& name, const std::string& witness);
    void add(const std::string& name, bool pass, const std::string& witness_on_fail);
    void append(const Report& other);  // merges checks of a sub-suite

    bool all_pass() const;
    /// Stable serialization: checks sorted by name, fixed key order.
    std::string to_json() const;
    /// Human-oriented one-line-per-check rendering.
    std::string to_text() const;
};

}  // namespace lkd
