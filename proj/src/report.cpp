#include "lkd/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace lkd {

void Report::add_pass(const std::string& name) { checks.push_back({name, "pass", "", 0.0}); }

void Report::add_fail(const std::string& name, const std::string& witness) {
    checks.push_back({name, "fail", witness, 0.0});
}

void Report::add(const std::string& name, bool pass, const std::string& witness_on_fail) {
    if (pass)
        add_pass(name);
    else
        add_fail(name, witness_on_fail);
}

void Report::append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.status != "fail"; });
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["seed"] = seed;
    auto sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : sorted) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.status;
        if (c.status == "fail") jc["witness"] = c.witness;
        jc["elapsed"] = c.elapsed;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    auto sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    for (const auto& c : sorted) {
        os << (c.status == "fail" ? "FAIL" : (c.status == "pass" ? "ok  " : "skip")) << "  "
           << c.name;
        if (!c.witness.empty()) os << "\n      " << c.witness;
        os << "\n";
    }
    return os.str();
}

}  // namespace lkd
