#include "cmvar/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cmvar {

using nlohmann::ordered_json;

void Report::merge(const Report& sub) {
    for (const auto& c : sub.checks) {
        Check copy = c;
        copy.name = sub.suite + "/" + c.name;
        checks.push_back(std::move(copy));
    }
}

std::string Report::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    ordered_json checks_json = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = c.pass ? "pass" : "fail";
        if (c.witness.empty())
            cj["witness"] = nullptr;
        else
            cj["witness"] = c.witness;
        cj["ms"] = c.ms;
        checks_json.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks_json);
    ordered_json cfg;
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = std::move(cfg);
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    for (const auto& [k, v] : config) os << "  " << k << " = " << v << "\n";
    size_t passed = 0;
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.witness.empty()) os << "  (" << c.witness << ")";
        os << "  [" << static_cast<long>(c.ms + 0.5) << " ms]\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

} // namespace cmvar
