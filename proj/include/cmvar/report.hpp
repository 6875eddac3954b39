#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace cmvar {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness; // empty when passing, unless informational
    double ms = 0.0;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> config; // ordered key/value

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(Check c) { checks.push_back(std::move(c)); }
    void merge(const Report& sub); // prefixes check names with sub.suite

    /// Deterministic apart from the "ms" fields.
    std::string to_json() const;
    std::string to_text() const;
};

/// Runs body(), records elapsed milliseconds, returns the finished check.
template <class F>
Check timed_check(const std::string& name, F&& body) {
    Check c;
    c.name = name;
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    auto t1 = std::chrono::steady_clock::now();
    c.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return c;
}

} // namespace cmvar
