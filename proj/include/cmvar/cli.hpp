#pragma once

#include "cmvar/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cmvar {

/// One CLI invocation. The command pair selects the suite or export; all
/// randomness flows from the single seed.
struct RunConfig {
    std::string command;    // verify | derive | groebner | hilbert | basis |
                            // discriminant | export | report
    std::string subcommand; // cm | com | brackets | relations | table |
                            // check | complete | all
    uint64_t seed = 0;
    int trials = 100;
    int n = 4;
    std::string order = "default";
    Rational v = Rational(1); // CM3 parameter
    std::string set;          // relation set name for exports
    std::string format = "text";
    std::string output; // path; empty writes to stdout
    bool parallel = true;
};

/// Dispatches, writes the report or export to the configured sink, and
/// returns the process exit status: 0 when every check passes, 1 on check
/// failures, 2 on usage errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace cmvar
