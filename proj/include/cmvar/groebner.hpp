#pragma once

#include "cmvar/parallel.hpp"
#include "cmvar/polynomial.hpp"

#include <vector>

namespace cmvar {

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // one per divisor: f = sum q_i g_i + r
};

/// Full multivariate division of f by G: no term of the remainder is
/// divisible by any leading term of G. Divisor choice scans G in the given
/// order, so the result is deterministic for a fixed G.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& ord);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& ord);

/// lcm-cancelled combination of f and g with both leading terms eliminated.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

struct PairFailure {
    size_t i, j;
    Polynomial remainder;
};

struct GbCheckResult {
    bool pass = false;
    std::vector<PairFailure> failures;
    size_t pairs_total = 0;
    size_t pairs_skipped = 0; // coprime leading terms (Buchberger's product criterion)
};

/// Buchberger criterion: every S-polynomial of a pair in G reduces to zero
/// modulo G. Pair reductions are independent, so they can run on the OpenMP
/// path; failures come back sorted by pair index either way.
GbCheckResult gb_check(const std::vector<Polynomial>& G, const TermOrder& ord,
                       Exec exec = Exec::serial);

/// Reduced Groebner basis of the ideal generated by F: pairs processed by
/// increasing weighted degree of the lcm, result inter-reduced, monic, and
/// sorted ascending by ord.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, const TermOrder& ord);

} // namespace cmvar
