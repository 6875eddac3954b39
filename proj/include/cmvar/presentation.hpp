#pragma once

#include "cmvar/catalogue.hpp"
#include "cmvar/hilbert.hpp"
#include "cmvar/parallel.hpp"
#include "cmvar/report.hpp"
#include "cmvar/trace_poly.hpp"
#include "cmvar/varieties.hpp"

#include <cstdint>

namespace cmvar {

/// The Hilbert series of the rank-4 quotient:
/// (1 + T^2 + 2T^3 + 4T^4 + 2T^5 + 4T^6 + 2T^7 + 4T^8 + 2T^9 + T^10 + T^12)
/// over (1-T)^2 (1-T^2)^2 (1-T^3)^2 (1-T^4)^2.
HilbertSeries reference_hilbert_series();

/// The 24 monomials spanning the quotient as a free module over the
/// symmetric-function subring.
std::vector<Monomial> free_module_basis();

/// Named pointwise trace identities in the traceless letters, all exact on
/// rank-4 Calogero-Moser points.
std::vector<std::pair<std::string, std::pair<TracePoly, TracePoly>>> cm_trace_identities();

/// Relation vanishing at seeded exact points (n = 2, 3, 4); for n = 4 also
/// the identity suites and the negative controls.
Report verify_cm(int n, int trials, uint64_t seed, Exec exec = Exec::serial);

/// Symbolic zero of every commuting-variety relation under the diagonal
/// substitution; optionally also sampled diagonal points.
Report verify_com(bool symbolic, int trials, uint64_t seed);

/// poisson_numeric against the bracket table at sampled CM points, for every
/// generator pair, plus the table completion and involution-law checks.
Report verify_brackets(int points, uint64_t seed, Exec exec = Exec::serial);

/// The jacobiator identity on (5,10,12) and random triples reducing to zero
/// modulo the certified basis.
Report jacobi_report(int triples, uint64_t seed, const TermOrder& ord);

/// Buchberger criterion on the 15-element catalogue; optional completion of
/// the 12 generators with the up-to-scalar comparison.
Report groebner_report(const TermOrder& ord, bool complete, Exec exec = Exec::serial);

Report hilbert_report(const TermOrder& ord, Exec exec = Exec::serial);
Report basis_report(const TermOrder& ord);
Report derive_report(const TermOrder& ord);
Report discriminant_report();

/// Cayley-Hamilton residual sweep plus the pointwise identity suites.
Report identities_report(int matrices, int points, uint64_t seed, Exec exec = Exec::serial);

struct AllConfig {
    uint64_t seed = 0;
    int trials = 100;
    bool complete = true;
    Exec exec = Exec::serial;
};

Report report_all(const AllConfig& cfg);

} // namespace cmvar
