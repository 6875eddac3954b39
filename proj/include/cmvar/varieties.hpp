#pragma once

#include "cmvar/matrix.hpp"
#include "cmvar/polynomial.hpp"
#include "cmvar/rng.hpp"
#include "cmvar/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmvar {

enum class Variety { CM, COM };

/// Exact point of a Calogero-Moser space (rank([X,Y] + I) = 1, with quadruple
/// witness) or of the commuting variety ([X,Y] = 0).
struct VarietyPoint {
    Variety variety;
    int n = 0;
    Matrix X, Y;
    std::optional<CMQuadruple> witness;

    bool valid() const;
};

/// Moser parametrization: X diagonal with distinct entries x, Y with diagonal
/// p and Cauchy off-diagonal 1/(x_i - x_j); then [X,Y] + I is the all-ones
/// matrix. Throws std::invalid_argument on repeated x entries or length
/// mismatch.
VarietyPoint cm_point(int n, const std::vector<Rational>& x, const std::vector<Rational>& p);

/// Commuting diagonal pair Diag[lambda], Diag[mu].
VarietyPoint com_point(const std::vector<Rational>& lambda, const std::vector<Rational>& mu);

/// Values a_1..a_k at a point, k = n(n+3)/2: plain traces of X and Y, then
/// traces of words in the traceless parts.
struct GeneratorPoint {
    int n = 0;
    std::vector<Rational> values;

    const Rational& a(int i) const { return values.at(i - 1); }
};

GeneratorPoint generators_at(const VarietyPoint& pt);

/// Ring Q[l1..ln, m1..mn] housing the symbolic diagonal model.
RingPtr lambda_mu_ring(int n);

/// Each a_i as a polynomial in the diagonal symbols via centered power sums.
std::vector<Polynomial> symbolic_com_generators(int n, const RingPtr& ring);

/// Seeded CM sample: distinct integer x in a small box, integer p.
VarietyPoint random_cm_point(int n, Rng& rng);

/// Seeded commuting diagonal sample.
VarietyPoint random_com_point(int n, Rng& rng);

/// Integer-entry pair that satisfies neither variety condition (rejection
/// sampled; deterministic per seed).
std::pair<Matrix, Matrix> random_offvariety_point(uint64_t seed);

/// Exact pointwise identity check; words are evaluated at the traceless
/// parts of the point's matrices.
bool verify_identity_at(const WordSum& lhs, const WordSum& rhs, const VarietyPoint& pt);

std::string point_to_json(const VarietyPoint& pt);
VarietyPoint point_from_json(const std::string& text);

} // namespace cmvar
