#pragma once

#include "cmvar/groebner.hpp"
#include "cmvar/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cmvar {

/// Ring Q[a1..a14] with the trace-degree weights 1,1,2,2,2,3,3,3,3,4,4,4,4,4.
const RingPtr& a_ring();

/// Default term order for the relation ideals: weighted degrevlex with
/// precedence a3 > a4 > ... > a14 > a1 > a2.
TermOrder default_order();
TermOrder order_from_spec(const std::string& spec); // "default" or comma list

enum class RelationSetName { CM2, CM3, CM4, CM4_EXTRA, COM4 };

struct RelationSet {
    std::string name;
    std::vector<std::pair<std::string, Polynomial>> polys;

    const Polynomial& by_name(const std::string& n) const;
};

/// The named relation lists. CM3 takes the parameter v (defaults to 1);
/// other sets ignore it.
RelationSet relations(RelationSetName name, const Rational& v = Rational(1));
RelationSetName relation_set_from_string(const std::string& s);

/// The twelve CM4 generators followed by the three completion elements.
std::vector<Polynomial> cm4_groebner_catalogue();

/// (X, Y) -> (Y, -X) substitution on generators.
Polynomial fourier(const Polynomial& f);
/// X <-> Y swap on generators; fixes a4 and a12.
Polynomial involution(const Polynomial& f);
int involution_index(int i); // s on 1..14

/// Antisymmetric table of generator brackets, transcribed entries completed
/// by the pure-letter rule, centrality of the plain traces, the involution
/// law, and antisymmetry.
class BracketTable {
public:
    enum class Provenance { tabulated, central, pure_letter, involution, missing };

    static const BracketTable& standard();

    /// {a_i, a_j}; antisymmetric in (i, j), 1-based.
    Polynomial entry(int i, int j) const;
    Provenance provenance(int i, int j) const;
    /// Pairs the completion could not fill (expected empty).
    const std::vector<std::pair<int, int>>& gaps() const { return gaps_; }
    /// The involution law as polynomial identities over all filled pairs.
    bool involution_law_holds() const;

private:
    BracketTable() = default;
    std::array<std::array<int, 15>, 15> idx_{};
    std::vector<Polynomial> store_;
    std::array<std::array<Provenance, 15>, 15> prov_{};
    std::vector<std::pair<int, int>> gaps_;
};

/// Bilinear Leibniz extension of the generator table to polynomials.
Polynomial table_bracket(const Polynomial& f, const Polynomial& g,
                         const BracketTable& table = BracketTable::standard());

/// {{a_i,a_j},a_k} + {{a_k,a_i},a_j} + {{a_j,a_k},a_i} from the table.
Polynomial jacobiator(int i, int j, int k, const BracketTable& table = BracketTable::standard());

/// Outcome of rebuilding a catalogue element from r1 with the bracket.
struct DeriveOutcome {
    std::string name;
    Polynomial derived;
    enum class Mode { exact, scalar, modulo_prior, mismatch } mode;
    Rational factor; // derived = factor * catalogue entry, for mode scalar
};

/// r2 = -6{r1,a7}, r3 = 1/6{r2,a5}, r4 = 1/2{{r1,a8},a6}, r5 = 1/2{{r1,a8},a9},
/// r6 = 3{r1,a8}, t_i = fourier(r_i), s1 = 1/4{r1,a5}, s2 = a3 t1 - 1/6{r5,a3},
/// s3 = -1/9{r2,a9}; each compared against the stored catalogue.
std::vector<DeriveOutcome> derive_cm4(const BracketTable& table = BracketTable::standard());

} // namespace cmvar
