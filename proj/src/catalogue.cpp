#include "cmvar/catalogue.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace cmvar {

const RingPtr& a_ring() {
    static RingPtr ring = [] {
        std::vector<std::string> vars;
        for (int i = 1; i <= 14; ++i) vars.push_back("a" + std::to_string(i));
        return make_ring(std::move(vars), {1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4});
    }();
    return ring;
}

TermOrder default_order() {
    std::vector<std::string> prec;
    for (int i = 3; i <= 14; ++i) prec.push_back("a" + std::to_string(i));
    prec.push_back("a1");
    prec.push_back("a2");
    return TermOrder::wdegrevlex(a_ring(), prec);
}

TermOrder order_from_spec(const std::string& spec) {
    if (spec.empty() || spec == "default") return default_order();
    std::vector<std::string> prec;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        prec.push_back(item.substr(a, b - a + 1));
    }
    // A partial list orders the head; unlisted variables follow in ring order.
    std::vector<bool> used(a_ring()->nvars(), false);
    for (const auto& name : prec) {
        int i = a_ring()->index_of(name);
        if (i < 0) throw std::invalid_argument("order spec: unknown variable '" + name + "'");
        used[i] = true;
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i]) prec.push_back(a_ring()->vars[i]);
    return TermOrder::wdegrevlex(a_ring(), prec);
}

namespace {

Polynomial ap(const char* text) { return parse_polynomial(text, a_ring()); }

// Defining relations of the rank-4 Calogero-Moser coordinate ring.
const char* kR1 = "8*a3 + a3*a4^2 - a3^2*a5 - 2*a7^2 + 2*a6*a8 + 2*a3*a12 - 4*a4*a11 + 2*a5*a10";
const char* kR2 = "48*a6 - 4*a4^2*a6 + a3*a5*a6 - 3*a3^2*a8 + 6*a3*a4*a7 + 12*a6*a12 - 24*a7*a11 + 12*a8*a10";
const char* kR3 = "-2*a4*a5*a6 + 3*a3*a5*a7 - a3^2*a9 + 8*a6*a13 - 12*a7*a12 + 4*a9*a10";
const char* kR4 =
    "-6*a3^2 + 24*a10 - 6*a4^2*a10 - 6*a3*a5*a10 - 3*a3^2*a4^2 + 3*a3^3*a5 + 2*a3*a6*a8"
    " - 4*a4*a6*a7 + 2*a5*a6^2 - 12*a3^2*a12 + 24*a3*a4*a11 + 24*a10*a12 - 24*a11^2";
const char* kR5 =
    "12*a4*a5 - 48*a13 + 3*a3*a4*a5^2 - 3*a4^3*a5 + 2*a3*a8*a9 - 4*a4*a7*a9 + 2*a5*a6*a9"
    " - 3*a4*a5*a12 + 12*a4^2*a13 - 9*a3*a4*a14 + 3*a3*a5*a13 - 3*a5^2*a11 + 12*a11*a14 - 12*a12*a13";
const char* kR6 = "48*a7 - 12*a4^2*a7 - 3*a3*a5*a7 + 4*a4*a5*a6 + 18*a3*a4*a8 - 7*a3^2*a9"
                  " + 12*a9*a10 - 24*a8*a11 + 12*a7*a12";
const char* kT1 = "8*a5 + a4^2*a5 - a3*a5^2 - 2*a8^2 + 2*a7*a9 + 2*a5*a12 - 4*a4*a13 + 2*a3*a14";
const char* kT2 = "48*a9 - 4*a4^2*a9 + a3*a5*a9 - 3*a5^2*a7 + 6*a4*a5*a8 + 12*a9*a12 - 24*a8*a13 + 12*a7*a14";
const char* kT3 = "-2*a3*a4*a9 + 3*a3*a5*a8 - a5^2*a6 + 8*a9*a11 - 12*a8*a12 + 4*a6*a14";
const char* kT4 =
    "-6*a5^2 + 24*a14 - 6*a4^2*a14 - 6*a3*a5*a14 - 3*a4^2*a5^2 + 3*a3*a5^3 + 2*a5*a7*a9"
    " - 4*a4*a8*a9 + 2*a3*a9^2 - 12*a5^2*a12 + 24*a4*a5*a13 + 24*a12*a14 - 24*a13^2";
const char* kT5 =
    "12*a3*a4 - 48*a11 + 3*a3^2*a4*a5 - 3*a3*a4^3 + 2*a5*a6*a7 - 4*a4*a6*a8 + 2*a3*a6*a9"
    " - 3*a3*a4*a12 + 12*a4^2*a11 - 9*a4*a5*a10 + 3*a3*a5*a11 - 3*a3^2*a13 + 12*a10*a13 - 12*a11*a12";
const char* kT6 = "48*a8 - 12*a4^2*a8 - 3*a3*a5*a8 + 4*a3*a4*a9 + 18*a4*a5*a7 - 7*a5^2*a6"
                  " + 12*a6*a14 - 24*a7*a13 + 12*a8*a12";
const char* kS1 = "-4*a4 + a4^3 - a3*a4*a5 + a6*a9 - a7*a8 + 2*a3*a13 - 4*a4*a12 + 2*a5*a11";
const char* kS2 =
    "-96 + 18*a3*a5 + 32*a4^2 - 72*a12 - 2*a4^4 + 2*a3*a4^2*a5 - a3^2*a14 + 4*a3*a5*a12"
    " + 2*a3*a7*a9 - 4*a4*a7*a8 + 2*a5*a6*a8 - a5^2*a10 - 6*a3*a4*a13 + 10*a4^2*a12"
    " - 6*a4*a5*a11 + 4*a10*a14 + 8*a11*a13 - 12*a12^2";
const char* kS3 = "12*a3*a5 - 48*a12 + 4*a4^2*a12 + 2*a3*a5*a12 + a3^2*a14 - 4*a3*a4*a13"
                  " + a5^2*a10 - 4*a4*a5*a11 - 4*a10*a14 + 16*a11*a13 - 12*a12^2";

std::vector<std::pair<std::string, Polynomial>> cm4_generators() {
    return {{"r1", ap(kR1)}, {"r2", ap(kR2)}, {"r3", ap(kR3)}, {"r4", ap(kR4)}, {"r5", ap(kR5)},
            {"t1", ap(kT1)}, {"t2", ap(kT2)}, {"t3", ap(kT3)}, {"t4", ap(kT4)},
            {"s1", ap(kS1)}, {"s2", ap(kS2)}, {"s3", ap(kS3)}};
}

std::vector<std::pair<std::string, Polynomial>> cm4_extra() {
    return {{"r6", ap(kR6)}, {"t5", ap(kT5)}, {"t6", ap(kT6)}};
}

// Commuting-variety relations: the same list with the lower-degree terms
// removed, written as the explicit corrections.
std::vector<std::pair<std::string, Polynomial>> com4_relations() {
    auto gens = cm4_generators();
    auto extra = cm4_extra();
    std::map<std::string, Polynomial> g;
    for (auto& [n, p] : gens) g.emplace(n, std::move(p));
    for (auto& [n, p] : extra) g.emplace(n, std::move(p));
    auto corrected = [&](const std::string& name, const char* correction) {
        return std::make_pair(name, g.at(name) + ap(correction));
    };
    return {
        corrected("r1", "-8*a3"),
        corrected("r2", "-48*a6"),
        {"r3", g.at("r3")},
        corrected("r4", "6*a3^2 - 24*a10"),
        corrected("r5", "-12*a4*a5 + 48*a13"),
        corrected("r6", "-48*a7"),
        corrected("t1", "-8*a5"),
        corrected("t2", "-48*a9"),
        {"t3", g.at("t3")},
        corrected("t4", "6*a5^2 - 24*a14"),
        corrected("t5", "-12*a3*a4 + 48*a11"),
        corrected("t6", "-48*a8"),
        corrected("s1", "4*a4"),
        corrected("s2", "-18*a3*a5 - 32*a4^2 + 72*a12 + 96"),
        corrected("s3", "-12*a3*a5 + 48*a12"),
    };
}

std::vector<std::pair<std::string, Polynomial>> cm3_relations(const Rational& v) {
    Polynomial nine_v(a_ring(), Rational(9) * v);
    return {
        {"r1", ap("a3*a9 - 2*a4*a8 + a5*a7")},
        {"r2", ap("a5*a6 - 2*a4*a7 + a3*a8")},
        {"r3", nine_v * ap("a3") + ap("-a3*a4^2 + a3^2*a5 + 6*a6*a8 - 6*a7^2")},
        {"r4", nine_v * ap("a4") + ap("-a4^3 + a3*a4*a5 + 3*a6*a9 - 3*a7*a8")},
        {"r5", nine_v * ap("a5") + ap("-a4^2*a5 + a3*a5^2 + 6*a7*a9 - 6*a8^2")},
    };
}

} // namespace

const Polynomial& RelationSet::by_name(const std::string& n) const {
    for (const auto& [name, p] : polys)
        if (name == n) return p;
    throw std::out_of_range("RelationSet: no polynomial named '" + n + "'");
}

RelationSet relations(RelationSetName name, const Rational& v) {
    switch (name) {
    case RelationSetName::CM2:
        return {"CM2", {{"r1", ap("a4^2 - a3*a5 - 1")}}};
    case RelationSetName::CM3:
        return {"CM3", cm3_relations(v)};
    case RelationSetName::CM4:
        return {"CM4", cm4_generators()};
    case RelationSetName::CM4_EXTRA:
        return {"CM4_EXTRA", cm4_extra()};
    case RelationSetName::COM4:
        return {"COM4", com4_relations()};
    }
    throw std::invalid_argument("relations: unknown set");
}

RelationSetName relation_set_from_string(const std::string& s) {
    if (s == "CM2") return RelationSetName::CM2;
    if (s == "CM3") return RelationSetName::CM3;
    if (s == "CM4") return RelationSetName::CM4;
    if (s == "CM4_EXTRA") return RelationSetName::CM4_EXTRA;
    if (s == "COM4") return RelationSetName::COM4;
    throw std::invalid_argument("unknown relation set '" + s + "'");
}

std::vector<Polynomial> cm4_groebner_catalogue() {
    std::vector<Polynomial> out;
    for (auto& [n, p] : cm4_generators()) out.push_back(std::move(p));
    for (auto& [n, p] : cm4_extra()) out.push_back(std::move(p));
    return out;
}

namespace {

// (X,Y) -> (Y,-X): a1,...,a14 -> a2,-a1,a5,-a4,a3,a9,-a8,a7,-a6,a14,-a13,a12,-a11,a10
constexpr int kFourierPerm[14] = {2, 1, 5, 4, 3, 9, 8, 7, 6, 14, 13, 12, 11, 10};
constexpr int kFourierSign[14] = {1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1, -1, 1};
// X <-> Y swap: fixes a4, a12; the rest swap in mirror pairs.
constexpr int kInvolutionPerm[14] = {2, 1, 5, 4, 3, 9, 8, 7, 6, 14, 13, 12, 11, 10};

std::vector<int> perm_to_zero_based(const int (&perm)[14]) {
    std::vector<int> p(14);
    for (int i = 0; i < 14; ++i) p[i] = perm[i] - 1;
    return p;
}

} // namespace

Polynomial fourier(const Polynomial& f) {
    static const std::vector<int> perm = perm_to_zero_based(kFourierPerm);
    static const std::vector<int> sign(kFourierSign, kFourierSign + 14);
    return f.map_variables(perm, sign);
}

Polynomial involution(const Polynomial& f) {
    static const std::vector<int> perm = perm_to_zero_based(kInvolutionPerm);
    static const std::vector<int> sign(14, 1);
    return f.map_variables(perm, sign);
}

int involution_index(int i) { return kInvolutionPerm[i - 1]; }

namespace {

struct TableEntry {
    int i, j;
    const char* poly;
};

// Generator brackets, transcribed: plain-trace pairing, the power-trace
// pairs, the mixed rows computed through the traceless substitution, the
// semi-simple a4 row, and the remaining assembled rows.
const TableEntry kBracketData[] = {
    {1, 2, "4"},
    {3, 4, "2*a3"},
    {3, 5, "4*a4"},
    {3, 7, "2*a6"},
    {3, 8, "4*a7"},
    {3, 9, "6*a8"},
    {3, 11, "2*a10"},
    {3, 12, "4*a11"},
    {3, 13, "6*a12 + 12"},
    {3, 14, "8*a12"},
    {4, 6, "-3*a6"},
    {4, 7, "-a7"},
    {4, 10, "-4*a10"},
    {4, 11, "-2*a11"},
    {4, 12, "0"},
    {6, 7, "3*a10 - 3/4*a3^2"},
    {6, 8, "6*a11 - 3/2*a3*a4"},
    {6, 9, "9*a12 - 9/4*a3*a5"},
    {6, 11, "7/4*a3*a6"},
    {6, 12, "2*a4*a6 + 3/2*a3*a7"},
    {6, 13, "3/4*a5*a6 + 9/2*a4*a7"},
    {6, 14, "6*a4*a8 + 3*a5*a7 - 2*a3*a9"},
    {7, 8, "3*a12 + 12 - a4^2 + 1/4*a3*a5"},
    {7, 10, "-7/3*a3*a6"},
    {7, 11, "-5/6*a4*a6 + 1/4*a3*a7"},
    {7, 12, "a3*a8 + 1/6*a5*a6"},
    {7, 13, "2/3*a3*a9 + a4*a8 + 5/4*a5*a7"},
    {7, 14, "4*a5*a8 + 2/3*a4*a9"},
    {10, 11, "-1/2*a3^3 + 1/3*a6^2 + 3*a3*a10"},
    {10, 12, "-a3^2*a4 + 2/3*a6*a7 + 4*a3*a11 + 2*a4*a10"},
    {10, 13, "10*a3 - 3/2*a3^2*a5 + a6*a8 + 6*a3*a12 + 3*a5*a10"},
    {10, 14, "-64/5*a4 - 6/5*a3*a4*a5 - 4/5*a4^3 + 24/5*a7*a8 - 52/15*a6*a9"
             " + 12/5*a5*a11 + 36/5*a4*a12 + 12/5*a3*a13"},
    {11, 12, "9*a3 - 1/2*a3^2*a5 + 11/6*a6*a8 - 3/2*a7^2 + 2*a3*a12 + a5*a10"},
    {11, 13, "53/5*a4 - 2/5*a4^3 - 3/5*a3*a4*a5 + 18/5*a4*a12 + 6/5*a3*a13"
             " + 6/5*a5*a11 + 3/20*a7*a8 + 31/60*a6*a9"},
};

bool pure_letter_pair(int i, int j) {
    auto pure_x = [](int k) { return k == 1 || k == 3 || k == 6 || k == 10; };
    auto pure_y = [](int k) { return k == 2 || k == 5 || k == 9 || k == 14; };
    return (pure_x(i) && pure_x(j)) || (pure_y(i) && pure_y(j));
}

} // namespace

const BracketTable& BracketTable::standard() {
    static const BracketTable table = [] {
        BracketTable t;
        auto set = [&](int i, int j, Polynomial p, Provenance prov) {
            t.store_.push_back(std::move(p));
            t.idx_[i][j] = static_cast<int>(t.store_.size()); // 1-based; 0 = missing
            t.prov_[i][j] = prov;
        };
        for (int i = 1; i <= 14; ++i)
            for (int j = 1; j <= 14; ++j) t.prov_[i][j] = Provenance::missing;

        for (const auto& e : kBracketData)
            set(e.i, e.j, ap(e.poly), Provenance::tabulated);
        // Plain traces are central apart from their mutual bracket.
        for (int j = 3; j <= 14; ++j) {
            if (!t.idx_[1][j]) set(1, j, Polynomial(a_ring()), Provenance::central);
            if (!t.idx_[2][j]) set(2, j, Polynomial(a_ring()), Provenance::central);
        }
        for (int i = 1; i <= 14; ++i)
            for (int j = i + 1; j <= 14; ++j)
                if (!t.idx_[i][j] && pure_letter_pair(i, j))
                    set(i, j, Polynomial(a_ring()), Provenance::pure_letter);
        // Involution closure: {a_i, a_j} = -involution({a_si, a_sj}).
        for (int i = 1; i <= 14; ++i)
            for (int j = i + 1; j <= 14; ++j) {
                if (t.idx_[i][j]) continue;
                int si = involution_index(i), sj = involution_index(j);
                Polynomial image;
                if (si < sj && t.idx_[si][sj])
                    image = -involution(t.store_[t.idx_[si][sj] - 1]);
                else if (sj < si && t.idx_[sj][si])
                    image = involution(t.store_[t.idx_[sj][si] - 1]);
                else
                    continue;
                set(i, j, std::move(image), Provenance::involution);
            }
        for (int i = 1; i <= 14; ++i)
            for (int j = i + 1; j <= 14; ++j)
                if (!t.idx_[i][j]) t.gaps_.emplace_back(i, j);
        return t;
    }();
    return table;
}

Polynomial BracketTable::entry(int i, int j) const {
    if (i < 1 || i > 14 || j < 1 || j > 14) throw std::out_of_range("BracketTable::entry");
    if (i == j) return Polynomial(a_ring());
    if (i < j) {
        if (!idx_[i][j]) throw std::out_of_range("BracketTable::entry: pair not filled");
        return store_[idx_[i][j] - 1];
    }
    return -entry(j, i);
}

BracketTable::Provenance BracketTable::provenance(int i, int j) const {
    if (i > j) std::swap(i, j);
    return prov_[i][j];
}

bool BracketTable::involution_law_holds() const {
    for (int i = 1; i <= 14; ++i)
        for (int j = 1; j <= 14; ++j) {
            if (i == j) continue;
            int si = involution_index(i), sj = involution_index(j);
            if (!(entry(si, sj) == -involution(entry(i, j)))) return false;
        }
    return true;
}

Polynomial table_bracket(const Polynomial& f, const Polynomial& g, const BracketTable& table) {
    if (!same_ring(f.ring(), a_ring()) || !same_ring(g.ring(), a_ring()))
        throw std::invalid_argument("table_bracket: polynomials must live in the a-ring");
    // Bivector form of the Leibniz extension:
    // {f,g} = sum_{i<j} {a_i,a_j} (df/da_i dg/da_j - df/da_j dg/da_i).
    Polynomial out(a_ring());
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            for (size_t i = 0; i < 14; ++i) {
                if (!mf[i]) continue;
                for (size_t j = 0; j < 14; ++j) {
                    if (!mg[j] || i == j) continue;
                    Polynomial br = table.entry(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
                    if (br.is_zero()) continue;
                    Monomial m = mf * mg;
                    m[i] -= 1;
                    m[j] -= 1;
                    Rational c = cf * cg * Rational(static_cast<long>(mf[i]) * mg[j]);
                    out += Polynomial::term(a_ring(), m, c) * br;
                }
            }
        }
    }
    return out;
}

Polynomial jacobiator(int i, int j, int k, const BracketTable& table) {
    auto av = [&](int v) { return Polynomial::variable(a_ring(), v - 1); };
    Polynomial inner_ij = table.entry(i, j), inner_ki = table.entry(k, i), inner_jk = table.entry(j, k);
    return table_bracket(inner_ij, av(k), table) + table_bracket(inner_ki, av(j), table) +
           table_bracket(inner_jk, av(i), table);
}

std::vector<DeriveOutcome> derive_cm4(const BracketTable& table) {
    RelationSet cat12 = relations(RelationSetName::CM4);
    RelationSet cat3 = relations(RelationSetName::CM4_EXTRA);
    auto catalogue_poly = [&](const std::string& name) -> const Polynomial& {
        for (const auto& [n, p] : cat12.polys)
            if (n == name) return p;
        return cat3.by_name(name);
    };

    auto av = [&](int v) { return Polynomial::variable(a_ring(), v - 1); };
    auto br = [&](const Polynomial& f, const Polynomial& g) { return table_bracket(f, g, table); };

    const Polynomial& r1 = catalogue_poly("r1");
    std::map<std::string, Polynomial> derived;
    derived["r1"] = r1;
    derived["r2"] = Rational(-6) * br(r1, av(7));
    derived["r3"] = Rational(1, 6) * br(derived["r2"], av(5));
    derived["r4"] = Rational(1, 2) * br(br(r1, av(8)), av(6));
    derived["r5"] = Rational(1, 2) * br(br(r1, av(8)), av(9));
    derived["r6"] = Rational(3) * br(r1, av(8));
    for (int i = 1; i <= 6; ++i)
        derived["t" + std::to_string(i)] = fourier(derived["r" + std::to_string(i)]);
    derived["s1"] = Rational(1, 4) * br(r1, av(5));
    derived["s2"] = av(3) * derived["t1"] - Rational(1, 6) * br(derived["r5"], av(3));
    derived["s3"] = Rational(-1, 9) * br(derived["r2"], av(9));

    // Derivation order fixes which elements count as "prior" for the
    // modulo comparison.
    const std::vector<std::string> order = {"r1", "r2", "r3", "r4", "r5", "r6",
                                            "t1", "t2", "t3", "t4", "t5", "t6",
                                            "s1", "s2", "s3"};
    TermOrder ord = default_order();
    std::vector<DeriveOutcome> out;
    std::vector<Polynomial> prior;
    for (const auto& name : order) {
        const Polynomial& d = derived[name];
        const Polynomial& c = catalogue_poly(name);
        DeriveOutcome o{name, d, DeriveOutcome::Mode::mismatch, Rational(1)};
        if (d == c) {
            o.mode = DeriveOutcome::Mode::exact;
        } else if (auto ratio = d.scalar_ratio_to(c)) {
            o.mode = DeriveOutcome::Mode::scalar;
            o.factor = *ratio;
        } else if (!prior.empty()) {
            std::vector<Polynomial> gb = buchberger(prior, ord);
            if (normal_form(d - c, gb, ord).is_zero()) o.mode = DeriveOutcome::Mode::modulo_prior;
        }
        out.push_back(std::move(o));
        prior.push_back(c);
    }
    return out;
}

} // namespace cmvar
