#include "cmvar/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cmvar {

UniPoly UniPoly::one_minus_power(long exp) {
    std::vector<long long> c(exp + 1, 0);
    c[0] = 1;
    c[exp] = -1;
    return UniPoly(std::move(c));
}

long long UniPoly::sum_coeffs() const {
    long long s = 0;
    for (auto x : c_) s += x;
    return s;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::shifted(long k) const {
    if (is_zero()) return UniPoly();
    std::vector<long long> c(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly: division by zero");
    if (is_zero()) return UniPoly();
    std::vector<long long> rem = c_;
    int dd = divisor.degree();
    long long dl = divisor.c_.back();
    if (static_cast<int>(rem.size()) - 1 < dd) throw std::domain_error("UniPoly: inexact division");
    std::vector<long long> q(rem.size() - dd, 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k] == 0) continue;
        if (rem[k] % dl != 0) throw std::domain_error("UniPoly: inexact division");
        long long f = rem[k] / dl;
        q[k - dd] = f;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * divisor.c_[i];
    }
    for (auto x : rem)
        if (x != 0) throw std::domain_error("UniPoly: inexact division");
    return UniPoly(std::move(q));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        long long v = c_[k];
        if (!v) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        long long a = v < 0 ? -v : v;
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "T";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

void HilbertSeries::add_denominator_factor(long weight, int multiplicity) {
    for (auto& [w, m] : denominator)
        if (w == weight) {
            m += multiplicity;
            return;
        }
    denominator.emplace_back(weight, multiplicity);
    std::sort(denominator.begin(), denominator.end());
}

UniPoly HilbertSeries::denominator_poly() const {
    UniPoly d(1);
    for (const auto& [w, m] : denominator)
        for (int i = 0; i < m; ++i) d = d * UniPoly::one_minus_power(w);
    return d;
}

bool HilbertSeries::equals(const HilbertSeries& o) const {
    return numerator * o.denominator_poly() == o.numerator * denominator_poly();
}

HilbertSeries HilbertSeries::with_denominator(std::vector<std::pair<long, int>> target) const {
    HilbertSeries out;
    out.denominator = std::move(target);
    std::sort(out.denominator.begin(), out.denominator.end());
    out.numerator = (numerator * out.denominator_poly()).divide_exact(denominator_poly());
    return out;
}

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << "(" << numerator.str() << ")";
    if (!denominator.empty()) {
        os << " / (";
        bool first = true;
        for (const auto& [w, m] : denominator) {
            if (!first) os << " * ";
            first = false;
            os << "(1 - T";
            if (w > 1) os << "^" << w;
            os << ")";
            if (m > 1) os << "^" << m;
        }
        os << ")";
    }
    return os.str();
}

namespace {

// Remove generators divisible by another generator; drops duplicates.
void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree() || (a.total_degree() == b.total_degree() && a < b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& g : out)
            if (g.divides(m)) { divisible = true; break; }
        if (!divisible) out.push_back(m);
    }
    gens = std::move(out);
}

UniPoly numerator_rec(std::vector<Monomial> gens, std::span<const long> weights) {
    minimalize(gens);
    if (gens.empty()) return UniPoly(1);
    if (gens.size() == 1 && gens[0].is_one()) return UniPoly();

    // Pure-power base case: numerator is a product of (1 - T^{w e}).
    bool pure = true;
    for (const auto& g : gens) {
        int nz = 0;
        for (size_t v = 0; v < g.nvars(); ++v)
            if (g[v]) ++nz;
        if (nz != 1) { pure = false; break; }
    }
    if (pure) {
        UniPoly p(1);
        for (const auto& g : gens)
            for (size_t v = 0; v < g.nvars(); ++v)
                if (g[v]) p = p * UniPoly::one_minus_power(weights[v] * static_cast<long>(g[v]));
        return p;
    }

    // Pivot on the most shared variable: N(I) = N(I + (x)) + T^w N(I : x).
    size_t nvars = gens[0].nvars();
    std::vector<int> count(nvars, 0);
    for (const auto& g : gens)
        for (size_t v = 0; v < nvars; ++v)
            if (g[v]) ++count[v];
    size_t pivot = 0;
    for (size_t v = 1; v < nvars; ++v)
        if (count[v] > count[pivot]) pivot = v;

    std::vector<Monomial> plus, colon;
    Monomial pv(nvars);
    pv[pivot] = 1;
    plus.push_back(pv);
    for (const auto& g : gens) {
        if (!g[pivot]) plus.push_back(g);
        Monomial q = g;
        if (q[pivot]) q[pivot] -= 1;
        colon.push_back(std::move(q));
    }
    UniPoly a = numerator_rec(std::move(plus), weights);
    UniPoly b = numerator_rec(std::move(colon), weights);
    return a + b.shifted(weights[pivot]);
}

} // namespace

UniPoly hilbert_numerator(std::vector<Monomial> gens, std::span<const long> weights) {
    for (const auto& g : gens)
        if (g.nvars() != weights.size())
            throw std::invalid_argument("hilbert_numerator: monomial/weight arity mismatch");
    return numerator_rec(std::move(gens), weights);
}

HilbertSeries hilbert_series(std::vector<Monomial> gens, std::span<const long> weights) {
    HilbertSeries s;
    s.numerator = hilbert_numerator(std::move(gens), weights);
    for (long w : weights) s.add_denominator_factor(w);
    return s;
}

} // namespace cmvar
