#include "cmvar/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace cmvar {

namespace {

struct OrdGreater {
    const TermOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(b, a); }
};

// Working form: terms sorted descending, begin() is the leading term.
using Work = std::map<Monomial, Rational, OrdGreater>;

Work to_work(const Polynomial& f, const TermOrder& ord) {
    Work w(OrdGreater{&ord});
    for (const auto& [m, c] : f.terms()) w.emplace(m, c);
    return w;
}

void work_add_scaled(Work& w, const Rational& c, const Monomial& m, const Polynomial& f) {
    for (const auto& [mf, cf] : f.terms()) {
        Monomial key = m * mf;
        Rational val = c * cf;
        auto [it, inserted] = w.emplace(std::move(key), val);
        if (!inserted) {
            it->second += val;
            if (it->second.is_zero()) w.erase(it);
        }
    }
}

} // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& ord) {
    if (G.empty()) throw std::invalid_argument("divide: empty divisor list");
    const RingPtr& ring = f.ring();
    for (const auto& g : G) {
        if (!same_ring(ring, g.ring())) throw std::invalid_argument("divide: ring mismatch");
        if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    }
    std::vector<Term> leads;
    leads.reserve(G.size());
    for (const auto& g : G) leads.push_back(g.leading_term(ord));

    DivisionResult res;
    res.remainder = Polynomial(ring);
    res.quotients.assign(G.size(), Polynomial(ring));

    Work w = to_work(f, ord);
    while (!w.empty()) {
        const Monomial lead = w.begin()->first;
        const Rational coeff = w.begin()->second;
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (!leads[k].mono.divides(lead)) continue;
            Monomial q = lead / leads[k].mono;
            Rational c = coeff / leads[k].coeff;
            res.quotients[k].add_term(q, c);
            work_add_scaled(w, -c, q, G[k]);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(lead, coeff);
            w.erase(w.begin());
        }
    }
    return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& ord) {
    return divide(f, G, ord).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("s_polynomial: ring mismatch");
    Term lf = f.leading_term(ord), lg = g.leading_term(ord);
    Monomial l = lcm(lf.mono, lg.mono);
    Polynomial s(f.ring());
    s.add_scaled(lf.coeff.inverse(), l / lf.mono, f);
    s.add_scaled(-(lg.coeff.inverse()), l / lg.mono, g);
    return s;
}

GbCheckResult gb_check(const std::vector<Polynomial>& G, const TermOrder& ord, Exec exec) {
    if (G.empty()) throw std::invalid_argument("gb_check: empty basis");
    std::vector<Term> leads;
    for (const auto& g : G) leads.push_back(g.leading_term(ord));

    std::vector<std::pair<size_t, size_t>> pairs;
    GbCheckResult res;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            ++res.pairs_total;
            if (coprime(leads[i].mono, leads[j].mono))
                ++res.pairs_skipped;
            else
                pairs.emplace_back(i, j);
        }

    std::vector<char> failed(pairs.size(), 0);
    std::vector<Polynomial> remainders(pairs.size());
    parallel_for(exec, pairs.size(), [&](size_t k) {
        auto [i, j] = pairs[k];
        Polynomial r = normal_form(s_polynomial(G[i], G[j], ord), G, ord);
        if (!r.is_zero()) {
            failed[k] = 1;
            remainders[k] = std::move(r);
        }
    });
    for (size_t k = 0; k < pairs.size(); ++k)
        if (failed[k])
            res.failures.push_back({pairs[k].first, pairs[k].second, std::move(remainders[k])});
    res.pass = res.failures.empty();
    return res;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, const TermOrder& ord) {
    if (F.empty()) throw std::invalid_argument("buchberger: empty generator list");
    std::vector<Polynomial> G;
    for (const auto& f : F)
        if (!f.is_zero()) G.push_back(f);
    if (G.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    struct Pair {
        long degree; // weighted degree of lcm (normal selection strategy)
        size_t i, j;
        bool operator<(const Pair& o) const {
            return degree != o.degree ? degree < o.degree : (i != o.i ? i < o.i : j < o.j);
        }
    };

    auto lead = [&](size_t i) { return G[i].leading_term(ord).mono; };

    std::vector<Pair> queue;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (coprime(lead(i), lead(j))) continue;
            queue.push_back({ord.weighted_degree(lcm(lead(i), lead(j))), i, j});
        }
        std::sort(queue.begin(), queue.end());
    };
    for (size_t j = 0; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        Polynomial r = normal_form(s_polynomial(G[p.i], G[p.j], ord), G, ord);
        if (r.is_zero()) continue;
        Rational lc = r.leading_term(ord).coeff;
        r *= lc.inverse();
        G.push_back(std::move(r));
        push_pairs(G.size() - 1);
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        Monomial li = lead(i);
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lj = lead(j);
            if (lj.divides(li) && !(lj == li && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Inter-reduce to the unique reduced basis, monic.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) break;
            Polynomial r = normal_form(minimal[i], others, ord);
            if (!(r == minimal[i])) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    minimal[i] = std::move(r);
                }
            }
        }
    }
    for (auto& g : minimal) g *= g.leading_term(ord).coeff.inverse();
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return minimal;
}

} // namespace cmvar
