#include "cmvar/ring.hpp"

#include <stdexcept>

namespace cmvar {

RingPtr make_ring(std::vector<std::string> vars, std::vector<long> weights) {
    if (vars.size() != weights.size())
        throw std::invalid_argument("make_ring: variable/weight count mismatch");
    for (long w : weights)
        if (w <= 0) throw std::invalid_argument("make_ring: weights must be positive");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->weights = std::move(weights);
    return r;
}

TermOrder TermOrder::wdegrevlex(const RingPtr& ring) {
    std::vector<int> prec(ring->nvars());
    for (size_t i = 0; i < prec.size(); ++i) prec[i] = static_cast<int>(i);
    return TermOrder(ring->weights, std::move(prec));
}

TermOrder TermOrder::wdegrevlex(const RingPtr& ring, const std::vector<std::string>& precedence) {
    if (precedence.size() != ring->nvars())
        throw std::invalid_argument("term order: precedence must list every variable exactly once");
    std::vector<int> prec;
    std::vector<bool> seen(ring->nvars(), false);
    for (const auto& name : precedence) {
        int i = ring->index_of(name);
        if (i < 0) throw std::invalid_argument("term order: unknown variable '" + name + "'");
        if (seen[i]) throw std::invalid_argument("term order: duplicate variable '" + name + "'");
        seen[i] = true;
        prec.push_back(i);
    }
    return TermOrder(ring->weights, std::move(prec));
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    long da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
    if (da != db) return da < db;
    for (size_t k = prec_.size(); k-- > 0;) {
        uint32_t ea = a[prec_[k]], eb = b[prec_[k]];
        if (ea != eb) return ea > eb; // larger exponent in the low end loses
    }
    return false;
}

std::string TermOrder::describe(const RingPtr& ring) const {
    std::string s = "wdegrevlex(";
    for (size_t k = 0; k < prec_.size(); ++k) {
        if (k) s += " > ";
        s += ring->vars[prec_[k]];
    }
    return s + ")";
}

} // namespace cmvar
