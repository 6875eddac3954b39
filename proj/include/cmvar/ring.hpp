#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cmvar {

/// A polynomial ring: named variables with positive integer weights.
struct Ring {
    std::vector<std::string> vars;
    std::vector<long> weights;

    size_t nvars() const { return vars.size(); }
    int index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<long> weights);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->vars == b->vars && a->weights == b->weights);
}

/// Exponent vector; length equals the ambient ring's variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

    size_t nvars() const { return e_.size(); }
    uint32_t operator[](size_t i) const { return e_[i]; }
    uint32_t& operator[](size_t i) { return e_[i]; }

    bool is_one() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    long total_degree() const {
        long d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    long weighted_degree(const std::vector<long>& weights) const {
        long d = 0;
        for (size_t i = 0; i < e_.size(); ++i) d += weights[i] * static_cast<long>(e_[i]);
        return d;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
        return r;
    }

    /// Exact quotient; caller must ensure m divides *this.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    // Structural order, used only as a canonical map key.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    const std::vector<uint32_t>& exponents() const { return e_; }

private:
    std::vector<uint32_t> e_;
};

/// Weighted degree reverse lexicographic order: weighted degree first; on
/// ties the monomial with the smaller exponent in the lowest-precedence
/// variable where they differ is the larger one.
class TermOrder {
public:
    TermOrder(std::vector<long> weights, std::vector<int> precedence)
        : weights_(std::move(weights)), prec_(std::move(precedence)) {}

    /// Precedence var0 > var1 > ... in ring declaration order.
    static TermOrder wdegrevlex(const RingPtr& ring);
    /// Precedence given explicitly, highest first, as ring variable names.
    static TermOrder wdegrevlex(const RingPtr& ring, const std::vector<std::string>& precedence);

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
    long weighted_degree(const Monomial& m) const { return m.weighted_degree(weights_); }

    const std::vector<long>& weights() const { return weights_; }
    const std::vector<int>& precedence() const { return prec_; }
    std::string describe(const RingPtr& ring) const;

private:
    std::vector<long> weights_;
    std::vector<int> prec_; // variable indices, highest precedence first
};

} // namespace cmvar
