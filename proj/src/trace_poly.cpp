#include "cmvar/trace_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmvar {

TracePoly TracePoly::constant(const Rational& c) {
    TracePoly p;
    p.add({}, c);
    return p;
}

TracePoly TracePoly::trace(const CyclicWord& w) {
    if (w.empty()) throw std::invalid_argument("TracePoly::trace: empty word (fold the constant)");
    TracePoly p;
    p.add({w}, Rational(1));
    return p;
}

TracePoly TracePoly::from_wordsum(const WordSum& ws, int n) {
    TracePoly p;
    for (const auto& [w, c] : ws.terms()) {
        if (w.empty())
            p.add({}, c * Rational(n));
        else
            p.add({w}, c);
    }
    return p;
}

void TracePoly::add(std::vector<CyclicWord> factors, const Rational& c) {
    if (c.is_zero()) return;
    std::sort(factors.begin(), factors.end());
    auto [it, inserted] = terms_.emplace(std::move(factors), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
    for (const auto& [f, c] : o.terms_) add(f, c);
    return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
    for (const auto& [f, c] : o.terms_) add(f, -c);
    return *this;
}

TracePoly& TracePoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, c] : terms_) c *= s;
    return *this;
}

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
    TracePoly r;
    for (const auto& [fa, ca] : a.terms_)
        for (const auto& [fb, cb] : b.terms_) {
            std::vector<CyclicWord> f = fa;
            f.insert(f.end(), fb.begin(), fb.end());
            r.add(std::move(f), ca * cb);
        }
    return r;
}

TracePoly TracePoly::letters_swapped() const {
    TracePoly r;
    for (const auto& [f, c] : terms_) {
        std::vector<CyclicWord> swapped;
        swapped.reserve(f.size());
        for (const auto& w : f) {
            std::string s = w.canonical();
            for (char& ch : s) ch = (ch == 'x' ? 'y' : 'x');
            swapped.emplace_back(s);
        }
        r.add(std::move(swapped), c);
    }
    return r;
}

Rational TracePoly::eval(const Matrix& X, const Matrix& Y) const {
    Rational sum;
    for (const auto& [f, c] : terms_) {
        Rational t = c;
        for (const auto& w : f) t *= eval_trace(w, X, Y);
        sum += t;
    }
    return sum;
}

Matrix TracePoly::gradient(char letter, const Matrix& X, const Matrix& Y) const {
    int n = X.rows();
    Matrix total(n, n);
    for (const auto& [factors, c] : terms_) {
        // Product rule: differentiate one factor, multiply the traces of the
        // rest.
        std::vector<Rational> tr(factors.size());
        for (size_t k = 0; k < factors.size(); ++k) tr[k] = eval_trace(factors[k], X, Y);
        for (size_t k = 0; k < factors.size(); ++k) {
            const std::string& s = factors[k].canonical();
            Rational scale = c;
            for (size_t l = 0; l < factors.size(); ++l)
                if (l != k) scale *= tr[l];
            if (scale.is_zero()) continue;
            for (size_t i = 0; i < s.size(); ++i) {
                if (s[i] != letter) continue;
                std::string cut = s.substr(i + 1) + s.substr(0, i);
                total += eval_word(cut, X, Y) * scale;
            }
        }
    }
    return total;
}

std::string TracePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (!a.is_one() || f.empty()) {
            os << a.str();
            printed = true;
        }
        for (const auto& w : f) {
            if (printed) os << "*";
            printed = true;
            os << "tr(" << w.canonical() << ")";
        }
    }
    return os.str();
}

int generator_count(int n) { return n * (n + 3) / 2; }

CyclicWord generator_word(int i, int n) {
    if (i < 3 || i > generator_count(n))
        throw std::out_of_range("generator_word: index out of range");
    // Generators beyond the two plain traces: for degree d = 2..n the words
    // x^p y^q with p + q = d, p descending.
    int idx = 3;
    for (int d = 2; d <= n; ++d)
        for (int p = d; p >= 0; --p) {
            if (idx == i) return CyclicWord(std::string(p, 'x') + std::string(d - p, 'y'));
            ++idx;
        }
    throw std::out_of_range("generator_word: index out of range");
}

TracePoly expand_generator(int i, int n) {
    if (n < 2) throw std::invalid_argument("expand_generator: n must be at least 2");
    if (i == 1) return TracePoly::trace(CyclicWord("x"));
    if (i == 2) return TracePoly::trace(CyclicWord("y"));
    const std::string word = generator_word(i, n).canonical();
    const Rational minus_inv_n(-1, n);
    TracePoly out;
    const size_t L = word.size();
    for (uint32_t mask = 0; mask < (1u << L); ++mask) {
        std::vector<CyclicWord> factors;
        Rational coeff(1);
        std::string remaining;
        for (size_t pos = 0; pos < L; ++pos) {
            if (mask & (1u << pos)) {
                coeff *= minus_inv_n;
                factors.emplace_back(std::string(1, word[pos]));
            } else {
                remaining += word[pos];
            }
        }
        if (remaining.empty())
            coeff *= Rational(n); // trace of the identity
        else
            factors.emplace_back(remaining);
        out.add(std::move(factors), coeff);
    }
    return out;
}

Rational poisson_numeric(const TracePoly& f, const TracePoly& g, const Matrix& X, const Matrix& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || !X.square())
        throw std::invalid_argument("poisson_numeric: matrices must be square of equal size");
    Matrix fx = f.gradient('x', X, Y), fy = f.gradient('y', X, Y);
    Matrix gx = g.gradient('x', X, Y), gy = g.gradient('y', X, Y);
    return (fx * gy).trace() - (fy * gx).trace();
}

} // namespace cmvar
