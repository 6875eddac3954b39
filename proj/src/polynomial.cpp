#include "cmvar/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cmvar {

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
    if (!constant.is_zero()) terms_.emplace(Monomial(ring_->nvars()), constant);
}

Polynomial Polynomial::variable(const RingPtr& ring, int var, uint32_t power) {
    Monomial m(ring->nvars());
    m[var] = power;
    return term(ring, std::move(m), Rational(1));
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, Rational c) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& f) {
    for (const auto& [mf, cf] : f.terms_) add_term(m * mf, c * cf);
}

Term Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

long Polynomial::weighted_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(ring_->weights));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_.begin()->first.weighted_degree(ring_->weights);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(ring_->weights) != d) return false;
    return true;
}

Polynomial Polynomial::top_component() const {
    Polynomial r(ring_);
    long d = weighted_degree();
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(ring_->weights) == d) r.terms_.emplace(m, c);
    return r;
}

Polynomial drop_lower_terms(const Polynomial& f) { return f.top_component(); }

Rational Polynomial::eval(std::span<const Rational> values) const {
    // Per-variable power cache.
    std::vector<std::vector<Rational>> pows(ring_->nvars());
    auto power = [&](size_t v, uint32_t e) -> const Rational& {
        auto& cache = pows[v];
        if (cache.empty()) cache.push_back(Rational(1));
        while (cache.size() <= e) {
            if (v >= values.size())
                throw std::invalid_argument("eval: no value for variable " + ring_->vars[v]);
            cache.push_back(cache.back() * values[v]);
        }
        return cache[e];
    };
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t v = 0; v < m.nvars(); ++v)
            if (m[v]) t *= power(v, m[v]);
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images, const RingPtr& target) const {
    std::vector<std::vector<Polynomial>> pows(ring_->nvars());
    auto power = [&](size_t v, uint32_t e) -> const Polynomial& {
        auto& cache = pows[v];
        if (cache.empty()) cache.push_back(Polynomial(target, Rational(1)));
        while (cache.size() <= e) {
            if (v >= images.size())
                throw std::invalid_argument("compose: no image for variable " + ring_->vars[v]);
            cache.push_back(cache.back() * images[v]);
        }
        return cache[e];
    };
    Polynomial sum(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t(target, c);
        for (size_t v = 0; v < m.nvars(); ++v)
            if (m[v]) t = t * power(v, m[v]);
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::map_variables(std::span<const int> perm, std::span<const int> sign) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial img(ring_->nvars());
        int s = 1;
        for (size_t v = 0; v < m.nvars(); ++v) {
            if (!m[v]) continue;
            img[perm[v]] += m[v];
            if (sign[v] < 0 && (m[v] & 1)) s = -s;
        }
        r.add_term(img, s < 0 ? -c : c);
    }
    return r;
}

std::optional<Rational> Polynomial::scalar_ratio_to(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return std::nullopt;
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    auto it = terms_.begin(), jt = other.terms_.begin();
    Rational ratio = it->second / jt->second;
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return std::nullopt;
        if (it->second != ratio * jt->second) return std::nullopt;
    }
    return ratio;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Deterministic print order: descending weighted degrevlex in ring order.
    TermOrder ord = TermOrder::wdegrevlex(ring_);
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool coeff_printed = false;
        if (!a.is_one() || m.is_one()) {
            os << a.str();
            coeff_printed = true;
        }
        for (size_t v = 0; v < m.nvars(); ++v) {
            if (!m[v]) continue;
            if (coeff_printed) os << "*";
            coeff_printed = true;
            os << ring_->vars[v];
            if (m[v] > 1) os << "^" << m[v];
        }
    }
    return os.str();
}

PolyParseError::PolyParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line(line), column(column) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring, int line)
        : text_(text), ring_(ring), line_(line) {}

    Polynomial parse() {
        Polynomial p(ring_);
        skip_ws();
        bool negative = accept_sign();
        while (true) {
            parse_term(p, negative);
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c == '+' || c == '-') {
                negative = (c == '-');
                ++pos_;
                skip_ws();
            } else {
                fail("expected '+' or '-'");
            }
        }
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    void parse_term(Polynomial& p, bool negative) {
        Rational coeff(1);
        Monomial mono(ring_->nvars());
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                auto [var, exp] = parse_power();
                mono[var] += exp;
                any = true;
            } else {
                fail("expected coefficient or variable");
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        p.add_term(mono, negative ? -coeff : coeff);
    }

    Rational parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        size_t num_end = pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected denominator digits");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        (void)num_end;
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    std::pair<int, uint32_t> parse_power() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        int var = ring_->index_of(name);
        if (var < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        uint32_t exp = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected exponent digits");
            size_t es = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            exp = static_cast<uint32_t>(std::stoul(std::string(text_.substr(es, pos_ - es))));
        }
        return {var, exp};
    }

    std::string_view text_;
    const RingPtr& ring_;
    int line_;
    size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] == '#') return Polynomial(ring);
    return Parser(text, ring, 1).parse();
}

std::vector<Polynomial> parse_polynomial_lines(std::string_view text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            out.push_back(Parser(line, ring, lineno).parse());
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

} // namespace cmvar
