#include "cmvar/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cmvar {

CyclicWord::CyclicWord(std::string_view letters) : w_(letters) {
    for (char c : w_)
        if (c != 'x' && c != 'y')
            throw std::invalid_argument("CyclicWord: letters must be 'x' or 'y'");
    if (w_.size() > 1) {
        std::string best = w_;
        std::string rot = w_;
        for (size_t i = 1; i < w_.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        w_ = best;
    }
}

CyclicWord CyclicWord::power(char letter, int count) {
    return CyclicWord(std::string(count, letter));
}

int CyclicWord::count(char letter) const {
    return static_cast<int>(std::count(w_.begin(), w_.end(), letter));
}

void WordSum::add(const CyclicWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordSum& WordSum::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

WordSum WordSum::operator-() const {
    WordSum r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

WordSum WordSum::letters_swapped() const {
    WordSum r;
    for (const auto& [w, c] : terms_) {
        std::string s = w.canonical();
        for (char& ch : s) ch = (ch == 'x' ? 'y' : 'x');
        r.add(CyclicWord(s), c);
    }
    return r;
}

std::string WordSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (w.empty()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << w.canonical();
        }
    }
    return os.str();
}

WordSum WordSum::parse(std::string_view text) {
    WordSum out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) return out;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    while (true) {
        skip_ws();
        Rational coeff(1);
        std::string word;
        bool any = false;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coeff *= Rational::parse(text.substr(start, pos - start));
                any = true;
            } else if (c == 'x' || c == 'y') {
                size_t start = pos;
                while (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) ++pos;
                word += text.substr(start, pos - start);
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                continue;
            }
            break;
        }
        if (!any) throw std::invalid_argument("WordSum::parse: empty term");
        out.add(CyclicWord(word), negative ? -coeff : coeff);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        } else {
            throw std::invalid_argument("WordSum::parse: expected '+' or '-'");
        }
    }
    return out;
}

WordSum necklace_bracket(const CyclicWord& u, const CyclicWord& v) {
    WordSum out;
    const std::string& a = u.canonical();
    const std::string& b = v.canonical();
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            int omega = 0;
            if (a[i] == 'x' && b[j] == 'y') omega = 1;
            else if (a[i] == 'y' && b[j] == 'x') omega = -1;
            if (!omega) continue;
            std::string spliced;
            spliced.reserve(a.size() + b.size() - 2);
            spliced += a.substr(i + 1);
            spliced += a.substr(0, i);
            spliced += b.substr(j + 1);
            spliced += b.substr(0, j);
            out.add(CyclicWord(spliced), Rational(omega));
        }
    }
    return out;
}

WordSum necklace_bracket(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            WordSum br = necklace_bracket(u, v);
            br *= cu * cv;
            out += br;
        }
    return out;
}

std::map<std::string, Rational> cyclic_gradient(const WordSum& ws, char letter) {
    std::map<std::string, Rational> out;
    for (const auto& [w, c] : ws.terms()) {
        const std::string& s = w.canonical();
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] != letter) continue;
            std::string cut = s.substr(i + 1) + s.substr(0, i);
            auto [it, inserted] = out.emplace(std::move(cut), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Matrix eval_word(std::string_view word, const Matrix& X, const Matrix& Y) {
    Matrix m = Matrix::identity(X.rows());
    for (char c : word) m = m * (c == 'x' ? X : Y);
    return m;
}

Rational eval_trace(const CyclicWord& w, const Matrix& X, const Matrix& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || !X.square())
        throw std::invalid_argument("eval_trace: matrices must be square of equal size");
    return eval_word(w.canonical(), X, Y).trace();
}

Rational eval_wordsum(const WordSum& ws, const Matrix& X, const Matrix& Y) {
    Rational sum;
    for (const auto& [w, c] : ws.terms()) sum += c * eval_trace(w, X, Y);
    return sum;
}

} // namespace cmvar
