#pragma once

#include "cmvar/matrix.hpp"
#include "cmvar/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace cmvar {

/// Word in the letters {x, y} up to cyclic rotation; stored as the
/// lexicographically least rotation. The empty word is the trace of the
/// identity.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(std::string_view letters);

    static CyclicWord power(char letter, int count);

    const std::string& canonical() const { return w_; }
    size_t size() const { return w_.size(); }
    bool empty() const { return w_.empty(); }
    int count(char letter) const;

    friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
        return a.w_.size() != b.w_.size() ? a.w_.size() < b.w_.size() : a.w_ < b.w_;
    }
    friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.w_ == b.w_; }

private:
    std::string w_;
};

/// Finite rational combination of cyclic words; no zero coefficients stored.
class WordSum {
public:
    WordSum() = default;
    WordSum(const CyclicWord& w, const Rational& c) { add(w, c); }

    static WordSum parse(std::string_view text); // e.g. "3/2*xxyy - xy + 1"

    const std::map<CyclicWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const CyclicWord& w, const Rational& c);
    WordSum& operator+=(const WordSum& o);
    WordSum& operator-=(const WordSum& o);
    WordSum& operator*=(const Rational& s);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    friend WordSum operator*(WordSum a, const Rational& s) { return a *= s; }
    WordSum operator-() const;
    friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }

    /// Swap the roles of x and y in every word.
    WordSum letters_swapped() const;

    std::string str() const;

private:
    std::map<CyclicWord, Rational> terms_;
};

/// Necklace bracket on cyclic words: pair each letter of u against each
/// letter of v with the symplectic form (x against y counts +1, y against x
/// counts -1), deleting the paired letters and splicing the remainders.
WordSum necklace_bracket(const CyclicWord& u, const CyclicWord& v);
WordSum necklace_bracket(const WordSum& a, const WordSum& b);

/// Cyclic gradient: for each occurrence of the letter, the word read
/// cyclically starting just after it. The results are plain (non-cyclic)
/// words.
std::map<std::string, Rational> cyclic_gradient(const WordSum& ws, char letter);

/// Product of X/Y along a plain word; the empty word is the identity.
Matrix eval_word(std::string_view word, const Matrix& X, const Matrix& Y);

/// Trace of the word product; the empty word contributes n.
Rational eval_trace(const CyclicWord& w, const Matrix& X, const Matrix& Y);
Rational eval_wordsum(const WordSum& ws, const Matrix& X, const Matrix& Y);

} // namespace cmvar
