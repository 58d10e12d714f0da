#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "skewext/scalar.hpp"

namespace skewext {

/// A word in the free monoid on the generators, stored as generator indices.
using Word = std::vector<int>;

int word_degree(const Word& w, std::span<const int> degrees);
Word concat(const Word& a, const Word& b);
/// Position of the first occurrence of `pattern` as a contiguous subword, or -1.
long find_subword(const Word& w, const Word& pattern);

/// Degree-lexicographic order on words. Generators earlier in the precedence
/// list are larger; words of equal degree compare letter by letter.
class MonomialOrder {
public:
    MonomialOrder() = default;
    /// Default precedence: generator index order (index 0 largest).
    explicit MonomialOrder(std::vector<int> degrees);
    MonomialOrder(std::vector<int> degrees, std::vector<int> precedence);

    std::strong_ordering compare(const Word& u, const Word& v) const;
    bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& precedence() const { return precedence_; }
    int degree(const Word& w) const { return word_degree(w, degrees_); }

private:
    std::vector<int> degrees_;
    std::vector<int> precedence_;  // generator indices, largest first
    std::vector<int> rank_;        // rank_[g] = position of g in precedence_
};

/// Noncommutative polynomial: finitely many words with nonzero coefficients.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly constant(const Scalar& c);
    static NCPoly word(Word w, const Scalar& c = Scalar(1));
    static NCPoly generator(int g) { return word({g}); }

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);
    NCPoly operator-() const;

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    /// Free-algebra product: bilinear extension of concatenation.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b);

    /// Degree of each word if all share one degree; -1 for inhomogeneous; 0 for zero.
    int homogeneous_degree(std::span<const int> degrees) const;
    bool is_homogeneous(std::span<const int> degrees) const;

    Word leading_word(const MonomialOrder& ord) const;
    Scalar leading_coefficient(const MonomialOrder& ord) const;
    /// Divides by the leading coefficient.
    NCPoly monic(const MonomialOrder& ord) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<Word, Scalar> terms_;
};

NCPoly power(const NCPoly& p, unsigned n);

}  // namespace skewext
