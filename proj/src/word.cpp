#include "skewext/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewext {

int word_degree(const Word& w, std::span<const int> degrees)
{
    int d = 0;
    for (int g : w)
        d += degrees[static_cast<std::size_t>(g)];
    return d;
}

Word concat(const Word& a, const Word& b)
{
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

long find_subword(const Word& w, const Word& pattern)
{
    if (pattern.size() > w.size())
        return -1;
    auto it = std::search(w.begin(), w.end(), pattern.begin(), pattern.end());
    return it == w.end() && !pattern.empty() ? -1 : static_cast<long>(it - w.begin());
}

MonomialOrder::MonomialOrder(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    precedence_.resize(degrees_.size());
    std::iota(precedence_.begin(), precedence_.end(), 0);
    rank_ = precedence_;
}

MonomialOrder::MonomialOrder(std::vector<int> degrees, std::vector<int> precedence)
    : degrees_(std::move(degrees)), precedence_(std::move(precedence))
{
    if (precedence_.size() != degrees_.size())
        throw std::invalid_argument("generator precedence must list every generator once");
    rank_.assign(degrees_.size(), -1);
    for (std::size_t i = 0; i < precedence_.size(); ++i) {
        int g = precedence_[i];
        if (g < 0 || static_cast<std::size_t>(g) >= degrees_.size() || rank_[static_cast<std::size_t>(g)] != -1)
            throw std::invalid_argument("generator precedence must list every generator once");
        rank_[static_cast<std::size_t>(g)] = static_cast<int>(i);
    }
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const
{
    int du = degree(u), dv = degree(v);
    if (du != dv)
        return du <=> dv;
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == v[i])
            continue;
        // smaller rank means larger generator
        return rank_[static_cast<std::size_t>(v[i])] <=> rank_[static_cast<std::size_t>(u[i])];
    }
    // equal degree and one a prefix of the other forces equality
    return u.size() <=> v.size();
}

NCPoly NCPoly::constant(const Scalar& c)
{
    NCPoly p;
    p.add_term({}, c);
    return p;
}

NCPoly NCPoly::word(Word w, const Scalar& c)
{
    NCPoly p;
    p.add_term(w, c);
    return p;
}

Scalar NCPoly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

NCPoly NCPoly::operator-() const
{
    NCPoly r = *this;
    r *= Scalar(-1);
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b)
{
    NCPoly r;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_)
            r.add_term(concat(u, v), c * d);
    return r;
}

bool operator==(const NCPoly& a, const NCPoly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
        if (it->first != w || !(it->second == c))
            return false;
        ++it;
    }
    return true;
}

int NCPoly::homogeneous_degree(std::span<const int> degrees) const
{
    if (terms_.empty())
        return 0;
    int d = word_degree(terms_.begin()->first, degrees);
    for (const auto& [w, c] : terms_)
        if (word_degree(w, degrees) != d)
            return -1;
    return d;
}

bool NCPoly::is_homogeneous(std::span<const int> degrees) const
{
    return homogeneous_degree(degrees) >= 0;
}

Word NCPoly::leading_word(const MonomialOrder& ord) const
{
    if (terms_.empty())
        throw std::logic_error("leading word of zero polynomial");
    const Word* best = &terms_.begin()->first;
    for (const auto& [w, c] : terms_)
        if (ord.less(*best, w))
            best = &w;
    return *best;
}

Scalar NCPoly::leading_coefficient(const MonomialOrder& ord) const
{
    return terms_.at(leading_word(ord));
}

NCPoly NCPoly::monic(const MonomialOrder& ord) const
{
    return *this * leading_coefficient(ord).inverse();
}

std::string NCPoly::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        mpq_class v = c.value();
        bool negative = v < 0;
        if (negative)
            v = -v;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = v == 1;
        if (!unit || w.empty())
            os << v.get_str();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0 || !unit)
                os << '*';
            os << names.at(static_cast<std::size_t>(w[i]));
        }
    }
    return os.str();
}

NCPoly power(const NCPoly& p, unsigned n)
{
    NCPoly r = NCPoly::constant(Scalar(1));
    for (unsigned i = 0; i < n; ++i)
        r = r * p;
    return r;
}

}  // namespace skewext
