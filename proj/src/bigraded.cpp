#include "skewext/bigraded.hpp"

#include <sstream>
#include <stdexcept>

namespace skewext {

std::string to_string(const Bidegree& b)
{
    return "(" + std::to_string(b.n) + "," + std::to_string(b.t) + ")";
}

BigradedAlgebra::BigradedAlgebra(Field f, int max_n, int max_t) : field_(f), max_n_(max_n), max_t_(max_t) {}

void BigradedAlgebra::set_dim(const Bidegree& b, std::size_t d)
{
    if (d == 0)
        dims_.erase(b);
    else
        dims_[b] = d;
}

std::size_t BigradedAlgebra::dim(const Bidegree& b) const
{
    auto it = dims_.find(b);
    return it == dims_.end() ? 0 : it->second;
}

std::vector<Bidegree> BigradedAlgebra::support() const
{
    std::vector<Bidegree> out;
    for (const auto& [b, d] : dims_)
        out.push_back(b);
    return out;
}

std::size_t BigradedAlgebra::total_dim() const
{
    std::size_t s = 0;
    for (const auto& [b, d] : dims_)
        s += d;
    return s;
}

void BigradedAlgebra::set_product(const Bidegree& a, std::size_t i, const Bidegree& b, std::size_t j, Vector v)
{
    if (v.size() != dim(a + b))
        throw std::invalid_argument("product vector has wrong length at " + to_string(a + b));
    auto& tab = products_[{a, b}];
    if (tab.empty())
        tab.assign(dim(a) * dim(b), Vector());
    tab.at(i * dim(b) + j) = std::move(v);
}

const Vector& BigradedAlgebra::product(const Bidegree& a, std::size_t i, const Bidegree& b, std::size_t j) const
{
    if (!has_product(a, b))
        throw std::out_of_range("product " + to_string(a) + "*" + to_string(b) + " outside window");
    static const Vector empty;
    if (dim(a + b) == 0)
        return empty;
    auto it = products_.find({a, b});
    if (it == products_.end())
        throw std::logic_error("product " + to_string(a) + "*" + to_string(b) + " not computed");
    return it->second.at(i * dim(b) + j);
}

BiElement BigradedAlgebra::multiply(const BiElement& x, const BiElement& y) const
{
    BiElement r = zero(x.degree + y.degree);
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.coords.size(); ++j) {
            if (y.coords[j].is_zero())
                continue;
            const Vector& p = product(x.degree, i, y.degree, j);
            Scalar c = x.coords[i] * y.coords[j];
            for (std::size_t k = 0; k < p.size(); ++k)
                if (!p[k].is_zero())
                    r.coords[k] += c * p[k];
        }
    }
    return r;
}

BiElement BigradedAlgebra::basis_element(const Bidegree& b, std::size_t k) const
{
    BiElement e = zero(b);
    e.coords.at(k) = Scalar::one(field_);
    return e;
}

BiElement BigradedAlgebra::zero(const Bidegree& b) const
{
    return {b, zero_vector(dim(b), field_)};
}

BigradedAlgebra BigradedAlgebra::opposite() const
{
    BigradedAlgebra o(field_, max_n_, max_t_);
    o.dims_ = dims_;
    for (const auto& [key, tab] : products_) {
        const auto& [a, b] = key;
        for (std::size_t i = 0; i < dim(a); ++i)
            for (std::size_t j = 0; j < dim(b); ++j)
                o.set_product(b, j, a, i, tab[i * dim(b) + j]);
    }
    return o;
}

bool BigradedAlgebra::operator==(const BigradedAlgebra& o) const
{
    if (dims_ != o.dims_)
        return false;
    auto known = [](const BigradedAlgebra& x, const Bidegree& a, const Bidegree& b) {
        return x.dim(a + b) == 0 || x.products_.count({a, b}) > 0;
    };
    for (const auto& a : support())
        for (const auto& b : support()) {
            if (!has_product(a, b) || !o.has_product(a, b))
                continue;
            if (known(*this, a, b) != known(o, a, b))
                return false;
            if (!known(*this, a, b))
                continue;
            for (std::size_t i = 0; i < dim(a); ++i)
                for (std::size_t j = 0; j < dim(b); ++j)
                    if (!(product(a, i, b, j) == o.product(a, i, b, j)))
                        return false;
        }
    return true;
}

std::optional<std::string> BigradedAlgebra::associativity_counterexample() const
{
    auto sup = support();
    for (const auto& a : sup)
        for (const auto& b : sup)
            for (const auto& c : sup) {
                if (!in_window(a + b + c))
                    continue;
                for (std::size_t i = 0; i < dim(a); ++i)
                    for (std::size_t j = 0; j < dim(b); ++j)
                        for (std::size_t k = 0; k < dim(c); ++k) {
                            auto x = basis_element(a, i), y = basis_element(b, j), z = basis_element(c, k);
                            if (!(multiply(multiply(x, y), z).coords == multiply(x, multiply(y, z)).coords))
                                return label(a, i) + " " + label(b, j) + " " + label(c, k);
                        }
            }
    return std::nullopt;
}

bool BigradedAlgebra::unit_laws_hold() const
{
    if (dim({0, 0}) != 1)
        return false;
    BiElement u = unit();
    for (const auto& b : support())
        for (std::size_t k = 0; k < dim(b); ++k) {
            auto e = basis_element(b, k);
            if (!(multiply(u, e).coords == e.coords) || !(multiply(e, u).coords == e.coords))
                return false;
        }
    return true;
}

std::string BigradedAlgebra::label(const Bidegree& b, std::size_t k)
{
    return "e_{" + std::to_string(b.n) + "," + std::to_string(b.t) + "," + std::to_string(k) + "}";
}

std::string BigradedAlgebra::element_str(const BiElement& x) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < x.coords.size(); ++k) {
        const Scalar& c = x.coords[k];
        if (c.is_zero())
            continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (cs != "1")
            os << cs << "*";
        os << label(x.degree, k);
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

BiElement BigradedMap::apply(const BiElement& x) const
{
    if (x.coords.empty() && !blocks.count(x.degree))
        return x;
    const Matrix& m = block(x.degree);
    return {x.degree, m.apply(x.coords)};
}

const Matrix& BigradedMap::block(const Bidegree& b) const
{
    auto it = blocks.find(b);
    if (it == blocks.end())
        throw std::out_of_range("bigraded map has no block at " + to_string(b));
    return it->second;
}

BigradedMap compose(const BigradedMap& outer, const BigradedMap& inner)
{
    BigradedMap r;
    for (const auto& [b, m] : inner.blocks) {
        auto it = outer.blocks.find(b);
        if (it != outer.blocks.end())
            r.blocks.emplace(b, it->second * m);
    }
    return r;
}

}  // namespace skewext
