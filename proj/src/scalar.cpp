#include "skewext/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace skewext {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const
{
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(long v, Field f) : v_(v), p_(f.characteristic())
{
    reduce();
}

Scalar::Scalar(const mpq_class& v, Field f) : v_(v), p_(f.characteristic())
{
    reduce();
}

void Scalar::reduce()
{
    if (p_ == 0) {
        v_.canonicalize();
        return;
    }
    mpz_class p(p_);
    mpz_class num = v_.get_num() % p;
    mpz_class den = v_.get_den() % p;
    if (den == 0)
        throw std::domain_error("denominator divisible by the field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0)
        r += p;
    v_ = mpq_class(r);
}

void Scalar::adopt(const Scalar& o)
{
    if (o.p_ == p_)
        return;
    if (p_ != 0 && o.p_ != 0)
        throw std::logic_error("mixing scalars of different characteristic");
    if (p_ == 0) {
        p_ = o.p_;
        reduce();
    }
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (p_ == 0) {
        r.v_ = 1 / v_;
    } else {
        mpz_class p(p_), inv;
        mpz_class num = v_.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        r.v_ = mpq_class(inv);
    }
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    adopt(o);
    v_ += o.v_;
    if (p_ != 0) {
        // o may be an unreduced characteristic-0 literal
        if (v_.get_den() != 1 || v_ >= p_ || v_ < 0)
            reduce();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    adopt(o);
    v_ -= o.v_;
    if (p_ != 0)
        reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    adopt(o);
    v_ *= o.v_;
    if (p_ != 0)
        reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    adopt(o);
    Scalar d = o;
    d.adopt(*this);
    *this *= d.inverse();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.p_ == b.p_)
        return a.v_ == b.v_;
    Scalar x = a;
    x.adopt(b);
    Scalar y = b;
    y.adopt(x);
    return x.v_ == y.v_;
}

std::string Scalar::str() const
{
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

}  // namespace skewext
