#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace skewext {

/// Ground field of a computation: the rationals (characteristic 0) or GF(p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;  // "Q" or "F<p>"

    bool operator==(const Field&) const = default;

private:
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Elements of GF(p) are stored as integers in [0, p).
/// A characteristic-0 constant combined with a GF(p) element is reduced mod p,
/// so literals such as Scalar(1) can be mixed freely.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : v_(v) {}  // NOLINT: implicit integer literals are convenient
    Scalar(long v, Field f);
    Scalar(const mpq_class& v, Field f);

    static Scalar zero(Field f) { return Scalar(0L, f); }
    static Scalar one(Field f) { return Scalar(1L, f); }

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    std::uint32_t characteristic() const { return p_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar inverse() const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Equality of field values; the characteristic tag is adopted as in arithmetic.
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    void adopt(const Scalar& o);
    void reduce();

    mpq_class v_;
    std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace skewext
