#include "dgfree/scalar.hpp"

#include <ostream>

#include "dgfree/errors.hpp"

namespace dgfree
{

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p < 5 || p >= (std::uint64_t{1} << 32) || !dgfree::is_prime(p))
        throw InputError("invalid prime field modulus " + std::to_string(p) + " (need a prime 5 <= p < 2^32)");
    return Field(p);
}

Scalar Field::zero() const { return is_rational() ? Scalar() : Scalar::modular(0, modulus_); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const
{
    if (is_rational())
        return Scalar(Rational(v));
    const auto p = static_cast<long long>(modulus_);
    long long r = v % p;
    if (r < 0)
        r += p;
    return Scalar::modular(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_rational(const Rational& q) const
{
    if (is_rational())
        return Scalar(q);
    return Scalar::modular(q.mod(modulus_), modulus_);
}

Scalar Field::parse(std::string_view text) const { return from_rational(Rational::parse(text)); }

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(modulus_); }

Field Scalar::field() const { return Field(p_); }

const Rational& Scalar::rational() const
{
    if (p_ != 0)
        throw InputError("rational() on a prime-field scalar");
    return q_;
}

std::uint64_t Scalar::residue() const
{
    if (p_ == 0)
        throw InputError("residue() on a rational scalar");
    return v_;
}

void Scalar::require_same(const Scalar& o) const
{
    if (p_ != o.p_)
        throw InputError("mixed fields in scalar arithmetic: " + std::string(p_ ? "F_" + std::to_string(p_) : "Q") +
                         " vs " + (o.p_ ? "F_" + std::to_string(o.p_) : "Q"));
}

namespace
{

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1U)
            r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

} // namespace

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw InputError("division by zero");
    if (p_ == 0)
        return Scalar(q_.inverse());
    return modular(pow_mod(v_, p_ - 2, p_), p_);
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.to_string() : std::to_string(v_); }

Scalar Scalar::operator-() const
{
    if (p_ == 0)
        return Scalar(-q_);
    return modular(v_ == 0 ? 0 : p_ - v_, p_);
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    a.require_same(b);
    if (a.p_ == 0)
        return Scalar(a.q_ + b.q_);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_)
        s -= a.p_;
    return Scalar::modular(s, a.p_);
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    a.require_same(b);
    if (a.p_ == 0)
        return Scalar(a.q_ - b.q_);
    return Scalar::modular(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    a.require_same(b);
    if (a.p_ == 0)
        return Scalar(a.q_ * b.q_);
    return Scalar::modular(a.v_ * b.v_ % a.p_, a.p_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.p_ != b.p_)
        return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.v_ == b.v_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    if (a.p_ != b.p_)
        return a.p_ <=> b.p_;
    return a.p_ == 0 ? a.q_ <=> b.q_ : a.v_ <=> b.v_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace dgfree
