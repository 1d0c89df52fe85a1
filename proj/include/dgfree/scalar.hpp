#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dgfree/rational.hpp"

namespace dgfree
{

class Scalar;

/// The ground field: the rationals, or a prime field F_p with p >= 5.
class Field
{
public:
    /// Defaults to the rationals.
    constexpr Field() = default;

    static constexpr Field rationals() { return Field(); }
    /// Throws InputError unless p is a prime with 5 <= p < 2^32.
    static Field prime(std::uint64_t p);

    [[nodiscard]] constexpr bool is_rational() const noexcept { return modulus_ == 0; }
    [[nodiscard]] constexpr bool is_prime() const noexcept { return modulus_ != 0; }
    /// 0 for the rationals.
    [[nodiscard]] constexpr std::uint64_t modulus() const noexcept { return modulus_; }
    /// 0 for the rationals, p otherwise.
    [[nodiscard]] constexpr std::uint64_t characteristic() const noexcept { return modulus_; }

    [[nodiscard]] Scalar zero() const;
    [[nodiscard]] Scalar one() const;
    [[nodiscard]] Scalar from_int(long long v) const;
    /// Image of a rational under the canonical map; throws if p divides the denominator.
    [[nodiscard]] Scalar from_rational(const Rational& q) const;
    [[nodiscard]] Scalar parse(std::string_view text) const;

    [[nodiscard]] std::string name() const;

    friend constexpr bool operator==(Field a, Field b) = default;

private:
    friend class Scalar;
    explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Arithmetic between different fields throws InputError.
class Scalar
{
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(const Rational& q) : q_(q) {} // NOLINT(google-explicit-constructor)

    [[nodiscard]] Field field() const;
    [[nodiscard]] bool is_zero() const noexcept { return p_ == 0 ? q_.is_zero() : v_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return p_ == 0 ? q_.is_one() : v_ == 1; }

    /// Only meaningful over Q.
    [[nodiscard]] const Rational& rational() const;
    /// Only meaningful over F_p; the representative in [0, p).
    [[nodiscard]] std::uint64_t residue() const;

    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] std::string to_string() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Field-aware equality: scalars of different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order used only for canonical sorting (rationals by value, residues by representative).
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    friend class Field;
    static Scalar modular(std::uint64_t v, std::uint64_t p)
    {
        Scalar s;
        s.v_ = v;
        s.p_ = p;
        return s;
    }
    void require_same(const Scalar& o) const;

    Rational q_;
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

} // namespace dgfree
