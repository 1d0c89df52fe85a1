#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dgfree
{

/// Exact rational number, always normalized (gcd(|num|, den) = 1, den > 0).
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; anything larger spills into a shared immutable GMP rational. The
/// representation is canonical, so equality never needs to cross the two forms.
class Rational
{
public:
    Rational() = default;
    Rational(long long value); // NOLINT(google-explicit-constructor)
    Rational(long long numerator, long long denominator);
    explicit Rational(const mpq_class& value);

    /// Parses "12", "-3", "7/4", "-1/2". Throws InputError on anything else.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] std::string to_string() const;

    /// Residue of this value modulo a prime p; throws if p divides the denominator.
    [[nodiscard]] std::uint64_t mod(std::uint64_t p) const;

    [[nodiscard]] Rational inverse() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    static Rational from_wide(__int128 num, __int128 den);
    static Rational from_mpq(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace dgfree
