#include "dgfree/rational.hpp"

#include <limits>
#include <ostream>
#include <utility>

#include "dgfree/errors.hpp"

namespace dgfree
{

namespace
{

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v)
{
    const bool negative = v < 0;
    u128 mag = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z)
{
    // Excludes INT64_MIN so that negation never overflows.
    return z.fits_slong_p() && z.get_si() != std::numeric_limits<long>::min();
}

} // namespace

Rational::Rational(long long value)
{
    if (value == std::numeric_limits<long long>::min()) {
        *this = from_mpq(mpq_class(mpz_class(static_cast<long>(value))));
    } else {
        num_ = value;
    }
}

Rational::Rational(long long numerator, long long denominator)
{
    if (denominator == 0)
        throw InputError("rational with zero denominator");
    *this = from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_wide(i128 num, i128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (num == 0)
        return {};
    Rational r;
    if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class value)
{
    value.canonicalize();
    Rational r;
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        r.num_ = value.get_num().get_si();
        r.den_ = value.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
    return r;
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t");
        const auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    auto valid_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw InputError("not a rational number: '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept
{
    if (big_)
        return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const
{
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const
{
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::to_string() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t Rational::mod(std::uint64_t p) const
{
    mpz_class P(static_cast<unsigned long>(p));
    mpz_class n = numerator() % P;
    if (n < 0)
        n += P;
    mpz_class d = denominator() % P;
    if (d == 0)
        throw InputError("denominator of " + to_string() + " vanishes modulo " + std::to_string(p));
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
    mpz_class r = (n * dinv) % P;
    return r.get_ui();
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw InputError("division by zero");
    if (big_)
        return from_mpq(mpq_class(big_->get_den(), big_->get_num()));
    return from_wide(den_, num_);
}

Rational Rational::operator-() const
{
    if (big_)
        return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
        return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0)
            return {};
        return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

} // namespace dgfree
