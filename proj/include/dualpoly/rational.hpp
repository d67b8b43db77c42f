#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dualpoly {

using BigInt = mpz_class;

// Exact rational number, always held in reduced form with a positive
// denominator. Thin value wrapper over GMP's mpq_class so that expression
// templates never leak into user code.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>)
            q_ = static_cast<long>(v);
        else
            q_ = static_cast<unsigned long>(v);
    }

    Rat(const BigInt& v) : q_(v) {} // NOLINT(google-explicit-constructor)

    Rat(const BigInt& num, const BigInt& den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o)
    {
        if (o.is_zero())
            throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "num/den", denominator always present ("3/1", "-1/3").
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    // Lossy decimal rendering with `digits` fractional digits, rounded half away from zero.
    std::string decimal(unsigned digits = 6) const
    {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        BigInt num = ::abs(q_.get_num()) * scale;
        BigInt den = q_.get_den();
        BigInt scaled = (2 * num + den) / (2 * den);
        std::string s = scaled.get_str();
        if (s.size() <= digits)
            s.insert(0, digits + 1 - s.size(), '0');
        std::string out = s.substr(0, s.size() - digits);
        if (digits > 0)
            out += "." + s.substr(s.size() - digits);
        if (sign() < 0 && scaled != 0)
            out.insert(0, "-");
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

// Parses "a/b" or "a" where a is an optionally negative decimal integer and
// b a positive decimal integer. Decimal points, exponents, whitespace and
// leading '+' are rejected. The result is reduced.
inline Rat parse_rat(std::string_view text)
{
    auto digits_only = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    std::string_view num_digits = num.starts_with('-') ? num.substr(1) : num;
    if (!digits_only(num_digits) || !digits_only(den))
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rat(n, d);
}

} // namespace dualpoly
