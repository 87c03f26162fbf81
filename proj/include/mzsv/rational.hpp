#pragma once

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mzsv {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            q_ = static_cast<long>(v);
        } else {
            q_ = static_cast<unsigned long>(v);
        }
    }
    explicit Rational(const BigInt& num) : q_(num) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with an optional leading sign. Throws
    // std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    const mpq_class& raw() const { return q_; }

    // "p/q", with "/q" omitted when q == 1.
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace mzsv
