#include "mzsv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mzsv {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_part), 10);
    BigInt den(std::string(den_part), 10);
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace mzsv
