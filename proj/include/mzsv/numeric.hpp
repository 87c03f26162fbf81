#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "mzsv/harmonic.hpp"
#include "mzsv/rational.hpp"

namespace mzsv::numeric {

// 80 significant decimal digits. Fixed per type, so there is no global
// precision state; the requested accuracy is passed explicitly instead.
using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>,
                                            boost::multiprecision::et_off>;

// Smallest target error the working precision supports.
inline constexpr double min_target_err = 1e-60;

// A real number known up to an absolute error bound: the true value lies
// in [value - err, value + err]. Arithmetic widens err to cover both the
// input uncertainty and the rounding of the operation itself.
struct BigReal {
    Float value = 0;
    Float err = 0;

    static BigReal exact(const Rational& q);

    friend BigReal operator+(const BigReal& x, const BigReal& y);
    friend BigReal operator-(const BigReal& x, const BigReal& y);
    friend BigReal operator*(const BigReal& x, const BigReal& y);
    friend BigReal operator*(const Rational& q, const BigReal& x);

    bool contains(const Float& v) const;
    std::string value_string(int digits = 40) const;
    std::string err_string() const;
};

Float to_float(const Rational& q);
Float pi();
Float pi_power(int w);

// Bernoulli numbers for sum B_m t^m / m! = t e^t / (e^t - 1), so B_1 = +1/2.
class BernoulliTable {
public:
    const Rational& get(unsigned n);

private:
    std::vector<Rational> b_;
};

Rational bernoulli(unsigned n);

// q with zeta(s) = q pi^s, for s even and >= 2. Throws std::domain_error
// otherwise.
Rational zeta_even_exact(int s);

// Li_{s_1..s_k}(1/2) = sum_{m_1 > .. > m_k > 0} 2^{-m_1} / (m_1^{s_1} .. m_k^{s_k}).
// Entries must be >= 1; the empty index gives 1.
BigReal polylog_half(const Index& s, double target_err);

// Multiple zeta value of an admissible index. Throws std::domain_error for
// a non-admissible index and std::invalid_argument if target_err is not in
// [min_target_err, 1].
BigReal mzv_numeric(const Index& idx, double target_err);

// Multiple zeta-star value, evaluated as Z(d(z_idx)).
BigReal mzsv_numeric(const Index& idx, double target_err);

// Z(p) = sum of coefficient * zeta(word). Every word must be admissible.
BigReal eval_Z(const HPoly& p, double target_err);
// Zbar(p) = Z(d(p)).
BigReal eval_Zbar(const HPoly& p, double target_err);

// Zbar(z_2^m sha (z_3 z_1)^n).
HPoly bb_poly(int m, int n);
BigReal bb_star_sum(int m, int n, double target_err);

// Scans the continued-fraction convergents p/q of v / pi^w and returns the
// first with q <= denom_bound and |v - (p/q) pi^w| <= max(3 v.err, tolerance).
std::optional<Rational> reconstruct_rational(const BigReal& v, int w, const BigInt& denom_bound,
                                             const Float& tolerance = Float(0));

} // namespace mzsv::numeric
