#include "mzsv/numeric.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "mzsv/text.hpp"

namespace mzsv::numeric {

namespace {

const Float& eps()
{
    static const Float e = std::numeric_limits<Float>::epsilon();
    return e;
}

void check_target(double target_err)
{
    if (!(target_err >= min_target_err && target_err <= 1.0)) {
        throw std::invalid_argument("target_err must lie in [1e-60, 1]");
    }
}

void require_admissible(const Index& idx)
{
    if (!is_admissible(idx)) {
        throw std::domain_error("non-admissible index " + to_string(idx) + ": the series diverges");
    }
}

// Smallest N such that the tail sum_{m > N} of the multiple polylog at 1/2
// with k nested variables is at most t.
//
// Term m_1 = m is at most 2^{-m} e_{k-1}(1, 1/2, .., 1/(m-1)) which is at
// most f(m) = 2^{-m} (1 + ln m)^{k-1} / (k-1)!, and f(m+1)/f(m) <= r with
// r = (1/2)(1 + 1/(N+1))^{k-1} for m > N, so the tail is <= f(N+1)/(1-r).
std::pair<int, double> choose_cutoff(int k, double t)
{
    for (int n = 2; n < 100000; ++n) {
        const double r = 0.5 * std::pow(1.0 + 1.0 / (n + 1.0), k - 1);
        if (r >= 0.9) {
            continue;
        }
        const double f = std::ldexp(std::pow(1.0 + std::log(n + 1.0), k - 1) / std::tgamma(k), -(n + 1));
        const double tail = 1.01 * f / (1.0 - r);
        if (tail <= t) {
            return {n, tail};
        }
    }
    throw std::logic_error("polylog_half: no cutoff found");
}

BigReal polylog_half_impl(const Index& s, double t)
{
    if (s.empty()) {
        return BigReal::exact(Rational(1));
    }
    const int k = static_cast<int>(s.size());
    const auto [n, tail] = choose_cutoff(k, t / 2);
    const auto un = static_cast<std::size_t>(n);

    std::vector<Float> inv(un + 1);
    for (std::size_t m = 1; m <= un; ++m) {
        inv[m] = Float(1) / Float(static_cast<unsigned long>(m));
    }
    auto inv_pow = [&inv](std::size_t m, int e) {
        Float r = 1;
        for (int i = 0; i < e; ++i) {
            r *= inv[m];
        }
        return r;
    };

    // cur[M] = sum_{M >= m_j > .. > m_k >= 1} prod m_i^{-s_i}, built from j = k down to 2.
    std::vector<Float> cur(un + 1, Float(1));
    for (int j = k - 1; j >= 1; --j) {
        std::vector<Float> next(un + 1, Float(0));
        for (std::size_t m = 1; m <= un; ++m) {
            next[m] = next[m - 1] + inv_pow(m, s[static_cast<std::size_t>(j)]) * cur[m - 1];
        }
        cur = std::move(next);
    }
    Float sum = 0;
    Float half_pow = 1;
    for (std::size_t m = 1; m <= un; ++m) {
        half_pow /= 2;
        sum += half_pow * inv_pow(m, s[0]) * cur[m - 1];
    }

    // Every partial sum is below (1 + ln N)^k; each of the ~N (k + s_max + 3)
    // operations contributes at most one ulp of that.
    int s_max = 0;
    for (int e : s) {
        s_max = std::max(s_max, e);
    }
    const Float magnitude = pow(Float(1) + log(Float(n)), k);
    const Float rounding = Float(4 * n * (k + s_max + 3)) * eps() * magnitude;
    return BigReal{sum, Float(tail) + rounding};
}

// Word of the index over {x0 = 0, x1 = 1}: x0^{k1-1} x1 ... x0^{kn-1} x1.
std::vector<int> to_bits(const Index& idx)
{
    std::vector<int> bits;
    for (int a : idx) {
        bits.insert(bits.end(), static_cast<std::size_t>(a - 1), 0);
        bits.push_back(1);
    }
    return bits;
}

Index bits_to_index(const std::vector<int>& bits)
{
    Index s;
    int zeros = 0;
    for (int b : bits) {
        if (b == 0) {
            ++zeros;
        } else {
            s.push_back(zeros + 1);
            zeros = 0;
        }
    }
    if (zeros != 0) {
        throw std::logic_error("bits_to_index: word does not end in x1");
    }
    return s;
}

// Splits the iterated integral over 1 > t_1 > .. > t_n > 0 at t = 1/2.
// The upper part maps to [0, 1/2] under t -> 1 - t, which reverses the
// word and swaps x0 <-> x1; both parts are then multiple polylogs at 1/2.
class Evaluator {
public:
    explicit Evaluator(double polylog_target) : t_(polylog_target) {}

    const BigReal& polylog(const Index& s)
    {
        auto it = cache_.find(s);
        if (it == cache_.end()) {
            it = cache_.emplace(s, polylog_half_impl(s, t_)).first;
        }
        return it->second;
    }

    BigReal zeta(const Index& idx)
    {
        if (idx.empty()) {
            return BigReal::exact(Rational(1));
        }
        const std::vector<int> bits = to_bits(idx);
        const std::size_t n = bits.size();
        BigReal total;
        for (std::size_t j = 0; j <= n; ++j) {
            std::vector<int> upper;
            for (std::size_t i = j; i-- > 0;) {
                upper.push_back(1 - bits[i]);
            }
            const std::vector<int> lower(bits.begin() + static_cast<std::ptrdiff_t>(j), bits.end());
            total = total + polylog(bits_to_index(upper)) * polylog(bits_to_index(lower));
        }
        return total;
    }

private:
    double t_;
    std::map<Index, BigReal> cache_;
};

} // namespace

BigReal BigReal::exact(const Rational& q)
{
    const Float v = to_float(q);
    return BigReal{v, q.is_integer() && abs(v) < Float(1e70) ? Float(0) : abs(v) * eps()};
}

BigReal operator+(const BigReal& x, const BigReal& y)
{
    const Float v = x.value + y.value;
    return BigReal{v, x.err + y.err + abs(v) * eps()};
}

BigReal operator-(const BigReal& x, const BigReal& y)
{
    const Float v = x.value - y.value;
    return BigReal{v, x.err + y.err + abs(v) * eps()};
}

BigReal operator*(const BigReal& x, const BigReal& y)
{
    const Float v = x.value * y.value;
    return BigReal{v, abs(x.value) * y.err + abs(y.value) * x.err + x.err * y.err + abs(v) * eps()};
}

BigReal operator*(const Rational& q, const BigReal& x)
{
    const Float qf = to_float(q);
    const Float v = qf * x.value;
    return BigReal{v, abs(qf) * x.err * (1 + eps()) + 2 * abs(v) * eps()};
}

bool BigReal::contains(const Float& v) const
{
    return abs(value - v) <= err;
}

std::string BigReal::value_string(int digits) const
{
    return value.str(digits, std::ios_base::scientific);
}

std::string BigReal::err_string() const
{
    return err.str(3, std::ios_base::scientific);
}

Float to_float(const Rational& q)
{
    Float f;
    mpfr_set_q(f.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return f;
}

Float pi()
{
    return boost::math::constants::pi<Float>();
}

Float pi_power(int w)
{
    if (w < 0) {
        throw std::invalid_argument("pi_power: negative exponent");
    }
    return pow(pi(), w);
}

const Rational& BernoulliTable::get(unsigned n)
{
    // sum_{m=0}^{k} binom(k+1, m) B_m = k + 1
    while (b_.size() <= n) {
        const auto k = static_cast<unsigned>(b_.size());
        Rational acc(static_cast<long>(k) + 1);
        for (unsigned m = 0; m < k; ++m) {
            acc -= Rational(binomial(k + 1, m)) * b_[m];
        }
        b_.push_back(acc / Rational(static_cast<long>(k) + 1));
    }
    return b_[n];
}

Rational bernoulli(unsigned n)
{
    BernoulliTable table;
    return table.get(n);
}

Rational zeta_even_exact(int s)
{
    if (s < 2 || s % 2 != 0) {
        throw std::domain_error("zeta_even_exact: argument must be even and >= 2");
    }
    // zeta(2k) = -B_2k (2 pi i)^{2k} / (2 (2k)!) = (-1)^{k+1} B_2k 2^{2k-1} / (2k)! pi^{2k}
    const int k = s / 2;
    const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    return sign * bernoulli(static_cast<unsigned>(s)) * pow(Rational(2), static_cast<unsigned>(s - 1)) /
           Rational(factorial(static_cast<unsigned>(s)));
}

BigReal polylog_half(const Index& s, double target_err)
{
    check_target(target_err);
    require_index(s);
    return polylog_half_impl(s, target_err);
}

BigReal eval_Z(const HPoly& p, double target_err)
{
    check_target(target_err);
    double coeff_mass = 0;
    std::size_t longest = 0;
    for (const auto& [w, k] : p) {
        require_admissible(w);
        coeff_mass += abs(k).to_double();
        longest = std::max(longest, static_cast<std::size_t>(index_weight(w)));
    }
    // Each zeta is a sum of (weight + 1) products of two polylogs, each in
    // [0, 1] with error <= t, so its error is below 3 (weight + 1) t.
    const double t = target_err / (2.0 * std::max(coeff_mass, 1.0) * 3.0 * static_cast<double>(longest + 1));
    Evaluator ev(std::max(t, min_target_err * 1e-6));

    BigReal total;
    for (const auto& [w, k] : p) {
        total = total + k * ev.zeta(w);
    }
    if (total.err > Float(target_err)) {
        throw std::logic_error("eval_Z: error budget exceeded");
    }
    return total;
}

BigReal eval_Zbar(const HPoly& p, double target_err)
{
    for (const auto& [w, k] : p) {
        require_admissible(w);
    }
    return eval_Z(dmap(p), target_err);
}

BigReal mzv_numeric(const Index& idx, double target_err)
{
    require_admissible(idx);
    return eval_Z(z(idx), target_err);
}

BigReal mzsv_numeric(const Index& idx, double target_err)
{
    require_admissible(idx);
    return eval_Zbar(z(idx), target_err);
}

HPoly bb_poly(int m, int n)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("bb_poly: m and n must be >= 0");
    }
    return sha(Index(static_cast<std::size_t>(m), 2), power(Index{3, 1}, static_cast<std::size_t>(n)));
}

BigReal bb_star_sum(int m, int n, double target_err)
{
    return eval_Zbar(bb_poly(m, n), target_err);
}

std::optional<Rational> reconstruct_rational(const BigReal& v, int w, const BigInt& denom_bound, const Float& tolerance)
{
    if (w < 0) {
        throw std::invalid_argument("reconstruct_rational: w must be >= 0");
    }
    if (denom_bound < 1) {
        throw std::invalid_argument("reconstruct_rational: denom_bound must be >= 1");
    }
    const Float scale = pi_power(w);
    const Float allowed = std::max(Float(3) * v.err, tolerance) + abs(v.value) * eps() * (w + 8);
    Float x = v.value / scale;

    BigInt h_prev = 1;
    BigInt h_prev2 = 0;
    BigInt k_prev = 0;
    BigInt k_prev2 = 1;
    for (int iter = 0; iter < 400; ++iter) {
        const Float fl = floor(x);
        BigInt a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDD);
        const BigInt h = a * h_prev + h_prev2;
        const BigInt k = a * k_prev + k_prev2;
        if (k > denom_bound) {
            break;
        }
        const Rational candidate(h, k);
        if (abs(v.value - to_float(candidate) * scale) <= allowed) {
            return candidate;
        }
        const Float frac = x - fl;
        if (frac == 0) {
            break;
        }
        x = 1 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

} // namespace mzsv::numeric
