#include "mzsv/series.hpp"

#include <stdexcept>

namespace mzsv {

namespace {

void check_bound(int bound)
{
    if (bound < 0) {
        throw std::invalid_argument("weight bound must be >= 0");
    }
}

MWord repeat(const MLetter& l, int k)
{
    return MWord(static_cast<std::size_t>(k), l);
}

Rational sign_pow(int base, int exponent)
{
    return pow(Rational(base), static_cast<unsigned>(exponent));
}

} // namespace

TruncatedSeries truncate(const MPoly& p, int bound)
{
    check_bound(bound);
    return TruncatedSeries{bound, p.filtered([bound](const MWord& w) { return total_weight(w) <= bound; })};
}

MPoly star_truncated(const MPoly& p, const MPoly& q, int bound)
{
    MPoly r;
    for (const auto& [u, a] : p) {
        const int wu = total_weight(u);
        for (const auto& [v, b] : q) {
            if (wu + total_weight(v) <= bound) {
                r.add_scaled(star(u, v), a * b);
            }
        }
    }
    return r;
}

MPoly sha_truncated(const MPoly& p, const MPoly& q, int bound)
{
    MPoly r;
    for (const auto& [u, a] : p) {
        const int wu = total_weight(u);
        for (const auto& [v, b] : q) {
            if (wu + total_weight(v) <= bound) {
                r.add_scaled(sha(u, v), a * b);
            }
        }
    }
    return r;
}

std::vector<MWord> enumerate_words(int bound, const LetterPredicate& pred, bool good_only)
{
    check_bound(bound);
    std::vector<MLetter> letters;
    for (int s = 1; s <= bound; ++s) {
        for (int a = 0; a <= s; ++a) {
            for (int b = 0; a + b <= s; ++b) {
                const MLetter l{a, b, s - a - b};
                if (pred(l)) {
                    letters.push_back(l);
                }
            }
        }
    }

    std::vector<MWord> out;
    MWord cur;
    auto rec = [&](auto&& self, int budget, int prefix) -> void {
        if (!good_only || prefix == 0) {
            out.push_back(cur);
        }
        for (const auto& l : letters) {
            const int t = l.total();
            if (t > budget) {
                continue;
            }
            const int next = prefix + l.a - l.b;
            if (good_only && next != 0 && next != 1) {
                continue;
            }
            cur.push_back(l);
            self(self, budget - t, next);
            cur.pop_back();
        }
    };
    rec(rec, bound, 0);
    return out;
}

TruncatedSeries target_series(int bound)
{
    MPoly p;
    for (auto& w : enumerate_words(bound, in_N, true)) {
        const int sign_exp = weight(w).c;
        p.add_term(std::move(w), sign_pow(-1, sign_exp));
    }
    return TruncatedSeries{bound, std::move(p)};
}

MPoly rhs1_generators(int bound)
{
    check_bound(bound);
    MPoly r;
    for (int k = 0; 2 * k <= bound; ++k) {
        r += dmap(repeat(MLetter{1, 1, 0}, k));
    }
    return r;
}

MPoly rhs2_generators(int bound)
{
    check_bound(bound);
    const MWord e12{e1, e2};
    MPoly r;
    for (int m = 0; m <= bound; ++m) {
        for (int j = 0; m + 2 * j <= bound; ++j) {
            r.add_scaled(sha(repeat(e3, m), power(e12, static_cast<std::size_t>(j))), sign_pow(-1, m));
        }
    }
    return r;
}

MPoly lhs1_generators(int bound)
{
    // x_(u1,u1,1)..x_(up,up,1) for all p and u's, and likewise for the v's.
    MPoly us;
    for (auto& w : enumerate_words(bound, [](const MLetter& l) { return in_M_k(l, 1); }, false)) {
        const int p = depth(w);
        us.add_term(std::move(w), sign_pow(-2, p));
    }
    MPoly vs;
    for (auto& w : enumerate_words(bound, [](const MLetter& l) { return in_M_k(l, 2); }, false)) {
        vs.add_term(std::move(w), Rational(1));
    }
    return sha_truncated(us, vs, bound);
}

MPoly lhs2_generators(int bound)
{
    check_bound(bound);
    const MWord e12{e1, e2};
    MPoly r;
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; i + 2 * j <= bound; ++j) {
            r += dmap(sha(repeat(e3, i), power(e12, static_cast<std::size_t>(j))));
        }
    }
    return r;
}

MPoly rhs1_closed(int bound)
{
    MPoly r;
    for (auto& w : enumerate_words(bound, [](const MLetter& l) { return in_M_k(l, 0); }, false)) {
        r.add_term(std::move(w), Rational(1));
    }
    return r;
}

MPoly rhs2_closed(int bound)
{
    MPoly r;
    auto pred = [](const MLetter& l) { return l == e1 || l == e2 || l == e3; };
    for (auto& w : enumerate_words(bound, pred, true)) {
        const int c = weight(w).c;
        r.add_term(std::move(w), sign_pow(-1, c));
    }
    return r;
}

MPoly lhs1_closed(int bound)
{
    MPoly r;
    auto pred = [](const MLetter& l) { return in_M_k(l, 1) || in_M_k(l, 2); };
    for (auto& w : enumerate_words(bound, pred, false)) {
        const int ch = char_count(w);
        r.add_term(std::move(w), sign_pow(-2, ch));
    }
    return r;
}

MPoly lhs2_closed(int bound)
{
    MPoly r;
    for (auto& w : enumerate_words(bound, in_M, true)) {
        Rational coeff(bracket(w));
        r.add_term(std::move(w), coeff);
    }
    return r;
}

TruncatedSeries rhs_series(int bound)
{
    return truncate(star_truncated(rhs2_generators(bound), rhs1_generators(bound), bound), bound);
}

TruncatedSeries lhs_series(int bound)
{
    return truncate(star_truncated(lhs2_generators(bound), lhs1_generators(bound), bound), bound);
}

MPoly good_star_sum(const StarSumSpec& spec, int bound)
{
    auto product = [](const MWord& w, const std::function<Rational(const MLetter&)>& f) {
        Rational r(1);
        for (const auto& l : w) {
            r *= f(l);
        }
        return r;
    };
    MPoly firsts;
    for (auto& w : enumerate_words(bound, spec.in_first, true)) {
        Rational k = product(w, spec.first_coeff);
        firsts.add_term(std::move(w), k);
    }
    MPoly seconds;
    for (auto& w : enumerate_words(bound, spec.in_second, false)) {
        Rational k = product(w, spec.second_coeff);
        seconds.add_term(std::move(w), k);
    }
    return star_truncated(firsts, seconds, bound);
}

Rational letter_factor(const StarSumSpec& spec, const MLetter& alpha)
{
    if (!in_M(alpha)) {
        throw std::domain_error("letter_factor: " + to_string(alpha) + " is not in M");
    }
    Rational sum;
    for (int ga = 0; ga <= alpha.a; ++ga) {
        for (int gb = 0; gb <= alpha.b; ++gb) {
            for (int gc = 0; gc <= alpha.c; ++gc) {
                const MLetter gamma{ga, gb, gc};
                const MLetter beta = alpha - gamma;
                const bool gamma_ok = gamma.is_zero() || spec.in_second(gamma);
                const bool beta_ok = beta.is_zero() || spec.in_first(beta);
                if (!gamma_ok || !beta_ok) {
                    continue;
                }
                const Rational a = beta.is_zero() ? Rational(1) : spec.first_coeff(beta);
                const Rational b = gamma.is_zero() ? Rational(1) : spec.second_coeff(gamma);
                sum += a * b;
            }
        }
    }
    return sum;
}

MPoly good_star_closed(const StarSumSpec& spec, int bound)
{
    MPoly r;
    for (auto& w : enumerate_words(bound, in_M, true)) {
        Rational k(1);
        for (const auto& l : w) {
            k *= letter_factor(spec, l);
            if (k.is_zero()) {
                break;
            }
        }
        r.add_term(std::move(w), k);
    }
    return r;
}

StarSumSpec rhs_star_spec()
{
    return StarSumSpec{
        [](const MLetter& l) { return l == e1 || l == e2 || l == e3; },
        [](const MLetter& l) { return in_M_k(l, 0); },
        [](const MLetter& l) { return sign_pow(-1, l.c); },
        [](const MLetter&) { return Rational(1); },
    };
}

StarSumSpec lhs_star_spec()
{
    return StarSumSpec{
        in_M,
        [](const MLetter& l) { return in_M_k(l, 1) || in_M_k(l, 2); },
        [](const MLetter& l) { return Rational(bracket(l)); },
        [](const MLetter& l) { return l.c == 1 ? Rational(-2) : Rational(1); },
    };
}

Rational C_alpha(const MLetter& alpha)
{
    if (!in_M(alpha) || !is_great(alpha)) {
        throw std::domain_error("C_alpha: " + to_string(alpha) + " is not a great element of M");
    }
    if (alpha.c == 0) {
        return Rational(1);
    }
    if (alpha.c == 1 && alpha.a == alpha.b) {
        return Rational(-1);
    }
    return Rational(0);
}

Rational C_alpha_bruteforce(const MLetter& alpha)
{
    return letter_factor(lhs_star_spec(), alpha);
}

} // namespace mzsv
