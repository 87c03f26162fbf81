#pragma once

#include <functional>
#include <vector>

#include "mzsv/malgebra.hpp"

// Weight-truncated formal power series in Q<<x_alpha | alpha in M>>.
//
// A TruncatedSeries of bound W holds exactly the terms of total weight
// wt . (1,1,1) <= W. Every letter has total weight >= 1 and d, star, sha
// are weight-additive, so truncating the generator families at W and the
// products at W yields the exact <= W component of the formal identity.
namespace mzsv {

struct TruncatedSeries {
    int bound = 0;
    MPoly terms;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries truncate(const MPoly& p, int bound);

// Products that skip pairs whose combined total weight exceeds bound.
MPoly star_truncated(const MPoly& p, const MPoly& q, int bound);
MPoly sha_truncated(const MPoly& p, const MPoly& q, int bound);

using LetterPredicate = std::function<bool(const MLetter&)>;

// All words over {letters l in M with pred(l)} of total weight <= bound,
// including the empty word. With good_only, only good words are kept.
std::vector<MWord> enumerate_words(int bound, const LetterPredicate& pred, bool good_only);

// sum over good words alpha over N of (-1)^{wt(alpha).e3} x_alpha.
TruncatedSeries target_series(int bound);

// Generator families, expanded from their definitions.
//   rhs1: sum_k d(x_(1,1,0)^k)
//   rhs2: sum_{j,m} (-1)^m (x_e3^m sha (x_e1 x_e2)^j)
//   lhs1: sum_{p,q,u,v} (-2)^p (x_(u1,u1,1)..x_(up,up,1) sha x_(v1,v1,2)..x_(vq,vq,2))
//   lhs2: sum_{i,j} d(x_e3^i sha (x_e1 x_e2)^j)
MPoly rhs1_generators(int bound);
MPoly rhs2_generators(int bound);
MPoly lhs1_generators(int bound);
MPoly lhs2_generators(int bound);

// Their closed forms.
//   rhs1: sum over words over M_0 of x_gamma
//   rhs2: sum over good words over {e1,e2,e3} of (-1)^{wt.e3} x_beta
//   lhs1: sum over words over M_1 u M_2 of (-2)^{char} x_gamma
//   lhs2: sum over good words of <beta> x_beta
MPoly rhs1_closed(int bound);
MPoly rhs2_closed(int bound);
MPoly lhs1_closed(int bound);
MPoly lhs2_closed(int bound);

// Both sides of the formal identity, truncated, built from the generator
// families with truncated d / sha / star (never from the closed form).
TruncatedSeries rhs_series(int bound);
TruncatedSeries lhs_series(int bound);

// Coefficients for the letter-factorised star sum.
struct StarSumSpec {
    LetterPredicate in_first;  // M'
    LetterPredicate in_second; // M'', must lie in {(a,a,b)}
    std::function<Rational(const MLetter&)> first_coeff;  // A_beta
    std::function<Rational(const MLetter&)> second_coeff; // B_gamma
};

// sum_{beta good over M'} sum_{gamma over M''} A_beta B_gamma (x_beta * x_gamma),
// truncated at bound.
MPoly good_star_sum(const StarSumSpec& spec, int bound);
// sum_{alpha good} prod_s (sum_{beta+gamma=alpha_s} A_beta B_gamma) x_alpha,
// with A_0 = B_0 = 1.
MPoly good_star_closed(const StarSumSpec& spec, int bound);
// The per-letter factor of good_star_closed.
Rational letter_factor(const StarSumSpec& spec, const MLetter& alpha);

// Instance used for the right-hand side: M' = {e1,e2,e3}, M'' = M_0,
// A_beta = (-1)^{beta.e3}, B = 1.
StarSumSpec rhs_star_spec();
// Instance used for the left-hand side: M' = M, M'' = M_1 u M_2,
// A_beta = <beta>, B_gamma = (-2)^{[gamma.e3 == 1]}.
StarSumSpec lhs_star_spec();

// The left-hand per-letter coefficient for great alpha: 1 if c = 0,
// -1 if a = b and c = 1, 0 otherwise. Throws std::domain_error when alpha
// is not a great element of M.
Rational C_alpha(const MLetter& alpha);
// The defining sum over beta + gamma = alpha, beta in M u {0},
// gamma in M_1 u M_2 u {0}, of <beta> (-2)^{[gamma.e3 == 1]}.
Rational C_alpha_bruteforce(const MLetter& alpha);

} // namespace mzsv
