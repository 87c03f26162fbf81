#pragma once

#include <compare>
#include <string>

#include "mzsv/harmonic.hpp"
#include "mzsv/poly.hpp"

namespace mzsv {

// A point of Z^3_{>=0}. As a letter of A it must be nonzero (an element
// of M); as a weight it may be zero.
struct Triple {
    int a = 0;
    int b = 0;
    int c = 0;

    int total() const { return a + b + c; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }

    friend Triple operator+(const Triple& x, const Triple& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
    friend Triple operator-(const Triple& x, const Triple& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
    friend auto operator<=>(const Triple&, const Triple&) = default;
    friend bool operator==(const Triple&, const Triple&) = default;
};

using MLetter = Triple;
using MWord = Word<MLetter>;
using MPoly = Poly<MLetter>;

inline constexpr MLetter e1{1, 0, 0};
inline constexpr MLetter e2{0, 1, 0};
inline constexpr MLetter e3{0, 0, 1};

// Nonnegative and nonzero.
bool in_M(const Triple& t);
// |a - b| <= 1.
bool is_great(const Triple& t);
// (j, j, k) for some j >= 0, nonzero.
bool in_M_k(const Triple& t, int k);
// (a,a,0) with a >= 1, (a+1,a,0), (a,a+1,0), or (a,a,1).
bool in_N(const Triple& t);

Triple weight(const MWord& w);
inline int depth(const MWord& w) { return static_cast<int>(w.size()); }
// wt(w) . (1,1,1)
int total_weight(const MWord& w);

// Every prefix sum of (a_s - b_s) lies in {0, 1} and the full sum is 0.
bool is_good(const MWord& w);

// Number of letters with third component 1. Requires every letter to lie
// in M_1 u M_2; throws std::domain_error otherwise.
int char_count(const MWord& w);

// binom(a+b+c, c); the zero triple gives 1.
BigInt bracket(const Triple& t);
BigInt bracket(const MWord& w);

// x_(p,q,r) -> z_{ap+bq+cr}. Requires a, b, c >= 1.
Index hom_abc(const MWord& w, int a, int b, int c);
HPoly hom_abc(const MPoly& p, int a, int b, int c);

std::string to_string(const Triple& t);

} // namespace mzsv
