#pragma once

#include <cstdint>
#include <string>

#include "mzsv/poly.hpp"

namespace mzsv {

// H^1 in the z-basis: the letter a stands for z_a = x^{a-1} y, a >= 1.
using Index = Word<int>;
using HPoly = Poly<int>;

// Every entry >= 1.
bool is_index(const Index& idx);
// Empty, or first entry >= 2.
bool is_admissible(const Index& idx);
int index_weight(const Index& idx);

// Throws std::invalid_argument if some entry is < 1.
void require_index(const Index& idx);

// z_a as a one-term poly.
HPoly z(int a);
HPoly z(const Index& idx);

enum class XY : std::uint8_t { x, y };
using XYWord = Word<XY>;
using XYPoly = Poly<XY>;

// z_{a1}...z_{an} -> x^{a1-1} y ... x^{an-1} y.
XYWord zword_to_xy(const Index& idx);

// Inverse on the H^1 basis. Throws std::domain_error when a word is
// non-empty and does not end in y.
Index xy_to_zword(const XYWord& w);
HPoly xy_to_zpoly(const XYPoly& p);

// The automorphism x -> x, y -> x + y, extended multiplicatively.
XYPoly phi(const XYWord& w);
XYPoly phi(const XYPoly& p);

// d(wy) = phi(w) y, d(1) = 1, computed through the xy-representation.
HPoly d_via_phi(const Index& idx);

std::string to_string(const XYWord& w);

} // namespace mzsv
