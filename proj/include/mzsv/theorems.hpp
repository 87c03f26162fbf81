#pragma once

#include "mzsv/harmonic.hpp"
#include "mzsv/malgebra.hpp"

// Both sides of the key identity, in H^1 for given (a, b, c) and in A.
// Summation variables u_1..u_p, v_1..v_q range over Z>=0.
//
//   LHS = sum_{i+p+2q=m, j+u_1+..+u_p+v_1+..+v_q=n}
//           (-2)^p d(z_c^i sha (z_a z_b)^j)
//             * (z_{(a+b)u_1+c} ... z_{(a+b)u_p+c} sha z_{(a+b)v_1+2c} ... z_{(a+b)v_q+2c})
//   RHS = (-1)^m sum_{j+k=n} (z_c^m sha (z_a z_b)^j) * d(z_{a+b}^k)
//
// The A versions replace z_a, z_b, z_c by x_e1, x_e2, x_e3, the u-letter by
// x_(u,u,1), the v-letter by x_(v,v,2) and z_{a+b} by x_(1,1,0).
namespace mzsv {

HPoly lhs_mthm(int a, int b, int c, int m, int n);
HPoly rhs_mthm(int a, int b, int c, int m, int n);

MPoly lhs_thm_inA(int m, int n);
MPoly rhs_thm_inA(int m, int n);

} // namespace mzsv
