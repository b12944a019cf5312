#pragma once

#include "grassmann/bigint.hpp"

namespace grassmann::exact {

/// q-analog bracket [j 1]_b = 1 + b + ... + b^{j-1} = (b^j - 1)/(b - 1).
/// bracket(0, b) = 0 (empty sum). Requires j >= 0, b >= 2.
BigInt bracket(int j, const BigInt& b);
BigInt bracket(int j, int b);

/// Gaussian binomial coefficient [n m]_q, the number of m-dimensional
/// subspaces of an n-dimensional space over a q-element field. Computed as an
/// exact quotient of integer products; divisibility is asserted at runtime.
/// Returns 0 when m < 0 or m > n (so boundary terms of q-Pascal style
/// recurrences vanish without special-casing).
BigInt gaussian_binomial(int n, int m, int q);

/// Diameter threshold chi(q): 9 for q=2, 8 for q=3, 7 for q in {4,5,6},
/// 6 for q >= 7. Throws std::invalid_argument for q < 2.
int chi(int q);

}  // namespace grassmann::exact
