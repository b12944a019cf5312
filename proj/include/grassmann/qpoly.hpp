#pragma once

#include "grassmann/params.hpp"
#include "grassmann/polynomial.hpp"

#include <array>

namespace grassmann::qpoly {

using exact::BigInt;
using exact::BigRat;
using exact::IntPolynomial;
using params::ClassicalParams;

enum class PairRelation { same, adjacent, distance2 };

/// Level constants of the [i,i+1,i+1] identity for classical parameters:
/// sigma_i = [i 1]_b, rho_{i1} = -b[i-1 1], rho_{i2} = rho_{i1} +
/// (b/b_1)(c_i - sigma_i), plus p^1_{i,i+1} and b_1 from the array.
struct TripleConstants {
    int i = 1;
    BigInt sigma;
    BigRat rho1;
    BigRat rho2;
    BigInt p1_spear;  // p^1_{i,i+1}
    BigInt b1;
};

/// Requires 1 <= i <= D-1.
TripleConstants triple_constants(const ClassicalParams& cp, int i);

/// [1,2,2] from [1,1,1]: b_1 if y = z; b_1 - a_1 + 1 + [1,1,1] if y ~ z;
/// b_1 - a_1 - 1 + [1,1,1] at distance 2. t111 is ignored for `same`.
BigInt triple_122_from_111(const ClassicalParams& cp, PairRelation rel, const BigInt& t111);

/// [i,i+1,i+1] = p^1_{i,i+1} (sigma_i / b_1 * [1,2,2] + rho_{ij}),
/// j in {1,2} the distance between y and z. Exact rational; the caller
/// asserts integrality when reading the value as a count.
BigRat triple_spear(const TripleConstants& tc, int j, const BigInt& t122);
BigRat triple_spear(const ClassicalParams& cp, int i, int j, const BigInt& t122);

/// Recovers n for Grassmann-shaped classical parameters
/// (D, q, q, [n-D+1 1]_q - 1); returns -1 if cp has a different shape.
int grassmann_n_of(const ClassicalParams& cp);

/// Constants of the [D-1,D,D] identity for the parameters of J_q(n,D):
/// gamma = q^{D^2-4} [n-D-1 D-1]_q / [n-D-1 1]_q and the two additive
/// offsets, so that [D-1,D,D] = gamma ([1,1,1] + offset).
struct TripleDddConstants {
    BigRat gamma;
    BigInt adjacent_offset;   // q^3 [n-D-1 1]([D-1 1]+1) - q[n-D 1][D 1] + 2
    BigInt distance2_offset;  // q^2 (q^{n-D-1}-1) - q (q^{D-1}+1)
};

TripleDddConstants triple_ddd_constants(const ClassicalParams& cp);
BigRat triple_ddd_from_111(const ClassicalParams& cp, PairRelation rel, const BigInt& t111);
BigRat triple_ddd_gamma(const ClassicalParams& cp);

/// Congruence obstruction for n = 2D, D >= 3: modulo [D-1 1]_q,
/// [1,1,1] is congruent to q-2 for adjacent pairs and to 2q at distance 2;
/// for D >= 4 the distance-2 value is forced to 2q exactly, so every
/// mu-graph is 2q-regular.
struct CongruenceObstruction {
    BigInt modulus;
    BigInt residue_adjacent;
    BigInt residue_dist2;
    bool mu_valency_forced = false;  // D >= 4
};

CongruenceObstruction congruence_obstruction(const ClassicalParams& cp);

/// The degree-4 polynomial
///   T_i(z) = -(b^i-1)(b^{i-1}-1) (z-beta+alpha+1)(z+1)(z+b+1)
///            (z - alpha b [D-1 1]_b + 1),
/// non-negative at every non-principal local eigenvalue. Roots ascending;
/// the leading coefficient is negative for b >= 2.
struct TerwilligerReport {
    int i = 2;
    IntPolynomial poly;
    std::array<BigInt, 4> roots;
    bool leading_negative = false;
};

/// Requires D >= 3 and 2 <= i <= D-1.
TerwilligerReport terwilliger_poly(const ClassicalParams& cp, int i);

/// Window for the non-principal local eigenvalues of a graph with the
/// classical parameters of J_q(2D,D): eta in [-q-1, -1] or eta = theta_hat_D,
/// where theta_hat_1 = -1 - b_1/(theta_1+1) = -q-1 with multiplicity at
/// least b_0 - m_1 = ([D 1]_q - 1)^2, and theta_hat_D = q^2 [D-1 1]_q - 1.
struct LocalBound {
    BigRat theta_hat_1;
    BigInt theta_hat_d;
    BigInt min_mult_theta_hat_1;
};

LocalBound local_eigenvalue_window(const ClassicalParams& cp);

/// Trace-difference argument pinning the local spectrum: with excess
/// multiplicities e_1, e_{-1}, e_D against the q-clique extension of the
/// (r x r)-grid, r = [D 1]_q, the combination (sum) * theta_hat_D +
/// (first moment) * (theta_hat_D - 1) - (second moment) leaves only
/// non-negative coefficients, forcing everything to zero. The solved
/// excesses and the e_1 coefficient of that combination are exposed.
struct ForcedLocalSpectrum {
    params::Spectrum spectrum;
    BigInt e1, e_minus1, e_d;
    BigRat elimination_coeff_e1;  // (theta_hat_1+1)(theta_hat_1-theta_hat_D) > 0
};

/// Requires cp = classical parameters of J_q(2D,D) with D >= 3.
ForcedLocalSpectrum forced_local_spectrum(const ClassicalParams& cp);

}  // namespace grassmann::qpoly
