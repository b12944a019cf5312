#pragma once

#include "grassmann/qanalog.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grassmann::params {

using exact::BigInt;
using exact::BigRat;

/// Classical parameters whose derived b_i or c_i are non-positive somewhere.
class InfeasibleParamsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Intersection-array data that cannot belong to a distance-regular graph
/// (negative or fractional derived quantity).
class InconsistentArrayError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The quadruple (D, b, alpha, beta). Only the b >= 2 regime is supported.
struct ClassicalParams {
    int diameter = 2;
    int b = 2;
    BigInt alpha;
    BigInt beta;

    ClassicalParams(int D_, int b_, BigInt alpha_, BigInt beta_);
};

/// {b_0,...,b_{D-1}; c_1,...,c_D} with the usual derived quantities.
struct IntersectionArray {
    std::vector<BigInt> b;  // b_0 .. b_{D-1}
    std::vector<BigInt> c;  // c_1 .. c_D

    IntersectionArray(std::vector<BigInt> b_, std::vector<BigInt> c_);

    int diameter() const { return static_cast<int>(b.size()); }
    const BigInt& k() const { return b[0]; }
    /// b_i with the convention b_D = 0.
    BigInt b_at(int i) const;
    /// c_i with the convention c_0 = 0.
    BigInt c_at(int i) const;
    /// a_i = k - b_i - c_i for 0 <= i <= D.
    BigInt a_at(int i) const;
    /// k_i = |Gamma_i(x)| = (b_0...b_{i-1})/(c_1...c_i); exact by validation.
    BigInt k_at(int i) const;
    /// Total vertex count, sum of k_i.
    BigInt vertex_count() const;

    bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
};

/// (eigenvalue, multiplicity) pairs with distinct eigenvalues, descending.
struct Spectrum {
    std::vector<std::pair<BigInt, BigInt>> pairs;

    Spectrum() = default;
    explicit Spectrum(std::vector<std::pair<BigInt, BigInt>> p);

    size_t size() const { return pairs.size(); }
    BigInt vertex_count() const;
    const BigInt& top() const { return pairs.front().first; }
    bool operator==(const Spectrum& o) const { return pairs == o.pairs; }
    std::string to_string() const;
};

/// Full table of intersection numbers p^h_{ij}, 0 <= h,i,j <= D.
struct PTable {
    int D = 0;
    std::vector<BigInt> t;  // (D+1)^3 entries

    const BigInt& at(int h, int i, int j) const;
    BigInt& at(int h, int i, int j);
};

/// c_i = [i 1](1 + alpha[i-1 1]), b_i = ([D 1]-[i 1])(beta - alpha[i 1]),
/// brackets base b. Throws InfeasibleParamsError if some entry is <= 0.
IntersectionArray array_from_classical(const ClassicalParams& cp);

/// Classical parameters of J_q(n,D): (D, q, q, [n-D+1 1]_q - 1).
/// Requires n >= 2D, D >= 2, q >= 2.
ClassicalParams grassmann_classical(int n, int D, int q);

/// All intersection numbers from the array via the three-term recurrence
///   c_{i+1} p^h_{i+1,j}
///     = b_{j-1} p^h_{i,j-1} + (a_j - a_i) p^h_{i,j} + c_{j+1} p^h_{i,j+1}
///       - b_{i-1} p^h_{i-1,j},
/// seeded by p^h_{0,j} = delta_{hj} and the i = 1 row from the array.
/// Throws InconsistentArrayError when an entry comes out negative or
/// fractional, and validates symmetry, row sums and the triangle inequality.
PTable p_table(const IntersectionArray& ia);

/// Eigenvalues theta_j = q^{j+1}[n-D-j 1][D-j 1] - [j 1] with multiplicities
/// m_j = [n j]_q - [n j-1]_q (m_0 = 1). Requires n >= 2D >= 4, q >= 2.
Spectrum classical_spectrum(int n, int D, int q);

/// Spectrum of the (s x s)-grid: {2(s-1)}^1, {s-2}^{2(s-1)}, {-2}^{(s-1)^2}.
Spectrum grid_spectrum(int s);

/// Spectrum of the q-clique extension of the (r x r)-grid:
///   {q(2r-1)-1}^1, {q(r-1)-1}^{2(r-1)}, {-1}^{(q-1)r^2}, {-q-1}^{(r-1)^2}.
/// For q = 1 the -1 row has multiplicity zero and is omitted.
Spectrum clique_ext_grid_spectrum(int q, const BigInt& r);

/// True iff sum m = v, sum m*theta = 0 and sum m*theta^2 = v*k.
bool check_moments(const Spectrum& sp, const BigInt& v, const BigInt& k);

}  // namespace grassmann::params
