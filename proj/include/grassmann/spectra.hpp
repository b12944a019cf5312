#pragma once

#include "grassmann/graph.hpp"
#include "grassmann/params.hpp"

#include <optional>

namespace grassmann::graphs {

using exact::BigInt;

/// Square integer matrix for exact walk counting. Products run in machine
/// words while an a-priori entry bound fits int64, and are promoted to
/// arbitrary precision otherwise.
class ExactMatrix {
public:
    explicit ExactMatrix(int n);
    static ExactMatrix identity(int n);
    static ExactMatrix adjacency(const Graph& g);

    int size() const { return n_; }
    bool wide() const { return wide_; }
    BigInt at(int i, int j) const;

    /// this * o, with overflow promotion; parallel over row blocks.
    ExactMatrix multiply(const ExactMatrix& o, int parallelism = 1) const;

    /// Linear combination sum_i coeffs[i] * mats[i] (all same size).
    static ExactMatrix combine(const std::vector<BigInt>& coeffs,
                               const std::vector<const ExactMatrix*>& mats);

    BigInt trace() const;
    /// True iff every column is a constant vector.
    bool columns_constant() const;

private:
    void promote();

    int n_ = 0;
    bool wide_ = false;
    std::vector<int64_t> small_;
    std::vector<BigInt> big_;
};

/// Two-stage exact spectrum check:
///  (1) annihilation: prod over non-principal theta_j of (A - theta_j I)
///      must have all columns proportional to the all-one vector;
///  (2) moments: Tr(A^l) equals sum m_j theta_j^l for l = 0..d.
/// Together these pin the spectrum of g to sp exactly (the moment system is
/// Vandermonde in the multiplicities). Requires g regular with valency
/// sp.top(); returns false on any mismatch.
bool verify_spectrum_exact(const Graph& g, const params::Spectrum& sp, int parallelism = 1);

class NonConstantCountError : public std::runtime_error {
public:
    NonConstantCountError(const std::string& what, int vertex)
        : std::runtime_error(what), witness(vertex) {}
    int witness;
};

struct TriangleQuadrangleCounts {
    BigInt triangles_per_vertex;
    BigInt quadrangles_per_vertex;
};

/// For a connected regular graph with exactly 4 distinct eigenvalues:
/// triangles through any vertex = Tr(A^3)/(2v) and quadrangles through any
/// vertex = Tr(A^4)/(2v) - k^2 + k/2, both computed from sp. A quadrangle is
/// a 4-cycle that may carry diagonal edges; per-vertex constancy is verified
/// by direct enumeration and a NonConstantCountError carries the first
/// violating vertex.
TriangleQuadrangleCounts triangle_quadrangle_check(const Graph& g, const params::Spectrum& sp);

/// Direct per-vertex counts used by triangle_quadrangle_check; exposed for
/// cross-checks. Quadrangles through x are counted as
/// (1/2) sum over ordered pairs a != c in Gamma(x) of (|Gamma(a) cap Gamma(c)| - 1).
BigInt count_triangles_at(const Graph& g, int x);
BigInt count_quadrangles_at(const Graph& g, int x);

struct EmpiricalArrayResult {
    std::optional<params::IntersectionArray> array;
    // Set when the graph is not distance-regular: the first violating pair.
    std::string failure;
    int witness_x = -1, witness_y = -1;

    bool ok() const { return array.has_value(); }
};

/// Counts |Gamma(y) cap Gamma_{i-1}(x)| and |Gamma(y) cap Gamma_{i+1}(x)|
/// over every ordered pair, returning the array iff they are constant.
EmpiricalArrayResult empirical_intersection_array(const Graph& g, const DistanceTable& dt);

/// Triple intersection numbers [l,m,n] = |Gamma_l(x) cap Gamma_m(y) cap
/// Gamma_n(z)| for one triple, single pass over the vertex set.
struct TripleCounts {
    int D = 0;
    std::vector<int> c;

    int at(int l, int m, int n) const {
        return c[static_cast<size_t>((l * (D + 1) + m) * (D + 1) + n)];
    }
    int& at(int l, int m, int n) {
        return c[static_cast<size_t>((l * (D + 1) + m) * (D + 1) + n)];
    }
};

TripleCounts triple_counts(const Graph& g, const DistanceTable& dt, int x, int y, int z);

/// Second eigenvalue of the 2x2 quotient matrix of the partition
/// {clique of size ell, rest} in a k-regular graph on v vertices:
/// ell - 1 - (k - ell) * ell / (v - ell).
exact::BigRat quotient_second_eigenvalue(const BigInt& v, const BigInt& k, const BigInt& ell);

}  // namespace grassmann::graphs
