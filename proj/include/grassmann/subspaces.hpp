#pragma once

#include "grassmann/gf.hpp"
#include "grassmann/graph.hpp"

#include <vector>

namespace grassmann::graphs {

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A D-dimensional subspace of F_q^n, held as its canonical reduced
/// row-echelon basis matrix. Two subspaces are equal iff the matrices are.
struct Subspace {
    int dim = 0;
    int ambient = 0;
    gf::Matrix basis;

    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

/// All D-dimensional subspaces of F_q^n as canonical RREF representatives,
/// enumerated lexicographically over pivot column sets, then over free
/// entries (row-major position order, earlier positions varying slowest).
/// Throws TooLargeError beyond n <= 12, q <= 16 or [n D]_q > 10^6.
std::vector<Subspace> enumerate_subspaces(int n, int D, const gf::Field& field);

/// Grassmann graph J_q(n,D): vertex i is subspace i in enumeration order,
/// with U ~ W iff dim(U cap W) = D-1, decided by the rank of the stacked
/// 2D x n basis matrix (rank D+1).
Graph grassmann_graph(int n, int D, int q);

}  // namespace grassmann::graphs
