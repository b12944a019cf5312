#pragma once

#include "grassmann/graph.hpp"

#include <vector>

namespace grassmann::graphs {

class CliqueExplosionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All maximal cliques of size >= min_size, each sorted ascending, the list
/// in lexicographic order. Bron-Kerbosch with pivoting, pruned by the bound
/// |R| + |P| < min_size. Throws CliqueExplosionError once the search tree
/// exceeds node_limit nodes.
std::vector<std::vector<int>> max_cliques(const Graph& g, int min_size,
                                          long long node_limit = 20'000'000);

}  // namespace grassmann::graphs
