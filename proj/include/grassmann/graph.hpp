#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassmann::graphs {

class DisconnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on dense bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), adj_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: no loops");
        set_bit(u, v);
        set_bit(v, u);
    }

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
    uint64_t* row(int v) { return adj_.data() + static_cast<size_t>(v) * words_; }

    int degree(int v) const;
    long long edge_count() const;
    std::vector<int> neighbors(int v) const;
    /// Number of common neighbors of u and v.
    int common_neighbors(int u, int v) const;

    /// Induced subgraph; vertex i of the result is verts[i].
    Graph induced(const std::vector<int>& verts) const;
    Graph complement() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void set_bit(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("Graph::add_edge");
        row(u)[static_cast<size_t>(v) >> 6] |= uint64_t(1) << (v & 63);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> adj_;
};

/// Cartesian product of complete graphs K_s and K_t: vertices (i,j) with
/// i < s, j < t (row-major), adjacent iff same row or same column.
Graph grid_graph(int s, int t);

/// Replace each vertex by a q-clique; copies of v are vq..vq+q-1 and two
/// copies are adjacent iff their base vertices are equal or adjacent.
Graph clique_extension(const Graph& g, int q);

/// The 16-vertex graph cospectral with the (4x4)-grid: Cayley graph on
/// Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
Graph shrikhande_graph();

/// All-pairs BFS distances of a connected graph.
struct DistanceTable {
    int n = 0;
    int diameter = 0;
    std::vector<uint8_t> d;

    int at(int x, int y) const { return d[static_cast<size_t>(x) * n + y]; }
};

/// Throws DisconnectedError if g is not connected.
DistanceTable distance_table(const Graph& g);

/// Subgraph induced on the neighbors of x; vertex_map (if given) receives the
/// original vertex ids in index order.
Graph local_graph(const Graph& g, int x, std::vector<int>* vertex_map = nullptr);

/// Subgraph induced on the common neighborhood of two vertices at distance 2.
Graph mu_graph(const Graph& g, const DistanceTable& dt, int x, int y,
               std::vector<int>* vertex_map = nullptr);

}  // namespace grassmann::graphs
