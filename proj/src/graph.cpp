#include "grassmann/graph.hpp"

#include <bit>

namespace grassmann::graphs {

int Graph::degree(int v) const {
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = r[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

int Graph::common_neighbors(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph grid_graph(int s, int t) {
    if (s < 2 || t < 2) throw std::invalid_argument("grid_graph: sides must be >= 2");
    Graph g(s * t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) {
            const int v = i * t + j;
            for (int jj = j + 1; jj < t; ++jj) g.add_edge(v, i * t + jj);
            for (int ii = i + 1; ii < s; ++ii) g.add_edge(v, ii * t + j);
        }
    return g;
}

Graph clique_extension(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("clique_extension: q must be >= 1");
    Graph h(g.size() * q);
    for (int u = 0; u < g.size(); ++u) {
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b) h.add_edge(u * q + a, u * q + b);
        for (int v = u + 1; v < g.size(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) h.add_edge(u * q + a, v * q + b);
        }
    }
    return h;
}

Graph shrikhande_graph() {
    Graph g(16);
    static constexpr int diffs[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const auto& d : diffs) {
                const int u = i * 4 + j;
                const int v = ((i + d[0]) % 4) * 4 + (j + d[1]) % 4;
                if (u < v) g.add_edge(u, v);
            }
    return g;
}

DistanceTable distance_table(const Graph& g) {
    const int n = g.size();
    const int words = g.words();
    DistanceTable dt;
    dt.n = n;
    dt.d.assign(static_cast<size_t>(n) * n, 0);

    std::vector<uint64_t> visited(static_cast<size_t>(words));
    std::vector<uint64_t> frontier(static_cast<size_t>(words));
    std::vector<uint64_t> next(static_cast<size_t>(words));
    int diam = 0;

    for (int s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[static_cast<size_t>(s) >> 6] |= uint64_t(1) << (s & 63);
        frontier[static_cast<size_t>(s) >> 6] |= uint64_t(1) << (s & 63);
        int reached = 1;
        int dist = 0;
        uint8_t* drow = dt.d.data() + static_cast<size_t>(s) * n;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (int w = 0; w < words; ++w) {
                uint64_t bits = frontier[static_cast<size_t>(w)];
                while (bits) {
                    const int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const uint64_t* r = g.row(v);
                    for (int x = 0; x < words; ++x) next[static_cast<size_t>(x)] |= r[x];
                }
            }
            ++dist;
            bool any = false;
            for (int w = 0; w < words; ++w) {
                next[static_cast<size_t>(w)] &= ~visited[static_cast<size_t>(w)];
                if (next[static_cast<size_t>(w)]) any = true;
            }
            if (!any) break;
            for (int w = 0; w < words; ++w) {
                uint64_t bits = next[static_cast<size_t>(w)];
                visited[static_cast<size_t>(w)] |= bits;
                while (bits) {
                    const int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    drow[v] = static_cast<uint8_t>(dist);
                    ++reached;
                }
            }
            frontier.swap(next);
            if (dist > diam) diam = dist;
        }
        if (reached != n) throw DisconnectedError("distance_table: graph is disconnected");
    }
    dt.diameter = diam;
    return dt;
}

Graph local_graph(const Graph& g, int x, std::vector<int>* vertex_map) {
    const std::vector<int> nbrs = g.neighbors(x);
    if (vertex_map) *vertex_map = nbrs;
    return g.induced(nbrs);
}

Graph mu_graph(const Graph& g, const DistanceTable& dt, int x, int y,
               std::vector<int>* vertex_map) {
    if (dt.at(x, y) != 2) throw std::invalid_argument("mu_graph: vertices not at distance 2");
    std::vector<int> common;
    const uint64_t* a = g.row(x);
    const uint64_t* b = g.row(y);
    for (int w = 0; w < g.words(); ++w) {
        uint64_t bits = a[w] & b[w];
        while (bits) {
            common.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    if (vertex_map) *vertex_map = common;
    return g.induced(common);
}

}  // namespace grassmann::graphs
