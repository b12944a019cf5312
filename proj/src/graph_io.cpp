#include "grassmann/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace grassmann::graphs {

void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.size() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) os << u << " " << v << "\n";
}

void write_edge_list(const std::string& path, const Graph& g) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(os, g);
    if (!os) throw std::runtime_error("write failed: " + path);
}

Graph read_edge_list(std::istream& is) {
    long long n = 0, m = 0;
    if (!(is >> n >> m) || n < 0 || m < 0) throw std::runtime_error("bad edge list header");
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u = 0, v = 0;
        if (!(is >> u >> v)) throw std::runtime_error("truncated edge list");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::runtime_error("bad edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (g.edge_count() != m) throw std::runtime_error("duplicate edges in edge list");
    return g;
}

Graph read_edge_list(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_edge_list(is);
}

uint64_t adjacency_digest(const Graph& g) {
    uint64_t h = 0xcbf29ce484222325ull;
    constexpr uint64_t prime = 0x100000001b3ull;
    for (int v = 0; v < g.size(); ++v) {
        const uint64_t* r = g.row(v);
        for (int w = 0; w < g.words(); ++w) {
            uint64_t word = r[w];
            for (int b = 0; b < 8; ++b) {
                h ^= word & 0xffu;
                h *= prime;
                word >>= 8;
            }
        }
    }
    return h;
}

std::string adjacency_digest_hex(const Graph& g) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << adjacency_digest(g);
    return os.str();
}

}  // namespace grassmann::graphs
