#include "doctest.h"

#include "grassmann/graph_io.hpp"
#include "grassmann/graph.hpp"

#include <sstream>

using namespace grassmann::graphs;

TEST_CASE("edge list: format and round trip") {
    const Graph g = grid_graph(3, 3);
    std::ostringstream os;
    write_edge_list(os, g);
    const std::string text = os.str();
    CHECK(text.rfind("9 18\n", 0) == 0);

    std::istringstream is(text);
    const Graph back = read_edge_list(is);
    CHECK(back == g);
}

TEST_CASE("edge list: malformed inputs rejected") {
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), std::runtime_error);

    std::istringstream truncated("4 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), std::runtime_error);

    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), std::runtime_error);

    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(dup), std::runtime_error);
}

TEST_CASE("adjacency digest: deterministic and order-sensitive") {
    const Graph a = grid_graph(4, 4);
    const Graph b = grid_graph(4, 4);
    CHECK(adjacency_digest(a) == adjacency_digest(b));
    CHECK(adjacency_digest_hex(a).size() == 16);

    // A different labeling of an isomorphic graph digests differently.
    const Graph c = shrikhande_graph();
    CHECK(adjacency_digest(a) != adjacency_digest(c));

    // Swapping the labels of the non-adjacent vertices 0=(0,0) and 5=(1,1)
    // is not an automorphism of the rook graph, so a row changes.
    Graph relabeled(16);
    auto perm = [](int v) { return v == 0 ? 5 : v == 5 ? 0 : v; };
    for (int u = 0; u < 16; ++u)
        for (int v : grid_graph(4, 4).neighbors(u))
            if (u < v) relabeled.add_edge(perm(u), perm(v));
    CHECK(adjacency_digest(relabeled) != adjacency_digest(a));
}
