#include "doctest.h"

#include "grassmann/recognize.hpp"
#include "grassmann/spectra.hpp"
#include "grassmann/subspaces.hpp"

using namespace grassmann;
using namespace grassmann::recognize;
using exact::BigInt;
using exact::BigRat;
using graphs::clique_extension;
using graphs::Graph;
using graphs::grid_graph;
using graphs::shrikhande_graph;

TEST_CASE("kappa_window: pinned bounds and the empty case") {
    const auto w = kappa_window(2, 7);
    CHECK(w.lower == BigRat(17, 21));
    CHECK(w.upper == BigRat(13, 14));
    CHECK(w.chosen == BigRat(73, 84));
    CHECK_THROWS_AS(kappa_window(2, 2), EmptyWindowError);

    // The upper bound keeps full rows eligible: threshold <= qr.
    for (int q : {1, 2, 3})
        for (long long r = 2; r <= 30; ++r) {
            const auto th = line_size_threshold(q, r);
            CHECK(th.min_size <= q * r);
        }
}

TEST_CASE("line_size_threshold: empty-window fallback is exactly qr") {
    const auto th = line_size_threshold(1, 4);
    CHECK(th.window_empty);
    CHECK(th.min_size == 4);

    const auto th27 = line_size_threshold(2, 7);
    CHECK_FALSE(th27.window_empty);
    CHECK(th27.min_size == 14);  // ceil(73/84 * 14 + 1) = ceil(13.16..)
}

TEST_CASE("detect_lines: extensions of grids and the Shrikhande graph") {
    const auto ls = detect_lines(clique_extension(grid_graph(7, 7), 2), 2, 7);
    CHECK(ls.lines.size() == 14);
    for (const auto& l : ls.lines) CHECK(l.size() == 14);

    const auto none = detect_lines(shrikhande_graph(), 1, 4);
    CHECK(none.window_empty);
    CHECK(none.lines.empty());

    CHECK_THROWS_AS(detect_lines(grid_graph(3, 3), 2, 3), std::invalid_argument);
}

TEST_CASE("check_line_structure: delta counts on clique extensions") {
    {
        const Graph g = clique_extension(grid_graph(7, 7), 2);
        const auto rep = check_line_structure(detect_lines(g, 2, 7), 2, 7, g.size());
        REQUIRE(rep.ok);
        CHECK(rep.delta0 == 0);
        CHECK(rep.delta1 == 24);
        CHECK(rep.delta2 == 1);
        CHECK(rep.intersection_sizes == std::vector<int>{2});
    }
    {
        const Graph g = clique_extension(grid_graph(4, 4), 3);
        const auto rep = check_line_structure(detect_lines(g, 3, 4), 3, 4, g.size());
        REQUIRE(rep.ok);
        CHECK(rep.delta0 == 0);
        CHECK(rep.delta1 == 18);  // 2q(r-1)
        CHECK(rep.delta2 == 2);   // q-1
    }
}

TEST_CASE("check_line_structure: a vertex on three lines is rejected") {
    LineSet ls;
    ls.lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
    const auto rep = check_line_structure(ls, 1, 3, 7);
    CHECK_FALSE(rep.ok);
    CHECK(rep.witness == 0);
    CHECK(rep.reason.find("3 lines") != std::string::npos);
}

TEST_CASE("solve_delta_system: pinned solutions") {
    CHECK(solve_delta_system(2, BigInt(7)) == std::array<BigInt, 3>{BigInt(0), BigInt(24), BigInt(1)});
    CHECK(solve_delta_system(3, BigInt(13)) ==
          std::array<BigInt, 3>{BigInt(0), BigInt(72), BigInt(2)});
    CHECK(solve_delta_system(5, BigInt(6)) ==
          std::array<BigInt, 3>{BigInt(0), BigInt(50), BigInt(4)});
}

TEST_CASE("quotient_by_closed_nbhd: construction inverse and singletons") {
    const Graph base = grid_graph(5, 4);
    for (int q : {2, 3}) {
        const auto res = quotient_by_closed_nbhd(clique_extension(base, q));
        REQUIRE(res.equal_class_sizes);
        CHECK(res.class_size == q);
        CHECK(res.extension_exact);
        CHECK(res.quotient == base);  // classes ordered by least vertex
    }

    const auto res1 = quotient_by_closed_nbhd(base);
    CHECK(res1.class_size == 1);
    CHECK(res1.quotient == base);

    const auto res2 = quotient_by_closed_nbhd(clique_extension(grid_graph(7, 7), 2));
    CHECK(res2.classes.size() == 49);
    CHECK(res2.class_size == 2);
    for (int c = 0; c < res2.quotient.size(); ++c) CHECK(res2.quotient.degree(c) == 12);
}

TEST_CASE("quotient_by_closed_nbhd: unequal class sizes flagged") {
    // Triangle with a pendant: closed neighborhoods {0,1,2} x2, then
    // {0,1,2,3} and {2,3}.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    const auto res = quotient_by_closed_nbhd(g);
    CHECK_FALSE(res.equal_class_sizes);
    CHECK(res.reason == "unequal class sizes");
}

TEST_CASE("certify_grid / certify_rect: grids yes, Shrikhande no") {
    CHECK(certify_grid(grid_graph(7, 7), 7));
    CHECK(certify_grid(grid_graph(4, 4), 4));
    CHECK(certify_grid(grid_graph(2, 2), 2));
    CHECK_FALSE(certify_grid(shrikhande_graph(), 4));  // cliques are triangles

    const auto rect = certify_rect(grid_graph(3, 4));
    REQUIRE(rect.ok);
    CHECK(((rect.s == 3 && rect.t == 4) || (rect.s == 4 && rect.t == 3)));

    // The octahedron is not a grid: every vertex lies on four triangles.
    Graph matching(6);
    matching.add_edge(0, 1);
    matching.add_edge(2, 3);
    matching.add_edge(4, 5);
    const auto bad = certify_rect(matching.complement());
    CHECK_FALSE(bad.ok);
}

TEST_CASE("recognize_clique_ext_grid: round trip over the (q,r) sweep") {
    for (int q = 1; q <= 3; ++q)
        for (int r = 2; r <= 8; ++r) {
            const Graph g = clique_extension(grid_graph(r, r), q);
            const auto rep = recognize_clique_ext_grid(g, q, r);
            REQUIRE_MESSAGE(rep.accepted, "q=", q, " r=", r, " stage=", rep.stage);
            CHECK(rep.line_count == 2 * static_cast<size_t>(r));
            if (q >= 2 && r >= 3) {
                const auto sol = solve_delta_system(q, BigInt(r));
                CHECK(rep.delta0 == sol[0]);
                CHECK(rep.delta1 == sol[1]);
                CHECK(rep.delta2 == sol[2]);
            }
            // Round-trip identity: the quotient re-extended matches the
            // input as labeled under the canonical class relabeling.
            const auto qres = quotient_by_closed_nbhd(g);
            const Graph rebuilt = clique_extension(qres.quotient, q);
            Graph relabel(g.size());
            std::vector<int> pos(static_cast<size_t>(g.size()));
            for (const auto& cls : qres.classes)
                for (size_t p = 0; p < cls.size(); ++p) pos[static_cast<size_t>(cls[p])] = static_cast<int>(p);
            for (int u = 0; u < g.size(); ++u)
                for (int v : g.neighbors(u)) {
                    if (v <= u) continue;
                    relabel.add_edge(qres.class_of[static_cast<size_t>(u)] * q + pos[static_cast<size_t>(u)],
                                     qres.class_of[static_cast<size_t>(v)] * q + pos[static_cast<size_t>(v)]);
                }
            CHECK(relabel == rebuilt);
        }
}

TEST_CASE("RecognitionReport: key-value text serialization") {
    const auto rep =
        recognize_clique_ext_grid(clique_extension(grid_graph(4, 4), 2), 2, 4);
    REQUIRE(rep.accepted);
    const std::string text = rep.to_string();
    CHECK(text.find("verdict=accepted") != std::string::npos);
    CHECK(text.find("delta1=12") != std::string::npos);  // 2q(r-1)
    CHECK(text.find("lines=8") != std::string::npos);

    const auto bad = recognize_clique_ext_grid(shrikhande_graph(), 1, 4);
    const std::string bad_text = bad.to_string();
    CHECK(bad_text.find("verdict=rejected") != std::string::npos);
    CHECK(bad_text.find("stage=line_detection") != std::string::npos);
}

TEST_CASE("recognize_clique_ext_grid: rejections with stages") {
    // Non-square grid extension: wrong vertex count for (q,r) = (2,5).
    const auto r1 = recognize_clique_ext_grid(clique_extension(grid_graph(5, 6), 2), 2, 5);
    CHECK_FALSE(r1.accepted);
    CHECK(r1.stage == "hypotheses");

    // Shrikhande with (q,r) = (1,4): passes the spectral precheck (it is
    // cospectral with the 4x4 grid) but has no line-sized cliques.
    const auto r2 = recognize_clique_ext_grid(shrikhande_graph(), 1, 4);
    CHECK_FALSE(r2.accepted);
    CHECK(r2.stage == "line_detection");
    CHECK(r2.kappa_window_empty);

    // 2-extension of Shrikhande with (q,r) = (2,4): right order, right
    // degree, cospectral with the extension of the grid, still no lines.
    const auto r3 = recognize_clique_ext_grid(clique_extension(shrikhande_graph(), 2), 2, 4);
    CHECK_FALSE(r3.accepted);
    CHECK(r3.stage == "line_detection");

    // Spectral precheck itself: complement of the extension has the wrong
    // spectrum but the right vertex count for some (q,r)? Use a cheap case:
    // grid(4,4) complement is 9-regular on 16 vertices = q(2r-1)-1 for
    // (q,r)=(1,4) fails regularity; instead scramble by taking (q,r)=(2,4)
    // on the extension of grid(4,4) with one diagonal flipped would break
    // regularity. Exercise the flag by disabling it on Shrikhande: the
    // verdict must not change (still no lines).
    RecognizeOptions no_spec;
    no_spec.spectral_precheck = false;
    const auto r4 = recognize_clique_ext_grid(shrikhande_graph(), 1, 4, no_spec);
    CHECK_FALSE(r4.accepted);
    CHECK(r4.stage == "line_detection");
}

TEST_CASE("recognize_clique_ext_grid: wrong-spectrum input rejected at the precheck") {
    // Circulant C16(1,2,3): 16 vertices, 6-regular like the 4x4 grid, but
    // not cospectral with it.
    Graph c16(16);
    for (int v = 0; v < 16; ++v)
        for (int d : {1, 2, 3}) c16.add_edge(v, (v + d) % 16);
    REQUIRE_FALSE(graphs::verify_spectrum_exact(c16, params::grid_spectrum(4)));

    const auto with = recognize_clique_ext_grid(c16, 1, 4);
    CHECK_FALSE(with.accepted);
    CHECK(with.stage == "spectrum");

    RecognizeOptions off;
    off.spectral_precheck = false;
    const auto without = recognize_clique_ext_grid(c16, 1, 4, off);
    CHECK_FALSE(without.accepted);
    // Its maximal cliques are the 16 runs {i,..,i+3}, putting every vertex
    // on four lines.
    CHECK(without.stage == "line_structure");
    CHECK(without.reason.find("4 lines") != std::string::npos);
}

TEST_CASE("recognize_clique_ext_grid: spectral precheck catches cospectral-size fakes") {
    // 4x4 grid with (q,r) = (1,4) accepted; Shrikhande passes the precheck
    // and fails later, so the precheck alone is provably not the verdict.
    const auto ok = recognize_clique_ext_grid(grid_graph(4, 4), 1, 4);
    CHECK(ok.accepted);
    CHECK(graphs::verify_spectrum_exact(shrikhande_graph(),
                                        params::clique_ext_grid_spectrum(1, BigInt(4))));
}

TEST_CASE("verify_clique_ext_of_rect: local graphs of Grassmann graphs") {
    {
        const Graph g = graphs::grassmann_graph(4, 2, 2);
        const auto cert = verify_clique_ext_of_rect(graphs::local_graph(g, 3), 2, 3, 3);
        CHECK(cert.ok);
    }
    {
        // Non-square local structure: J_2(5,2) has local graphs isomorphic
        // to the 2-clique extension of the (7 x 3)-grid.
        const Graph g = graphs::grassmann_graph(5, 2, 2);
        const auto cert = verify_clique_ext_of_rect(graphs::local_graph(g, 0), 2, 7, 3);
        CHECK(cert.ok);
    }
}

TEST_CASE("check_ncc_hypotheses: Grassmann graph, octahedron, Kneser rejection") {
    {
        const Graph g = graphs::grassmann_graph(4, 2, 2);
        const auto rep = check_ncc_hypotheses(g, graphs::distance_table(g));
        REQUIRE(rep.ok);
        CHECK(rep.mu_graphs_checked == 280);  // 35 * k_2 / 2 = 35*16/2
        CHECK(rep.cocliques_checked > 0);
        CHECK_FALSE(rep.sampled);
    }
    {
        // K_{2,2,2}, the complement of a perfect matching on 6 vertices.
        Graph matching(6);
        matching.add_edge(0, 1);
        matching.add_edge(2, 3);
        matching.add_edge(4, 5);
        const Graph octa = matching.complement();
        const auto rep = check_ncc_hypotheses(octa, graphs::distance_table(octa));
        CHECK(rep.ok);  // mu-graphs are 4-cycles = 2x2 grids; no 3-cocliques
        CHECK(rep.cocliques_checked == 0);
    }
    {
        // Kneser graph K(5,2) (Petersen): mu-graphs are single vertices.
        Graph petersen(10);
        std::vector<std::pair<int, int>> sets;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j) {
                const auto [a, b] = sets[i];
                const auto [c, d] = sets[j];
                if (a != c && a != d && b != c && b != d)
                    petersen.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        const auto rep = check_ncc_hypotheses(petersen, graphs::distance_table(petersen));
        CHECK_FALSE(rep.ok);
        CHECK(rep.witness[0] >= 0);
    }
}
