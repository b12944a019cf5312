#include "doctest.h"

#include "grassmann/cliques.hpp"
#include "grassmann/qpoly.hpp"
#include "grassmann/spectra.hpp"
#include "grassmann/subspaces.hpp"

#include <random>

using namespace grassmann;
using namespace grassmann::qpoly;
using exact::BigInt;
using exact::BigRat;
using exact::bracket;
using graphs::DistanceTable;
using graphs::Graph;
using params::ClassicalParams;

namespace {

struct Bundle {
    Graph g;
    DistanceTable dt;
};

const Bundle& j263() {
    static const Bundle b = [] {
        Graph g = graphs::grassmann_graph(6, 3, 2);
        DistanceTable dt = graphs::distance_table(g);
        return Bundle{std::move(g), std::move(dt)};
    }();
    return b;
}

const Bundle& j242() {
    static const Bundle b = [] {
        Graph g = graphs::grassmann_graph(4, 2, 2);
        DistanceTable dt = graphs::distance_table(g);
        return Bundle{std::move(g), std::move(dt)};
    }();
    return b;
}

}  // namespace

TEST_CASE("triple_122_from_111: the three relation rows") {
    const ClassicalParams cp = params::grassmann_classical(6, 3, 2);
    CHECK(triple_122_from_111(cp, PairRelation::same, BigInt(0)) == 72);
    CHECK(triple_122_from_111(cp, PairRelation::adjacent, BigInt(24)) == 72);   // 72-25+1+24
    CHECK(triple_122_from_111(cp, PairRelation::distance2, BigInt(4)) == 50);   // 72-25-1+4
}

TEST_CASE("triple_spear: identity at level 1") {
    const ClassicalParams cp = params::grassmann_classical(6, 3, 2);
    const TripleConstants tc = triple_constants(cp, 1);
    CHECK(tc.rho1 == 0);
    CHECK(tc.rho2 == 0);
    CHECK(tc.sigma == 1);
    CHECK(tc.p1_spear == tc.b1);
    for (long long t : {10, 50, 72})
        for (int j : {1, 2}) CHECK(triple_spear(tc, j, BigInt(t)) == BigRat(t));
}

TEST_CASE("p^1_23 of J_2(6,3): table value equals a brute-force count") {
    const auto& [g, dt] = j263();
    int x = 0, y = g.neighbors(0)[0];
    long long count = 0;
    for (int z = 0; z < g.size(); ++z)
        if (dt.at(x, z) == 2 && dt.at(y, z) == 3) ++count;
    CHECK(count == 256);
    const auto pt = params::p_table(params::array_from_classical(params::grassmann_classical(6, 3, 2)));
    CHECK(pt.at(1, 2, 3) == count);
}

TEST_CASE("triple_ddd_from_111: gamma and pinned evaluations for J_2(6,3)") {
    const ClassicalParams cp = params::grassmann_classical(6, 3, 2);
    CHECK(triple_ddd_gamma(cp) == BigRat(32, 3));
    CHECK(triple_ddd_from_111(cp, PairRelation::adjacent, BigInt(24)) == BigRat(256));
    CHECK(triple_ddd_from_111(cp, PairRelation::adjacent, BigInt(12)) == BigRat(128));
    // q^2(q^{n-D-1}-1) - q(q^{D-1}+1) = 12 - 10 = 2, so (32/3)(4+2) = 64.
    CHECK(triple_ddd_from_111(cp, PairRelation::distance2, BigInt(4)) == BigRat(64));
}

TEST_CASE("triple_ddd_from_111 agrees with the triple_spear route") {
    for (int q : {2, 3}) {
        const ClassicalParams cp = params::grassmann_classical(6, 3, q);
        const TripleConstants tc = triple_constants(cp, 2);
        for (long long t111 = 0; t111 <= 60; t111 += 7) {
            CHECK(triple_ddd_from_111(cp, PairRelation::adjacent, BigInt(t111)) ==
                  triple_spear(tc, 1, triple_122_from_111(cp, PairRelation::adjacent, BigInt(t111))));
            CHECK(triple_ddd_from_111(cp, PairRelation::distance2, BigInt(t111)) ==
                  triple_spear(tc, 2, triple_122_from_111(cp, PairRelation::distance2, BigInt(t111))));
        }
    }
}

TEST_CASE("triple_ddd_from_111 distance-2 branch reconciled against brute force") {
    // The distance-2 oracle: [2,3,3] over local distance-2 pairs must equal
    // the formula at the observed [1,1,1]. This pins the sign/offset
    // conventions before anything downstream relies on them.
    const auto& [g, dt] = j263();
    const ClassicalParams cp = params::grassmann_classical(6, 3, 2);
    const auto nbrs = g.neighbors(0);
    int checked = 0;
    for (size_t a = 0; a < nbrs.size() && checked < 40; ++a)
        for (size_t b = a + 1; b < nbrs.size() && checked < 40; ++b) {
            if (dt.at(nbrs[a], nbrs[b]) != 2) continue;
            const auto tc = graphs::triple_counts(g, dt, 0, nbrs[a], nbrs[b]);
            CHECK(BigRat(tc.at(2, 3, 3)) ==
                  triple_ddd_from_111(cp, PairRelation::distance2, BigInt(tc.at(1, 1, 1))));
            CHECK(tc.at(1, 1, 1) == 4);  // 2q
            ++checked;
        }
    CHECK(checked == 40);
}

TEST_CASE("triple identities hold on J_2(4,2) exhaustively") {
    const auto& [g, dt] = j242();
    const ClassicalParams cp = params::grassmann_classical(4, 2, 2);
    const TripleConstants tc1 = triple_constants(cp, 1);
    for (int x = 0; x < g.size(); ++x) {
        const auto nbrs = g.neighbors(x);
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                const int j = dt.at(nbrs[a], nbrs[b]);
                const auto t = graphs::triple_counts(g, dt, x, nbrs[a], nbrs[b]);
                const BigInt t122(t.at(1, 2, 2));
                CHECK(BigRat(t.at(1, 2, 2)) == triple_spear(tc1, j, t122));
                // [1,2,2] recovered from [1,1,1].
                const auto rel = j == 1 ? PairRelation::adjacent : PairRelation::distance2;
                CHECK(t122 == triple_122_from_111(cp, rel, BigInt(t.at(1, 1, 1))));
            }
    }
}

TEST_CASE("triple identities hold on sampled J_2(6,3) triples") {
    const auto& [g, dt] = j263();
    const ClassicalParams cp = params::grassmann_classical(6, 3, 2);
    const TripleConstants tcs[] = {triple_constants(cp, 1), triple_constants(cp, 2)};
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> pickv(0, g.size() - 1);
    int done = 0;
    while (done < 1500) {
        const int x = pickv(rng);
        const auto nbrs = g.neighbors(x);
        std::uniform_int_distribution<size_t> pickn(0, nbrs.size() - 1);
        const int y = nbrs[pickn(rng)];
        const int z = nbrs[pickn(rng)];
        if (y == z) continue;
        const int j = dt.at(y, z);
        const auto t = graphs::triple_counts(g, dt, x, y, z);
        const BigInt t122(t.at(1, 2, 2));
        const auto rel = j == 1 ? PairRelation::adjacent : PairRelation::distance2;
        CHECK(t122 == triple_122_from_111(cp, rel, BigInt(t.at(1, 1, 1))));
        for (int i = 1; i <= 2; ++i)
            CHECK(BigRat(t.at(i, i + 1, i + 1)) ==
                  triple_spear(tcs[i - 1], j, t122));
        ++done;
    }
}

TEST_CASE("local graph of J_2(6,3): adjacent-pair common counts are 12 or 24") {
    // Same-class pairs see all 24 neighbors of the shared cell; same-line
    // pairs see 1 + 1 + 10. Both are 0 mod [D-1 1] = 3.
    const auto& [g, dt] = j263();
    const graphs::Graph loc = graphs::local_graph(g, 9);
    bool saw12 = false, saw24 = false;
    for (int y = 0; y < loc.size(); ++y)
        for (int z = y + 1; z < loc.size(); ++z) {
            if (!loc.adjacent(y, z)) continue;
            const int common = loc.common_neighbors(y, z);
            CHECK((common == 12 || common == 24));
            (common == 12 ? saw12 : saw24) = true;
        }
    CHECK(saw12);
    CHECK(saw24);
}

TEST_CASE("triple_ddd_constants: J_2(6,3) offsets") {
    const auto c = triple_ddd_constants(params::grassmann_classical(6, 3, 2));
    CHECK(c.gamma == BigRat(32, 3));
    CHECK(c.adjacent_offset == 0);   // 96 - 98 + 2
    CHECK(c.distance2_offset == 2);  // 12 - 10
}

TEST_CASE("congruence_obstruction: pinned residues") {
    const auto c24 = congruence_obstruction(params::grassmann_classical(8, 4, 2));
    CHECK(c24.modulus == 7);
    CHECK(c24.residue_adjacent == 0);
    CHECK(c24.residue_dist2 == 4);
    CHECK(c24.mu_valency_forced);

    const auto c23 = congruence_obstruction(params::grassmann_classical(6, 3, 2));
    CHECK(c23.modulus == 3);
    CHECK(c23.residue_adjacent == 0);
    CHECK(c23.residue_dist2 == 1);
    CHECK_FALSE(c23.mu_valency_forced);

    const auto c34 = congruence_obstruction(params::grassmann_classical(8, 4, 3));
    CHECK(c34.modulus == 13);
    CHECK(c34.residue_adjacent == 1);
    CHECK(c34.residue_dist2 == 6);
}

TEST_CASE("terwilliger_poly: J_2(6,3) roots and the generic identities") {
    const auto rep = terwilliger_poly(params::grassmann_classical(6, 3, 2), 2);
    CHECK(rep.roots == std::array<BigInt, 4>{BigInt(-3), BigInt(-1), BigInt(11), BigInt(11)});
    CHECK(rep.leading_negative);
    CHECK(rep.poly.degree() == 4);
    CHECK(rep.poly.leading_coefficient() == -3);  // -(2^2-1)(2^1-1)
    // Independent root extraction by divisor search.
    const auto found = rep.poly.integer_roots();
    CHECK(found == std::vector<BigInt>{BigInt(-3), BigInt(-1), BigInt(11), BigInt(11)});

    for (int q = 2; q <= 9; ++q)
        for (int D = 3; D <= 12; ++D) {
            // Two largest roots coincide: q^2 [D-1 1] - 1 = [D+1 1] - q - 2.
            CHECK(BigInt(q) * q * bracket(D - 1, q) - 1 == bracket(D + 1, q) - q - 2);
            for (int i = 2; i <= D - 1; ++i) {
                const auto r = terwilliger_poly(params::grassmann_classical(2 * D, D, q), i);
                CHECK(r.leading_negative);
                CHECK(r.roots[0] == -q - 1);
                CHECK(r.roots[1] == -1);
                CHECK(r.roots[2] == r.roots[3]);
            }
        }
}

TEST_CASE("terwilliger_poly is non-negative exactly on the local window") {
    const auto rep = terwilliger_poly(params::grassmann_classical(6, 3, 2), 2);
    for (int eta = -3; eta <= -1; ++eta) CHECK(rep.poly.evaluate(BigInt(eta)) >= 0);
    CHECK(rep.poly.evaluate(BigInt(11)) == 0);
    CHECK(rep.poly.evaluate(BigInt(0)) < 0);
    CHECK(rep.poly.evaluate(BigInt(12)) < 0);
    CHECK(rep.poly.evaluate(BigInt(-4)) < 0);
}

TEST_CASE("local_eigenvalue_window: pinned bounds") {
    const auto w1 = local_eigenvalue_window(params::grassmann_classical(6, 3, 2));
    CHECK(w1.theta_hat_1 == BigRat(-3));
    CHECK(w1.theta_hat_d == 11);
    CHECK(w1.min_mult_theta_hat_1 == 36);

    const auto w2 = local_eigenvalue_window(params::grassmann_classical(8, 4, 3));
    CHECK(w2.theta_hat_1 == BigRat(-4));
    CHECK(w2.theta_hat_d == 116);
    CHECK(w2.min_mult_theta_hat_1 == 1521);

    for (int q = 2; q <= 5; ++q)
        for (int D = 3; D <= 6; ++D) {
            const auto w = local_eigenvalue_window(params::grassmann_classical(2 * D, D, q));
            CHECK(w.theta_hat_1 == BigRat(-q - 1));
            const BigInt r1 = bracket(D, q) - 1;
            CHECK(w.min_mult_theta_hat_1 == r1 * r1);
        }
}

TEST_CASE("forced_local_spectrum: trace elimination forces the extension spectrum") {
    const auto f1 = forced_local_spectrum(params::grassmann_classical(6, 3, 2));
    CHECK(f1.spectrum == params::clique_ext_grid_spectrum(2, BigInt(7)));
    CHECK(f1.e1 == 0);
    CHECK(f1.e_minus1 == 0);
    CHECK(f1.e_d == 0);
    CHECK(f1.elimination_coeff_e1 > 0);

    const auto f2 = forced_local_spectrum(params::grassmann_classical(8, 4, 2));
    CHECK(f2.spectrum == params::clique_ext_grid_spectrum(2, BigInt(15)));

    CHECK_THROWS_AS(forced_local_spectrum(ClassicalParams(3, 2, BigInt(1), BigInt(5))),
                    std::invalid_argument);
}

TEST_CASE("local graph of J_2(6,3): triangle and quadrangle counts from the spectrum") {
    const auto& [g, dt] = j263();
    const graphs::Graph loc = graphs::local_graph(g, 0);
    const auto counts =
        graphs::triangle_quadrangle_check(loc, params::clique_ext_grid_spectrum(2, BigInt(7)));
    CHECK(counts.triangles_per_vertex == 156);  // Tr(A^3)/(2v) = 30576/196
    // Twice the triangle count is the local valency sum 312.
    CHECK(counts.triangles_per_vertex * 2 == 312);
}

TEST_CASE("local graph of J_2(6,3): clique cap qr, coclique cap (q+1)^2, interlacing") {
    const auto& [g, dt] = j263();
    const graphs::Graph loc = graphs::local_graph(g, 42);

    // No clique beyond qr = 14 and no coclique beyond (q+1)^2 = 9.
    CHECK(graphs::max_cliques(loc, 15).empty());
    CHECK(graphs::max_cliques(loc.complement(), 10).empty());

    // Every maximal clique obeys the quotient-interlacing bound, with
    // equality exactly for the 14 full lines.
    const auto cliques = graphs::max_cliques(loc, 2);
    CHECK(cliques.size() == 14);
    const BigRat cap(11);  // q(r-1)-1
    for (const auto& c : cliques) {
        const BigRat second = graphs::quotient_second_eigenvalue(
            BigInt(loc.size()), BigInt(25), BigInt(c.size()));
        CHECK(second <= cap);
        if (c.size() == 14) CHECK(second == cap);
    }
}

TEST_CASE("local graphs of J_2(6,3): spectrum, window and Terwilliger sign") {
    const auto& [g, dt] = j263();
    const auto expected = params::clique_ext_grid_spectrum(2, BigInt(7));
    const auto window = local_eigenvalue_window(params::grassmann_classical(6, 3, 2));
    const auto trep = terwilliger_poly(params::grassmann_classical(6, 3, 2), 2);
    for (int x : {0, 17, 700}) {
        const Graph loc = graphs::local_graph(g, x);
        CHECK(graphs::verify_spectrum_exact(loc, expected));
        for (size_t i = 1; i < expected.pairs.size(); ++i) {
            const BigInt& eta = expected.pairs[i].first;
            const bool in_window =
                (BigRat(eta) >= window.theta_hat_1 && eta <= -1) || eta == window.theta_hat_d;
            CHECK(in_window);
            CHECK(trep.poly.evaluate(eta) >= 0);
        }
    }
}
