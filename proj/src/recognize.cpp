#include "grassmann/recognize.hpp"

#include "grassmann/cliques.hpp"
#include "grassmann/parallel.hpp"
#include "grassmann/rng.hpp"
#include "grassmann/spectra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace grassmann::recognize {

using exact::to_integer;

KappaWindow kappa_window(int q, long long r) {
    if (q < 1 || r < 2) throw std::invalid_argument("kappa_window: need q >= 1, r >= 2");
    const BigInt qr = BigInt(q) * r;
    KappaWindow w;
    w.lower = BigRat(2, 3) + BigRat(5 * BigInt(q) - 4, 3 * qr);
    w.upper = BigRat(1) - BigRat(1, qr);
    if (w.lower >= w.upper) throw EmptyWindowError("kappa window is empty");
    w.chosen = (w.lower + w.upper) / 2;
    return w;
}

LineThreshold line_size_threshold(int q, long long r) {
    const BigInt qr = BigInt(q) * r;
    LineThreshold t;
    try {
        const KappaWindow w = kappa_window(q, r);
        // Smallest integer >= kappa*qr + 1.
        const BigRat bound = w.chosen * BigRat(qr) + 1;
        BigInt m = exact::num(bound) / exact::den(bound);
        if (BigRat(m) < bound) ++m;
        t.min_size = static_cast<int>(m);
    } catch (const EmptyWindowError&) {
        t.window_empty = true;
        t.min_size = static_cast<int>(qr);
    }
    return t;
}

LineSet detect_lines(const Graph& g, int q, long long r, long long clique_node_limit) {
    const long long expected_v = q * r * r;
    if (g.size() != expected_v)
        throw std::invalid_argument("detect_lines: vertex count is not q*r^2");
    const long long expected_k = q * (2 * r - 1) - 1;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != expected_k)
            throw std::invalid_argument("detect_lines: graph is not q(2r-1)-1-regular");

    const LineThreshold th = line_size_threshold(q, r);
    LineSet ls;
    ls.window_empty = th.window_empty;
    ls.lines = graphs::max_cliques(g, th.min_size, clique_node_limit);
    ls.lines_of_vertex.assign(static_cast<size_t>(g.size()), {});
    for (size_t i = 0; i < ls.lines.size(); ++i)
        for (int v : ls.lines[i]) ls.lines_of_vertex[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    return ls;
}

LineStructureReport check_line_structure(const LineSet& ls, int q, long long r, int v) {
    LineStructureReport rep;
    const long long qr = static_cast<long long>(q) * r;
    const long long k = q * (2 * r - 1) - 1;

    std::vector<std::vector<int>> of_vertex(static_cast<size_t>(v));
    for (size_t i = 0; i < ls.lines.size(); ++i)
        for (int x : ls.lines[i]) of_vertex[static_cast<size_t>(x)].push_back(static_cast<int>(i));

    for (int x = 0; x < v; ++x) {
        if (of_vertex[static_cast<size_t>(x)].size() != 2) {
            rep.reason = "vertex on " + std::to_string(of_vertex[static_cast<size_t>(x)].size()) +
                         " lines (expected 2)";
            rep.witness = x;
            return rep;
        }
    }
    for (size_t i = 0; i < ls.lines.size(); ++i) {
        rep.line_sizes.push_back(static_cast<int>(ls.lines[i].size()));
        if (static_cast<long long>(ls.lines[i].size()) != qr) {
            rep.reason = "line of size " + std::to_string(ls.lines[i].size()) + " (expected " +
                         std::to_string(qr) + ")";
            rep.witness = static_cast<int>(i);
            return rep;
        }
    }

    std::set<int> meet_sizes;
    for (size_t i = 0; i < ls.lines.size(); ++i) {
        for (size_t j = i + 1; j < ls.lines.size(); ++j) {
            std::vector<int> meet;
            std::set_intersection(ls.lines[i].begin(), ls.lines[i].end(), ls.lines[j].begin(),
                                  ls.lines[j].end(), std::back_inserter(meet));
            if (meet.empty()) continue;
            meet_sizes.insert(static_cast<int>(meet.size()));
            if (static_cast<long long>(meet.size()) != q) {
                rep.reason = "intersecting lines share " + std::to_string(meet.size()) +
                             " vertices (expected " + std::to_string(q) + ")";
                rep.witness = static_cast<int>(i);
                return rep;
            }
        }
    }
    rep.intersection_sizes.assign(meet_sizes.begin(), meet_sizes.end());

    // Per-vertex neighbor partition; the two lines through x cover
    // delta_1 + delta_2 of its k neighbors.
    const BigInt expect_d1 = BigInt(2) * q * (r - 1);
    const BigInt expect_d2 = BigInt(q) - 1;
    for (int x = 0; x < v; ++x) {
        const auto& lx = of_vertex[static_cast<size_t>(x)];
        const auto& l1 = ls.lines[static_cast<size_t>(lx[0])];
        const auto& l2 = ls.lines[static_cast<size_t>(lx[1])];
        std::vector<int> meet;
        std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(),
                              std::back_inserter(meet));
        const BigInt d2 = BigInt(meet.size()) - 1;  // x itself sits in the meet
        const BigInt d1 = BigInt(l1.size()) + BigInt(l2.size()) - 2 * BigInt(meet.size());
        const BigInt d0 = BigInt(k) - d1 - d2;
        if (d0 != 0 || d1 != expect_d1 || d2 != expect_d2) {
            rep.reason = "neighbor partition mismatch";
            rep.witness = x;
            return rep;
        }
    }
    rep.delta0 = 0;
    rep.delta1 = expect_d1;
    rep.delta2 = expect_d2;

    // Cross-check against the solved system inside its regime.
    if (q >= 2 && r >= 3) {
        const auto solved = solve_delta_system(q, BigInt(r));
        if (solved[0] != rep.delta0 || solved[1] != rep.delta1 || solved[2] != rep.delta2) {
            rep.reason = "delta system solution mismatch";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

std::array<BigInt, 3> solve_delta_system(int q, const BigInt& r) {
    if (q < 2 || r < 3) throw std::invalid_argument("solve_delta_system: need q >= 2, r >= 3");
    const BigInt Q(q);
    const BigInt qr = Q * r;
    const std::array<BigInt, 3> ell = {Q - 2, qr - 2, 2 * (qr - 2) - (Q - 2)};

    // Right-hand sides: valency, local valency sum, local valency square sum.
    const std::array<BigInt, 3> rhs = {
        Q * (2 * r - 1) - 1,
        2 * Q * Q * r * r - Q * Q - 6 * qr + 3 * Q + 2,
        Q * Q * Q * (2 * r * r * r + 2 * r * r - 4 * r + 1) +
            Q * Q * (-12 * r * r + 4 * r + 3) + 8 * Q * (2 * r - 1) - 4};

    // Vandermonde-style Cramer solve in exact rationals.
    auto det3 = [](const std::array<std::array<BigInt, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const std::array<std::array<BigInt, 3>, 3> a = {{{1, 1, 1},
                                                     {ell[0], ell[1], ell[2]},
                                                     {ell[0] * ell[0], ell[1] * ell[1],
                                                      ell[2] * ell[2]}}};
    const BigInt det = det3(a);
    if (det == 0) throw std::logic_error("solve_delta_system: singular system");

    std::array<BigInt, 3> sol;
    for (int c = 0; c < 3; ++c) {
        auto ac = a;
        for (int row = 0; row < 3; ++row) ac[static_cast<size_t>(row)][static_cast<size_t>(c)] = rhs[static_cast<size_t>(row)];
        sol[static_cast<size_t>(c)] = to_integer(BigRat(det3(ac), det));
    }

    if (sol[0] != 0 || sol[1] != 2 * Q * (r - 1) || sol[2] != Q - 1)
        throw std::logic_error("solve_delta_system: unexpected solution");
    return sol;
}

QuotientResult quotient_by_closed_nbhd(const Graph& g) {
    const int n = g.size();
    const int words = g.words();
    QuotientResult out;
    out.class_of.assign(static_cast<size_t>(n), -1);

    // Group identical closed neighborhoods.
    std::map<std::vector<uint64_t>, int> index;
    for (int v = 0; v < n; ++v) {
        std::vector<uint64_t> closed(g.row(v), g.row(v) + words);
        closed[static_cast<size_t>(v) >> 6] |= uint64_t(1) << (v & 63);
        auto [it, fresh] = index.try_emplace(std::move(closed), -1);
        if (fresh) {
            it->second = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        out.classes[static_cast<size_t>(it->second)].push_back(v);
    }
    // Deterministic class order by least member.
    std::sort(out.classes.begin(), out.classes.end());
    for (size_t c = 0; c < out.classes.size(); ++c)
        for (int v : out.classes[c]) out.class_of[static_cast<size_t>(v)] = static_cast<int>(c);

    const int m = static_cast<int>(out.classes.size());
    out.quotient = Graph(m);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const int cu = out.class_of[static_cast<size_t>(u)];
            const int cv = out.class_of[static_cast<size_t>(v)];
            if (cu != cv && !out.quotient.adjacent(cu, cv)) out.quotient.add_edge(cu, cv);
        }

    out.class_size = static_cast<int>(out.classes[0].size());
    out.equal_class_sizes = true;
    for (const auto& c : out.classes)
        if (static_cast<int>(c.size()) != out.class_size) {
            out.equal_class_sizes = false;
            out.reason = "unequal class sizes";
            return out;
        }

    // The input must be exactly the class_size-clique extension of the quotient.
    out.extension_exact = true;
    for (int u = 0; u < n && out.extension_exact; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int cu = out.class_of[static_cast<size_t>(u)];
            const int cv = out.class_of[static_cast<size_t>(v)];
            const bool want = cu == cv || out.quotient.adjacent(cu, cv);
            if (g.adjacent(u, v) != want) {
                out.extension_exact = false;
                out.reason = "not an exact clique extension of the quotient";
                break;
            }
        }
    return out;
}

GridCertificate certify_rect(const Graph& g) {
    GridCertificate cert;
    const int n = g.size();
    if (n == 0) {
        cert.reason = "empty graph";
        return cert;
    }

    std::vector<std::vector<int>> cliques;
    try {
        cliques = graphs::max_cliques(g, 2);
    } catch (const graphs::CliqueExplosionError&) {
        cert.reason = "clique enumeration exploded";
        return cert;
    }

    // Vertex -> incident maximal cliques; exactly two per vertex.
    std::vector<std::vector<int>> of_vertex(static_cast<size_t>(n));
    for (size_t i = 0; i < cliques.size(); ++i)
        for (int v : cliques[i]) of_vertex[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    for (int v = 0; v < n; ++v)
        if (of_vertex[static_cast<size_t>(v)].size() != 2) {
            cert.reason = "vertex on " + std::to_string(of_vertex[static_cast<size_t>(v)].size()) +
                          " maximal cliques (expected 2)";
            cert.witness = v;
            return cert;
        }

    // Each edge inside exactly one clique. Two cliques through both u,v
    // would put u (and v) on two cliques meeting in >= 2 vertices; catch it
    // by checking the edge counts add up.
    long long edge_sum = 0;
    for (const auto& c : cliques) edge_sum += static_cast<long long>(c.size()) * (static_cast<long long>(c.size()) - 1) / 2;
    if (edge_sum != g.edge_count()) {
        cert.reason = "maximal cliques do not partition the edge set";
        return cert;
    }

    // 2-color the clique intersection graph.
    const int m = static_cast<int>(cliques.size());
    std::vector<int> side(static_cast<size_t>(m), -1);
    std::vector<int> stack;
    side[0] = 0;
    stack.push_back(0);
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int v : cliques[static_cast<size_t>(c)])
            for (int d : of_vertex[static_cast<size_t>(v)]) {
                if (d == c) continue;
                if (side[static_cast<size_t>(d)] == -1) {
                    side[static_cast<size_t>(d)] = 1 - side[static_cast<size_t>(c)];
                    stack.push_back(d);
                } else if (side[static_cast<size_t>(d)] == side[static_cast<size_t>(c)]) {
                    cert.reason = "clique intersection graph is not bipartite";
                    cert.witness = d;
                    return cert;
                }
            }
    }
    for (int c = 0; c < m; ++c)
        if (side[static_cast<size_t>(c)] == -1) {
            cert.reason = "clique intersection graph is disconnected";
            cert.witness = c;
            return cert;
        }

    std::vector<int> a, b;
    for (int c = 0; c < m; ++c) (side[static_cast<size_t>(c)] == 0 ? a : b).push_back(c);

    // Side A holds |B|-sized cliques and vice versa; every cross pair meets
    // in exactly one vertex (complete bipartite incidence).
    const int s = static_cast<int>(a.size());
    const int t = static_cast<int>(b.size());
    if (static_cast<long long>(s) * t != n) {
        cert.reason = "clique family sizes do not multiply to the vertex count";
        return cert;
    }
    for (int ca : a)
        if (static_cast<int>(cliques[static_cast<size_t>(ca)].size()) != t) {
            cert.reason = "clique size mismatch within a family";
            cert.witness = ca;
            return cert;
        }
    for (int cb : b)
        if (static_cast<int>(cliques[static_cast<size_t>(cb)].size()) != s) {
            cert.reason = "clique size mismatch within a family";
            cert.witness = cb;
            return cert;
        }
    for (int ca : a)
        for (int cb : b) {
            std::vector<int> meet;
            std::set_intersection(cliques[static_cast<size_t>(ca)].begin(),
                                  cliques[static_cast<size_t>(ca)].end(),
                                  cliques[static_cast<size_t>(cb)].begin(),
                                  cliques[static_cast<size_t>(cb)].end(), std::back_inserter(meet));
            if (meet.size() != 1) {
                cert.reason = "row/column incidence not complete";
                cert.witness = ca;
                return cert;
            }
        }

    cert.ok = true;
    // (s,t) = family sizes; side A is the one containing clique 0.
    cert.s = s;
    cert.t = t;
    return cert;
}

GridCertificate certify_rect(const Graph& g, int s, int t) {
    GridCertificate cert;
    if (s < 2 || t < 2) {
        cert.reason = "degenerate grid shape";
        return cert;
    }
    if (g.size() != s * t) {
        cert.reason = "vertex count != s*t";
        return cert;
    }
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != s + t - 2) {
            cert.reason = "graph is not (s+t-2)-regular";
            cert.witness = v;
            return cert;
        }
    cert = certify_rect(g);
    if (!cert.ok) return cert;
    if (!((cert.s == s && cert.t == t) || (cert.s == t && cert.t == s))) {
        cert.ok = false;
        cert.reason = "grid shape mismatch";
    }
    return cert;
}

bool certify_grid(const Graph& g, long long r) {
    if (r < 2 || r > 1'000'000) return false;
    return certify_rect(g, static_cast<int>(r), static_cast<int>(r)).ok;
}

namespace {

void reject(RecognitionReport& rep, const std::string& stage, const std::string& reason,
            int witness = -1) {
    rep.accepted = false;
    rep.stage = stage;
    rep.reason = reason;
    rep.witness = witness;
}

}  // namespace

std::string RecognitionReport::to_string() const {
    std::ostringstream os;
    os << "verdict=" << (accepted ? "accepted" : "rejected");
    if (!accepted) os << " stage=" << stage << " reason=\"" << reason << "\"";
    if (witness >= 0) os << " witness=" << witness;
    os << " kappa_window=" << (kappa_window_empty ? "empty(threshold qr)" : "standard");
    os << " lines=" << line_count;
    if (accepted) {
        os << " delta0=" << delta0 << " delta1=" << delta1 << " delta2=" << delta2;
        os << " quotient_vertices=" << (quotient ? quotient->size() : 0);
    }
    return os.str();
}

RecognitionReport recognize_clique_ext_grid(const Graph& g, int q, long long r,
                                            const RecognizeOptions& opt) {
    RecognitionReport rep;
    if (q < 1 || r < 2) {
        reject(rep, "hypotheses", "need q >= 1 and r >= 2");
        return rep;
    }
    if (g.size() != q * r * r) {
        reject(rep, "hypotheses", "vertex count != q*r^2");
        return rep;
    }
    const long long k = q * (2 * r - 1) - 1;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != k) {
            reject(rep, "hypotheses", "not q(2r-1)-1-regular", v);
            return rep;
        }

    if (opt.spectral_precheck &&
        !graphs::verify_spectrum_exact(g, params::clique_ext_grid_spectrum(q, BigInt(r)))) {
        reject(rep, "spectrum", "spectrum differs from the q-clique extension of the grid");
        return rep;
    }

    if (opt.congruence_precheck) {
        // |Delta(y,z)| = 2q for non-adjacent pairs (the mu-condition actually
        // used downstream; the adjacent-pair congruence needs D, unavailable
        // from (q,r) alone when q does not divide r-1).
        for (int y = 0; y < g.size(); ++y)
            for (int z = y + 1; z < g.size(); ++z)
                if (!g.adjacent(y, z) && g.common_neighbors(y, z) != 2 * q) {
                    reject(rep, "congruence", "non-adjacent pair without 2q common neighbors", y);
                    return rep;
                }
    }

    LineSet ls;
    try {
        ls = detect_lines(g, q, r, opt.clique_node_limit);
    } catch (const graphs::CliqueExplosionError& e) {
        reject(rep, "line_detection", e.what());
        return rep;
    }
    rep.kappa_window_empty = ls.window_empty;
    rep.line_count = ls.lines.size();
    if (ls.lines.empty()) {
        reject(rep, "line_detection", "no maximal clique reaches the line threshold");
        return rep;
    }

    const LineStructureReport lrep = check_line_structure(ls, q, r, g.size());
    rep.line_sizes = lrep.line_sizes;
    rep.intersection_sizes = lrep.intersection_sizes;
    if (!lrep.ok) {
        reject(rep, "line_structure", lrep.reason, lrep.witness);
        return rep;
    }
    rep.delta0 = lrep.delta0;
    rep.delta1 = lrep.delta1;
    rep.delta2 = lrep.delta2;

    QuotientResult qr = quotient_by_closed_nbhd(g);
    if (!qr.equal_class_sizes || qr.class_size != q || !qr.extension_exact) {
        reject(rep, "quotient", qr.reason.empty() ? "class size != q" : qr.reason);
        return rep;
    }

    if (!certify_grid(qr.quotient, r)) {
        reject(rep, "grid_certificate", "quotient is not the (r x r)-grid");
        return rep;
    }

    rep.accepted = true;
    rep.stage = "accepted";
    rep.quotient = std::move(qr.quotient);
    return rep;
}

GridCertificate verify_clique_ext_of_rect(const Graph& g, int q, long long s, long long t) {
    GridCertificate cert;
    if (g.size() != q * s * t) {
        cert.reason = "vertex count != q*s*t";
        return cert;
    }
    const QuotientResult qr = quotient_by_closed_nbhd(g);
    if (!qr.equal_class_sizes || qr.class_size != q || !qr.extension_exact) {
        cert.reason = qr.reason.empty() ? "closed-neighborhood classes are not q-cliques"
                                        : qr.reason;
        return cert;
    }
    return certify_rect(qr.quotient, static_cast<int>(s), static_cast<int>(t));
}

NccReport check_ncc_hypotheses(const Graph& g, const graphs::DistanceTable& dt, uint64_t seed,
                               long long max_candidates, long long sample_draws, int parallelism) {
    NccReport rep;
    const int n = g.size();

    // (i) every mu-graph is a non-degenerate grid; parallel over the first
    // vertex with the least witness pair winning deterministically.
    struct MuShard {
        long long checked = 0;
        int wx = -1, wy = -1;
        std::string reason;
    };
    std::vector<MuShard> shards(static_cast<size_t>(std::max(parallelism, 1)));
    parallel_chunks(static_cast<size_t>(n), parallelism, [&](size_t ci, size_t lo, size_t hi) {
        MuShard& sh = shards[ci];
        for (size_t x = lo; x < hi; ++x)
            for (int y = static_cast<int>(x) + 1; y < n; ++y) {
                if (dt.at(static_cast<int>(x), y) != 2) continue;
                const Graph mu = graphs::mu_graph(g, dt, static_cast<int>(x), y);
                const GridCertificate cert = certify_rect(mu);
                ++sh.checked;
                if (!cert.ok || cert.s < 2 || cert.t < 2) {
                    sh.wx = static_cast<int>(x);
                    sh.wy = y;
                    sh.reason = cert.reason;
                    return;
                }
            }
    });
    for (const auto& sh : shards) {
        rep.mu_graphs_checked += sh.checked;
        if (sh.wx >= 0 && rep.witness[0] < 0) {
            rep.reason = "mu-graph is not a non-degenerate grid: " + sh.reason;
            rep.witness = {sh.wx, sh.wy, -1};
        }
    }
    if (rep.witness[0] >= 0) return rep;

    // (ii) the common neighborhood of a 3-coclique is a coclique.
    auto coclique_ok = [&](int x, int y, int z) -> bool {
        std::vector<uint64_t> common(static_cast<size_t>(g.words()));
        const uint64_t* rx = g.row(x);
        const uint64_t* ry = g.row(y);
        const uint64_t* rz = g.row(z);
        for (int w = 0; w < g.words(); ++w) common[static_cast<size_t>(w)] = rx[w] & ry[w] & rz[w];
        std::vector<int> verts;
        for (int w = 0; w < g.words(); ++w) {
            uint64_t bits = common[static_cast<size_t>(w)];
            while (bits) {
                verts.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (g.adjacent(verts[i], verts[j])) return false;
        return true;
    };

    const long long candidates =
        static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    if (candidates <= max_candidates) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (g.adjacent(x, y)) continue;
                for (int z = y + 1; z < n; ++z) {
                    if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                    ++rep.cocliques_checked;
                    if (!coclique_ok(x, y, z)) {
                        rep.reason = "3-coclique with a non-edgeless common neighborhood";
                        rep.witness = {x, y, z};
                        return rep;
                    }
                }
            }
    } else {
        rep.sampled = true;
        SampleRng rng(seed);
        const auto pick = [&] { return static_cast<int>(rng.below(static_cast<uint64_t>(n))); };
        for (long long draw = 0; draw < sample_draws; ++draw) {
            const int x = pick(), y = pick(), z = pick();
            if (x == y || x == z || y == z) continue;
            if (g.adjacent(x, y) || g.adjacent(x, z) || g.adjacent(y, z)) continue;
            ++rep.cocliques_checked;
            if (!coclique_ok(x, y, z)) {
                rep.reason = "3-coclique with a non-edgeless common neighborhood";
                rep.witness = {x, y, z};
                return rep;
            }
        }
    }

    rep.ok = true;
    return rep;
}

}  // namespace grassmann::recognize
