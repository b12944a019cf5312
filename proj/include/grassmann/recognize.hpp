#pragma once

#include "grassmann/graph.hpp"
#include "grassmann/params.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace grassmann::recognize {

using exact::BigInt;
using exact::BigRat;
using graphs::Graph;

class EmptyWindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Admissible range for the line threshold factor:
/// 2/3 + (5q-4)/(3qr) < kappa <= 1 - 1/(qr). The deterministic choice is the
/// midpoint. Throws EmptyWindowError when lower >= upper.
struct KappaWindow {
    BigRat lower;
    BigRat upper;
    BigRat chosen;
};

KappaWindow kappa_window(int q, long long r);

/// Minimal clique size that qualifies as a line, ceil(kappa*qr + 1) for the
/// chosen kappa; falls back to exactly qr when the kappa window is empty
/// (small r), with window_empty reporting which regime applied.
struct LineThreshold {
    int min_size = 0;
    bool window_empty = false;
};

LineThreshold line_size_threshold(int q, long long r);

/// Lines of a local-graph candidate: maximal cliques above the threshold.
struct LineSet {
    std::vector<std::vector<int>> lines;
    std::vector<std::vector<int>> lines_of_vertex;  // indices into lines
    bool window_empty = false;
};

/// Requires qr^2 vertices and q(2r-1)-1-regularity (throws
/// std::invalid_argument otherwise; the pipeline checks these up front).
LineSet detect_lines(const Graph& g, int q, long long r,
                     long long clique_node_limit = 20'000'000);

/// Line structure checks: every vertex on exactly two lines, every line of size
/// qr, intersecting lines sharing exactly q vertices, and the per-vertex
/// neighbor partition (delta_0, delta_1, delta_2) = (0, 2q(r-1), q-1),
/// cross-checked against the solved linear system.
struct LineStructureReport {
    bool ok = false;
    std::string reason;
    int witness = -1;
    BigInt delta0, delta1, delta2;
    std::vector<int> line_sizes;
    std::vector<int> intersection_sizes;  // distinct sizes of nonempty pairwise meets
};

LineStructureReport check_line_structure(const LineSet& ls, int q, long long r, int v);

/// Exact rational solve of the 3x3 system with multipliers l_0 = q-2,
/// l_1 = qr-2, l_2 = 2(qr-2)-(q-2) and the local valency-sum right-hand
/// sides; asserts the unique solution (0, 2q(r-1), q-1) and integrality.
std::array<BigInt, 3> solve_delta_system(int q, const BigInt& r);

/// Partition by equal closed neighborhoods, the quotient graph on the
/// classes, and whether the input is exactly the |class|-clique extension
/// of the quotient (requires equal class sizes).
struct QuotientResult {
    std::vector<std::vector<int>> classes;  // each sorted; ordered by least vertex
    std::vector<int> class_of;
    Graph quotient;
    bool equal_class_sizes = false;
    int class_size = 0;
    bool extension_exact = false;
    std::string reason;
};

QuotientResult quotient_by_closed_nbhd(const Graph& g);

/// Krausz-style structural certificate that g is the (s x t)-grid: the edge
/// set partitions into maximal cliques, every vertex lies on exactly two,
/// and the clique intersection graph is the complete bipartite K_{s,t} with
/// one shared vertex per cross pair.
struct GridCertificate {
    bool ok = false;
    std::string reason;
    int witness = -1;
    int s = 0, t = 0;
};

/// Discovers (s,t); requires nothing beyond connectivity of interest.
GridCertificate certify_rect(const Graph& g);
/// Fixed rectangle shape.
GridCertificate certify_rect(const Graph& g, int s, int t);
/// Square (r x r) certificate with vertex-count and regularity prechecks.
bool certify_grid(const Graph& g, long long r);

struct RecognizeOptions {
    bool spectral_precheck = true;
    bool congruence_precheck = false;
    long long clique_node_limit = 20'000'000;
};

/// Verdict of the full reconstruction pipeline.
struct RecognitionReport {
    bool accepted = false;
    std::string stage;   // failing stage on rejection, "accepted" otherwise
    std::string reason;
    int witness = -1;
    bool kappa_window_empty = false;
    size_t line_count = 0;
    std::vector<int> line_sizes;
    std::vector<int> intersection_sizes;
    BigInt delta0, delta1, delta2;
    std::optional<Graph> quotient;

    std::string to_string() const;
};

/// detect_lines -> check_line_structure -> quotient_by_closed_nbhd ->
/// certify_grid, after vertex-count/regularity (and optional spectral /
/// congruence) prechecks.
RecognitionReport recognize_clique_ext_grid(const Graph& g, int q, long long r,
                                            const RecognizeOptions& opt = {});

/// Structural check that g is the q-clique extension of the (s x t)-grid,
/// via the closed-neighborhood quotient (no line machinery, any rectangle).
GridCertificate verify_clique_ext_of_rect(const Graph& g, int q, long long s, long long t);

/// Local-characterization hypotheses: (i) every mu-graph is a
/// non-degenerate (s x t)-grid, s,t >= 2; (ii) the common neighborhood of
/// every induced 3-coclique is edgeless. 3-cocliques are enumerated
/// exhaustively when C(v,3) <= max_candidates and sampled with the given
/// seed otherwise.
struct NccReport {
    bool ok = false;
    std::string reason;
    std::array<int, 3> witness{-1, -1, -1};
    long long mu_graphs_checked = 0;
    long long cocliques_checked = 0;
    bool sampled = false;
};

NccReport check_ncc_hypotheses(const Graph& g, const graphs::DistanceTable& dt,
                               uint64_t seed = 42, long long max_candidates = 10'000'000,
                               long long sample_draws = 200'000, int parallelism = 1);

}  // namespace grassmann::recognize
