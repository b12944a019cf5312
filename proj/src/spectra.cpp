#include "grassmann/spectra.hpp"

#include "grassmann/parallel.hpp"
#include "grassmann/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace grassmann::graphs {

using exact::BigRat;

ExactMatrix::ExactMatrix(int n) : n_(n), small_(static_cast<size_t>(n) * n, 0) {}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m.small_[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

ExactMatrix ExactMatrix::adjacency(const Graph& g) {
    ExactMatrix m(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) m.small_[static_cast<size_t>(i) * g.size() + j] = 1;
    return m;
}

BigInt ExactMatrix::at(int i, int j) const {
    const size_t k = static_cast<size_t>(i) * n_ + j;
    return wide_ ? big_[k] : BigInt(small_[k]);
}

void ExactMatrix::promote() {
    if (wide_) return;
    big_.assign(small_.begin(), small_.end());
    small_.clear();
    wide_ = true;
}

namespace {

int64_t max_abs(const std::vector<int64_t>& v) {
    int64_t m = 0;
    for (int64_t x : v) m = std::max(m, static_cast<int64_t>(std::llabs(x)));
    return m;
}

int64_t max_row_l1(const std::vector<int64_t>& v, int n) {
    int64_t m = 0;
    for (int i = 0; i < n; ++i) {
        int64_t s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<int64_t>(std::llabs(v[static_cast<size_t>(i) * n + j]));
        m = std::max(m, s);
    }
    return m;
}

}  // namespace

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o, int parallelism) const {
    if (n_ != o.n_) throw std::invalid_argument("ExactMatrix::multiply: size mismatch");
    const int n = n_;

    if (!wide_ && !o.wide_) {
        // |C_ij| <= max row L1 of |A| times max |B|; safe in int64 if bounded.
        const int64_t bound_a = max_row_l1(small_, n);
        const int64_t bound_b = max_abs(o.small_);
        constexpr int64_t kSafe = int64_t(1) << 62;
        if (bound_b == 0 || bound_a <= kSafe / (bound_b ? bound_b : 1)) {
            ExactMatrix r(n);
            parallel_chunks(static_cast<size_t>(n), parallelism,
                            [&](size_t, size_t lo, size_t hi) {
                                for (size_t i = lo; i < hi; ++i) {
                                    int64_t* out = r.small_.data() + i * n;
                                    const int64_t* arow = small_.data() + i * n;
                                    for (int k = 0; k < n; ++k) {
                                        const int64_t a = arow[k];
                                        if (a == 0) continue;
                                        const int64_t* brow =
                                            o.small_.data() + static_cast<size_t>(k) * n;
                                        for (int j = 0; j < n; ++j) out[j] += a * brow[j];
                                    }
                                }
                            });
            return r;
        }
    }

    ExactMatrix a = *this;
    ExactMatrix b = o;
    a.promote();
    b.promote();
    ExactMatrix r(n);
    r.promote();
    parallel_chunks(static_cast<size_t>(n), parallelism, [&](size_t, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            BigInt* out = r.big_.data() + i * n;
            const BigInt* arow = a.big_.data() + i * n;
            for (int k = 0; k < n; ++k) {
                const BigInt& x = arow[k];
                if (x == 0) continue;
                const BigInt* brow = b.big_.data() + static_cast<size_t>(k) * n;
                for (int j = 0; j < n; ++j) out[j] += x * brow[j];
            }
        }
    });
    return r;
}

ExactMatrix ExactMatrix::combine(const std::vector<BigInt>& coeffs,
                                 const std::vector<const ExactMatrix*>& mats) {
    if (coeffs.size() != mats.size() || mats.empty())
        throw std::invalid_argument("ExactMatrix::combine: arity mismatch");
    const int n = mats[0]->size();
    ExactMatrix r(n);
    r.promote();
    for (size_t t = 0; t < mats.size(); ++t) {
        if (mats[t]->size() != n) throw std::invalid_argument("ExactMatrix::combine: size mismatch");
        if (coeffs[t] == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r.big_[static_cast<size_t>(i) * n + j] += coeffs[t] * mats[t]->at(i, j);
    }
    return r;
}

BigInt ExactMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::columns_constant() const {
    for (int j = 0; j < n_; ++j) {
        const BigInt head = at(0, j);
        for (int i = 1; i < n_; ++i)
            if (at(i, j) != head) return false;
    }
    return true;
}

bool verify_spectrum_exact(const Graph& g, const params::Spectrum& sp, int parallelism) {
    const int v = g.size();
    if (v == 0 || sp.pairs.empty()) return false;
    if (sp.vertex_count() != v) return false;

    // The top eigenvalue must be the valency of a regular graph.
    const BigInt& k = sp.top();
    for (int x = 0; x < v; ++x)
        if (g.degree(x) != k) return false;

    const int d = static_cast<int>(sp.size()) - 1;

    std::vector<ExactMatrix> powers;
    powers.reserve(static_cast<size_t>(d) + 1);
    powers.push_back(ExactMatrix::identity(v));
    powers.push_back(ExactMatrix::adjacency(g));
    for (int l = 2; l <= d; ++l)
        powers.push_back(powers.back().multiply(powers[1], parallelism));

    // Moments: Tr(A^l) = sum m_j theta_j^l for l = 0..d.
    for (int l = 0; l <= d; ++l) {
        BigInt expect = 0;
        for (const auto& [theta, m] : sp.pairs) {
            BigInt p = 1;
            for (int e = 0; e < l; ++e) p *= theta;
            expect += m * p;
        }
        if (powers[static_cast<size_t>(l)].trace() != expect) return false;
    }

    // Annihilation by the non-principal eigenvalues.
    std::vector<BigInt> roots;
    for (size_t j = 1; j < sp.pairs.size(); ++j) roots.push_back(sp.pairs[j].first);
    const exact::IntPolynomial ann = exact::IntPolynomial::from_roots(roots);
    std::vector<BigInt> coeffs;
    std::vector<const ExactMatrix*> mats;
    for (int l = 0; l <= d; ++l) {
        coeffs.push_back(ann.coeff(l));
        mats.push_back(&powers[static_cast<size_t>(l)]);
    }
    return ExactMatrix::combine(coeffs, mats).columns_constant();
}

BigInt count_triangles_at(const Graph& g, int x) {
    // Triangles through x = number of edges inside Gamma(x).
    const std::vector<int> nbrs = g.neighbors(x);
    BigInt t = 0;
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) ++t;
    return t;
}

BigInt count_quadrangles_at(const Graph& g, int x) {
    // 4-cycles x,a,b,c with chords allowed: b runs over common neighbors of
    // a,c other than x; each cycle arises for the two orderings of (a,c).
    const std::vector<int> nbrs = g.neighbors(x);
    long long twice = 0;
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = 0; j < nbrs.size(); ++j) {
            if (i == j) continue;
            twice += g.common_neighbors(nbrs[i], nbrs[j]) - 1;
        }
    if (twice % 2 != 0) throw std::logic_error("count_quadrangles_at: odd double count");
    return BigInt(twice / 2);
}

TriangleQuadrangleCounts triangle_quadrangle_check(const Graph& g, const params::Spectrum& sp) {
    if (sp.size() != 4)
        throw std::invalid_argument("triangle_quadrangle_check: need exactly 4 distinct eigenvalues");
    const BigInt v(g.size());
    const BigInt& k = sp.top();

    BigInt tr3 = 0, tr4 = 0;
    for (const auto& [theta, m] : sp.pairs) {
        tr3 += m * theta * theta * theta;
        tr4 += m * theta * theta * theta * theta;
    }
    const BigRat triangles = BigRat(tr3) / BigRat(2 * v);
    const BigRat quadrangles = BigRat(tr4) / BigRat(2 * v) - BigRat(k * k) + BigRat(k, 2);

    TriangleQuadrangleCounts out{exact::to_integer(triangles), exact::to_integer(quadrangles)};
    for (int x = 0; x < g.size(); ++x) {
        if (count_triangles_at(g, x) != out.triangles_per_vertex)
            throw NonConstantCountError("triangle count not constant", x);
        if (count_quadrangles_at(g, x) != out.quadrangles_per_vertex)
            throw NonConstantCountError("quadrangle count not constant", x);
    }
    return out;
}

EmpiricalArrayResult empirical_intersection_array(const Graph& g, const DistanceTable& dt) {
    const int v = g.size();
    const int D = dt.diameter;
    const int words = g.words();
    EmpiricalArrayResult res;

    std::vector<BigInt> bs(static_cast<size_t>(D), BigInt(-1));
    std::vector<BigInt> cs(static_cast<size_t>(D), BigInt(-1));

    std::vector<uint64_t> levels(static_cast<size_t>(D + 1) * words);
    for (int x = 0; x < v; ++x) {
        std::fill(levels.begin(), levels.end(), 0);
        for (int y = 0; y < v; ++y) {
            const int i = dt.at(x, y);
            levels[static_cast<size_t>(i) * words + (static_cast<size_t>(y) >> 6)] |=
                uint64_t(1) << (y & 63);
        }
        for (int y = 0; y < v; ++y) {
            const int i = dt.at(x, y);
            if (i == 0) continue;
            const uint64_t* ry = g.row(y);
            int c_obs = 0, b_obs = 0;
            const uint64_t* lo = levels.data() + static_cast<size_t>(i - 1) * words;
            for (int w = 0; w < words; ++w) c_obs += std::popcount(ry[w] & lo[w]);
            if (i < D) {
                const uint64_t* hi = levels.data() + static_cast<size_t>(i + 1) * words;
                for (int w = 0; w < words; ++w) b_obs += std::popcount(ry[w] & hi[w]);
            }
            BigInt& c_ref = cs[static_cast<size_t>(i - 1)];
            if (c_ref < 0)
                c_ref = c_obs;
            else if (c_ref != c_obs) {
                res.failure = "c_" + std::to_string(i) + " not constant";
                res.witness_x = x;
                res.witness_y = y;
                return res;
            }
            if (i < D) {
                BigInt& b_ref = bs[static_cast<size_t>(i)];
                if (b_ref < 0)
                    b_ref = b_obs;
                else if (b_ref != b_obs) {
                    res.failure = "b_" + std::to_string(i) + " not constant";
                    res.witness_x = x;
                    res.witness_y = y;
                    return res;
                }
            }
        }
        // b_0 is the degree of x.
        const BigInt deg(g.degree(x));
        if (bs[0] < 0)
            bs[0] = deg;
        else if (bs[0] != deg) {
            res.failure = "graph not regular";
            res.witness_x = x;
            res.witness_y = x;
            return res;
        }
    }

    try {
        res.array = params::IntersectionArray(bs, cs);
    } catch (const params::InconsistentArrayError& e) {
        res.failure = e.what();
    }
    return res;
}

TripleCounts triple_counts(const Graph& g, const DistanceTable& dt, int x, int y, int z) {
    if (!g.adjacent(x, y) || !g.adjacent(x, z))
        throw std::invalid_argument("triple_counts: y and z must be neighbors of x");
    TripleCounts tc;
    tc.D = dt.diameter;
    tc.c.assign(static_cast<size_t>((tc.D + 1) * (tc.D + 1) * (tc.D + 1)), 0);
    for (int w = 0; w < g.size(); ++w) ++tc.at(dt.at(x, w), dt.at(y, w), dt.at(z, w));
    return tc;
}

BigRat quotient_second_eigenvalue(const BigInt& v, const BigInt& k, const BigInt& ell) {
    if (ell <= 0 || ell >= v) throw std::invalid_argument("quotient_second_eigenvalue: need 0 < ell < v");
    // A vertex of the clique has k - (ell - 1) neighbors outside it.
    return BigRat(ell - 1) - BigRat((k - ell + 1) * ell, v - ell);
}

}  // namespace grassmann::graphs
