#include "grassmann/params.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace grassmann::params {

using exact::bracket;
using exact::divides;
using exact::exact_div;
using exact::gaussian_binomial;
using exact::pow_int;

ClassicalParams::ClassicalParams(int D_, int b_, BigInt alpha_, BigInt beta_)
    : diameter(D_), b(b_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (diameter < 2) throw std::invalid_argument("ClassicalParams: D must be >= 2");
    if (b < 2) throw std::invalid_argument("ClassicalParams: b must be >= 2");
}

IntersectionArray::IntersectionArray(std::vector<BigInt> b_, std::vector<BigInt> c_)
    : b(std::move(b_)), c(std::move(c_)) {
    if (b.empty() || b.size() != c.size())
        throw InconsistentArrayError("intersection array: need b_0..b_{D-1} and c_1..c_D");
    if (c[0] != 1) throw InconsistentArrayError("intersection array: c_1 must be 1");
    for (const auto& x : b)
        if (x <= 0) throw InconsistentArrayError("intersection array: b_i must be positive");
    for (const auto& x : c)
        if (x <= 0) throw InconsistentArrayError("intersection array: c_i must be positive");
    const int D = diameter();
    BigInt num = 1, den = 1;
    for (int i = 1; i <= D; ++i) {
        if (a_at(i) < 0) throw InconsistentArrayError("intersection array: a_i negative");
        num *= b[static_cast<size_t>(i - 1)];
        den *= c[static_cast<size_t>(i - 1)];
        if (!divides(den, num))
            throw InconsistentArrayError("intersection array: k_i not an integer");
    }
}

BigInt IntersectionArray::b_at(int i) const {
    if (i < 0 || i > diameter()) throw std::out_of_range("b_at");
    if (i == diameter()) return 0;
    return b[static_cast<size_t>(i)];
}

BigInt IntersectionArray::c_at(int i) const {
    if (i < 0 || i > diameter()) throw std::out_of_range("c_at");
    if (i == 0) return 0;
    return c[static_cast<size_t>(i - 1)];
}

BigInt IntersectionArray::a_at(int i) const { return k() - b_at(i) - c_at(i); }

BigInt IntersectionArray::k_at(int i) const {
    if (i < 0 || i > diameter()) throw std::out_of_range("k_at");
    BigInt num = 1, den = 1;
    for (int j = 1; j <= i; ++j) {
        num *= b[static_cast<size_t>(j - 1)];
        den *= c[static_cast<size_t>(j - 1)];
    }
    return exact_div(num, den);
}

BigInt IntersectionArray::vertex_count() const {
    BigInt v = 0;
    for (int i = 0; i <= diameter(); ++i) v += k_at(i);
    return v;
}

Spectrum::Spectrum(std::vector<std::pair<BigInt, BigInt>> p) : pairs(std::move(p)) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t i = 0; i + 1 < pairs.size(); ++i)
        if (pairs[i].first == pairs[i + 1].first)
            throw std::invalid_argument("Spectrum: eigenvalues must be distinct");
    for (const auto& [theta, m] : pairs)
        if (m <= 0) throw std::invalid_argument("Spectrum: multiplicities must be positive");
    if (pairs.empty()) throw std::invalid_argument("Spectrum: empty");
}

BigInt Spectrum::vertex_count() const {
    BigInt v = 0;
    for (const auto& [theta, m] : pairs) v += m;
    return v;
}

std::string Spectrum::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ", ";
        os << "(" << pairs[i].first << "," << pairs[i].second << ")";
    }
    os << "}";
    return os.str();
}

const BigInt& PTable::at(int h, int i, int j) const {
    return t[static_cast<size_t>((h * (D + 1) + i) * (D + 1) + j)];
}

BigInt& PTable::at(int h, int i, int j) {
    return t[static_cast<size_t>((h * (D + 1) + i) * (D + 1) + j)];
}

IntersectionArray array_from_classical(const ClassicalParams& cp) {
    const int D = cp.diameter;
    const BigInt b(cp.b);
    const BigInt brD = bracket(D, b);
    std::vector<BigInt> bs, cs;
    for (int i = 0; i < D; ++i) {
        const BigInt bri = bracket(i, b);
        bs.push_back((brD - bri) * (cp.beta - cp.alpha * bri));
    }
    for (int i = 1; i <= D; ++i)
        cs.push_back(bracket(i, b) * (1 + cp.alpha * bracket(i - 1, b)));
    for (const auto& x : bs)
        if (x <= 0) throw InfeasibleParamsError("classical parameters give b_i <= 0");
    for (const auto& x : cs)
        if (x <= 0) throw InfeasibleParamsError("classical parameters give c_i <= 0");
    return IntersectionArray(std::move(bs), std::move(cs));
}

ClassicalParams grassmann_classical(int n, int D, int q) {
    if (D < 2) throw std::invalid_argument("grassmann_classical: D must be >= 2");
    if (q < 2) throw std::invalid_argument("grassmann_classical: q must be >= 2");
    if (n < 2 * D) throw std::invalid_argument("grassmann_classical: n must be >= 2D");
    return ClassicalParams(D, q, BigInt(q), bracket(n - D + 1, q) - 1);
}

PTable p_table(const IntersectionArray& ia) {
    const int D = ia.diameter();
    PTable pt;
    pt.D = D;
    pt.t.assign(static_cast<size_t>((D + 1) * (D + 1) * (D + 1)), BigInt(0));

    for (int h = 0; h <= D; ++h) {
        pt.at(h, 0, h) = 1;  // p^h_{0,j} = delta_{hj}
        // i = 1 row straight from the array.
        if (h >= 1) pt.at(h, 1, h - 1) = ia.c_at(h);
        pt.at(h, 1, h) = ia.a_at(h);
        if (h + 1 <= D) pt.at(h, 1, h + 1) = ia.b_at(h);
    }

    for (int i = 1; i < D; ++i) {
        const BigInt ci1 = ia.c_at(i + 1);
        for (int h = 0; h <= D; ++h) {
            for (int j = 0; j <= D; ++j) {
                BigInt rhs = (ia.a_at(j) - ia.a_at(i)) * pt.at(h, i, j);
                if (j >= 1) rhs += ia.b_at(j - 1) * pt.at(h, i, j - 1);
                if (j < D) rhs += ia.c_at(j + 1) * pt.at(h, i, j + 1);
                if (i >= 1) rhs -= ia.b_at(i - 1) * pt.at(h, i - 1, j);
                if (rhs < 0 || !divides(ci1, rhs))
                    throw InconsistentArrayError("inconsistent array: p^h_{ij} negative or fractional");
                pt.at(h, i + 1, j) = rhs / ci1;
            }
        }
    }

    // Structural invariants: symmetry, row sums, triangle inequality.
    for (int h = 0; h <= D; ++h) {
        for (int i = 0; i <= D; ++i) {
            BigInt row = 0;
            for (int j = 0; j <= D; ++j) {
                if (pt.at(h, i, j) != pt.at(h, j, i))
                    throw InconsistentArrayError("inconsistent array: p^h_{ij} != p^h_{ji}");
                if ((i + j < h || std::abs(i - j) > h) && pt.at(h, i, j) != 0)
                    throw InconsistentArrayError("inconsistent array: triangle inequality violated");
                row += pt.at(h, i, j);
            }
            if (row != ia.k_at(i))
                throw InconsistentArrayError("inconsistent array: row sum != k_i");
        }
    }
    return pt;
}

Spectrum classical_spectrum(int n, int D, int q) {
    if (D < 2 || n < 2 * D || q < 2)
        throw std::invalid_argument("classical_spectrum: need n >= 2D >= 4, q >= 2");
    std::vector<std::pair<BigInt, BigInt>> pairs;
    const BigInt Q(q);
    for (int j = 0; j <= D; ++j) {
        BigInt theta =
            pow_int(Q, static_cast<unsigned>(j + 1)) * bracket(n - D - j, q) * bracket(D - j, q) -
            bracket(j, q);
        BigInt m = (j == 0) ? BigInt(1)
                            : gaussian_binomial(n, j, q) - gaussian_binomial(n, j - 1, q);
        pairs.emplace_back(std::move(theta), std::move(m));
    }
    return Spectrum(std::move(pairs));
}

Spectrum grid_spectrum(int s) {
    if (s < 2) throw std::invalid_argument("grid_spectrum: s must be >= 2");
    const BigInt S(s);
    return Spectrum({{2 * (S - 1), 1}, {S - 2, 2 * (S - 1)}, {-2, (S - 1) * (S - 1)}});
}

Spectrum clique_ext_grid_spectrum(int q, const BigInt& r) {
    if (q < 1) throw std::invalid_argument("clique_ext_grid_spectrum: q must be >= 1");
    if (r < 2) throw std::invalid_argument("clique_ext_grid_spectrum: r must be >= 2");
    const BigInt Q(q);
    std::vector<std::pair<BigInt, BigInt>> pairs;
    pairs.emplace_back(Q * (2 * r - 1) - 1, 1);
    pairs.emplace_back(Q * (r - 1) - 1, 2 * (r - 1));
    if (q > 1) pairs.emplace_back(-1, (Q - 1) * r * r);
    pairs.emplace_back(-Q - 1, (r - 1) * (r - 1));
    return Spectrum(std::move(pairs));
}

bool check_moments(const Spectrum& sp, const BigInt& v, const BigInt& k) {
    BigInt m0 = 0, m1 = 0, m2 = 0;
    for (const auto& [theta, m] : sp.pairs) {
        m0 += m;
        m1 += m * theta;
        m2 += m * theta * theta;
    }
    return m0 == v && m1 == 0 && m2 == v * k;
}

}  // namespace grassmann::params
