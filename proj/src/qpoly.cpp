#include "grassmann/qpoly.hpp"

namespace grassmann::qpoly {

using exact::bracket;
using exact::pow_int;
using params::array_from_classical;
using params::IntersectionArray;
using params::p_table;

TripleConstants triple_constants(const ClassicalParams& cp, int i) {
    if (i < 1 || i > cp.diameter - 1)
        throw std::invalid_argument("triple_constants: need 1 <= i <= D-1");
    const IntersectionArray ia = array_from_classical(cp);
    const params::PTable pt = p_table(ia);
    const BigInt b(cp.b);

    TripleConstants tc;
    tc.i = i;
    tc.sigma = bracket(i, b);
    tc.b1 = ia.b_at(1);
    tc.rho1 = BigRat(-b * bracket(i - 1, b));
    tc.rho2 = tc.rho1 + BigRat(b, tc.b1) * BigRat(ia.c_at(i) - tc.sigma);
    tc.p1_spear = pt.at(1, i, i + 1);
    return tc;
}

BigInt triple_122_from_111(const ClassicalParams& cp, PairRelation rel, const BigInt& t111) {
    const IntersectionArray ia = array_from_classical(cp);
    const BigInt b1 = ia.b_at(1);
    const BigInt a1 = ia.a_at(1);
    switch (rel) {
        case PairRelation::same:
            return b1;
        case PairRelation::adjacent:
            return b1 - a1 + 1 + t111;
        case PairRelation::distance2:
            return b1 - a1 - 1 + t111;
    }
    throw std::logic_error("triple_122_from_111: bad relation");
}

BigRat triple_spear(const TripleConstants& tc, int j, const BigInt& t122) {
    if (j != 1 && j != 2) throw std::invalid_argument("triple_spear: j must be 1 or 2");
    const BigRat rho = j == 1 ? tc.rho1 : tc.rho2;
    return BigRat(tc.p1_spear) * (BigRat(tc.sigma, tc.b1) * BigRat(t122) + rho);
}

BigRat triple_spear(const ClassicalParams& cp, int i, int j, const BigInt& t122) {
    return triple_spear(triple_constants(cp, i), j, t122);
}

int grassmann_n_of(const ClassicalParams& cp) {
    if (cp.alpha != cp.b) return -1;
    const BigInt target = cp.beta + 1;
    for (int m = 1;; ++m) {
        const BigInt br = bracket(m, cp.b);
        if (br == target) {
            const int n = m + cp.diameter - 1;
            return n >= 2 * cp.diameter ? n : -1;
        }
        if (br > target) return -1;
    }
}

BigRat triple_ddd_gamma(const ClassicalParams& cp) {
    const int n = grassmann_n_of(cp);
    if (n < 0) throw std::invalid_argument("triple_ddd_from_111: parameters are not Grassmann-shaped");
    const int D = cp.diameter;
    const int q = cp.b;
    const BigInt num = pow_int(BigInt(q), static_cast<unsigned>(D * D - 4)) *
                       exact::gaussian_binomial(n - D - 1, D - 1, q);
    return BigRat(num, bracket(n - D - 1, q));
}

TripleDddConstants triple_ddd_constants(const ClassicalParams& cp) {
    const int n = grassmann_n_of(cp);
    if (n < 0) throw std::invalid_argument("triple_ddd_from_111: parameters are not Grassmann-shaped");
    if (cp.diameter < 3) throw std::invalid_argument("triple_ddd_from_111: need D >= 3");
    const int D = cp.diameter;
    const BigInt q(cp.b);
    TripleDddConstants c;
    c.gamma = triple_ddd_gamma(cp);
    c.adjacent_offset = q * q * q * bracket(n - D - 1, q) * (bracket(D - 1, q) + 1) -
                        q * bracket(n - D, q) * bracket(D, q) + 2;
    c.distance2_offset = q * q * (pow_int(q, static_cast<unsigned>(n - D - 1)) - 1) -
                         q * (pow_int(q, static_cast<unsigned>(D - 1)) + 1);
    return c;
}

BigRat triple_ddd_from_111(const ClassicalParams& cp, PairRelation rel, const BigInt& t111) {
    const TripleDddConstants c = triple_ddd_constants(cp);
    switch (rel) {
        case PairRelation::adjacent:
            return c.gamma * BigRat(t111 + c.adjacent_offset);
        case PairRelation::distance2:
            return c.gamma * BigRat(t111 + c.distance2_offset);
        default:
            throw std::invalid_argument("triple_ddd_from_111: relation must be adjacent or distance2");
    }
}

CongruenceObstruction congruence_obstruction(const ClassicalParams& cp) {
    const int D = cp.diameter;
    if (D < 3) throw std::invalid_argument("congruence_obstruction: need D >= 3");
    if (grassmann_n_of(cp) != 2 * D)
        throw std::invalid_argument("congruence_obstruction: need the parameters of J_q(2D,D)");
    const BigInt q(cp.b);
    CongruenceObstruction out;
    out.modulus = bracket(D - 1, q);
    out.residue_adjacent = ((q - 2) % out.modulus + out.modulus) % out.modulus;
    out.residue_dist2 = (2 * q) % out.modulus;
    out.mu_valency_forced = D >= 4;
    return out;
}

TerwilligerReport terwilliger_poly(const ClassicalParams& cp, int i) {
    const int D = cp.diameter;
    if (D < 3) throw std::invalid_argument("terwilliger_poly: need D >= 3");
    if (i < 2 || i > D - 1) throw std::invalid_argument("terwilliger_poly: need 2 <= i <= D-1");
    const BigInt b(cp.b);

    TerwilligerReport rep;
    rep.i = i;
    rep.roots = {cp.beta - cp.alpha - 1, BigInt(-1), -b - 1,
                 cp.alpha * b * bracket(D - 1, b) - 1};
    std::sort(rep.roots.begin(), rep.roots.end());

    const BigInt lead = -(pow_int(b, static_cast<unsigned>(i)) - 1) *
                        (pow_int(b, static_cast<unsigned>(i - 1)) - 1);
    rep.poly = IntPolynomial::from_roots({rep.roots.begin(), rep.roots.end()}).scaled(lead);
    rep.leading_negative = rep.poly.leading_coefficient() < 0;
    if (!rep.leading_negative)
        throw std::logic_error("terwilliger_poly: leading coefficient not negative");
    return rep;
}

LocalBound local_eigenvalue_window(const ClassicalParams& cp) {
    const int D = cp.diameter;
    if (D < 3) throw std::invalid_argument("local_eigenvalue_window: need D >= 3");
    const int n = grassmann_n_of(cp);
    if (n != 2 * D)
        throw std::invalid_argument("local_eigenvalue_window: need the parameters of J_q(2D,D)");
    const int q = cp.b;

    const IntersectionArray ia = array_from_classical(cp);
    const params::Spectrum sp = params::classical_spectrum(n, D, q);

    LocalBound lb;
    const BigInt theta1 = sp.pairs[1].first;
    lb.theta_hat_1 = BigRat(-1) - BigRat(ia.b_at(1), theta1 + 1);
    lb.theta_hat_d = BigInt(q) * q * bracket(D - 1, q) - 1;
    lb.min_mult_theta_hat_1 = ia.k() - sp.pairs[1].second;
    return lb;
}

ForcedLocalSpectrum forced_local_spectrum(const ClassicalParams& cp) {
    const int D = cp.diameter;
    if (D < 3) throw std::invalid_argument("forced_local_spectrum: need D >= 3");
    if (grassmann_n_of(cp) != 2 * D)
        throw std::invalid_argument("forced_local_spectrum: need the parameters of J_q(2D,D)");
    const int q = cp.b;
    const BigInt r = bracket(D, q);

    const BigRat th1 = BigRat(-q - 1);                // theta_hat_1
    const BigRat thd = BigRat(BigInt(q) * (r - 1) - 1);  // theta_hat_D

    ForcedLocalSpectrum out;
    out.spectrum = params::clique_ext_grid_spectrum(q, r);

    // Combination (second moment) - theta_hat_D * (sum) - (theta_hat_D - 1) *
    // (first moment) cancels e_{-1} and e_D; the e_1 coefficient must be
    // positive, which together with e_1 >= 0 and the positive eta terms
    // forces s = e_1 = 0.
    out.elimination_coeff_e1 = (th1 + 1) * (th1 - thd);
    if (out.elimination_coeff_e1 <= 0)
        throw std::logic_error("forced_local_spectrum: elimination coefficient not positive");
    out.e1 = 0;

    // Remaining system: e_D + e_{-1} = -e_1, theta_hat_D e_D - e_{-1} = theta_hat_1 e_1.
    const BigRat rhs0 = BigRat(-out.e1);
    const BigRat rhs1 = th1 * BigRat(out.e1);
    const BigRat det = thd * BigRat(-1) - BigRat(1);  // det [[1,1],[thd,-1]]
    if (det == 0) throw std::logic_error("forced_local_spectrum: singular trace system");
    const BigRat ed = (rhs0 * BigRat(-1) - rhs1) / det;
    const BigRat em1 = (rhs1 - thd * rhs0) / det;
    out.e_d = exact::to_integer(ed);
    out.e_minus1 = exact::to_integer(em1);
    if (out.e_d != 0 || out.e_minus1 != 0)
        throw std::logic_error("forced_local_spectrum: nonzero excess multiplicities");
    return out;
}

}  // namespace grassmann::qpoly
