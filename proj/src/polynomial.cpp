#include "grassmann/polynomial.hpp"

#include <algorithm>

namespace grassmann::exact {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    return IntPolynomial(std::vector<BigInt>{std::move(c)});
}

IntPolynomial IntPolynomial::linear(BigInt c0, BigInt c1) {
    return IntPolynomial(std::vector<BigInt>{std::move(c0), std::move(c1)});
}

IntPolynomial IntPolynomial::from_roots(const std::vector<BigInt>& roots) {
    IntPolynomial p = constant(1);
    for (const auto& r : roots) p = p * linear(-r, 1);
    return p;
}

const BigInt& IntPolynomial::leading_coefficient() const {
    static const BigInt zero = 0;
    return coeffs_.empty() ? zero : coeffs_.back();
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + o.scaled(-1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return IntPolynomial();
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const BigInt& s) const {
    std::vector<BigInt> r = coeffs_;
    for (auto& c : r) c *= s;
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat IntPolynomial::evaluate(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

namespace {

// Divisors of |n| by trial-division factorization. Desk scale only.
std::vector<BigInt> divisors_of(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> factors;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (p > 10'000'000) {
            throw std::domain_error("integer_roots: constant term too large to factor");
        }
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (m > 1) factors.emplace_back(m, 1);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : factors) {
        const size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<BigInt> IntPolynomial::integer_roots() const {
    if (is_zero()) throw std::domain_error("integer_roots: zero polynomial");
    std::vector<BigInt> roots;
    IntPolynomial p = *this;

    // Strip roots at zero.
    size_t z = 0;
    while (z < p.coeffs_.size() && p.coeffs_[z] == 0) ++z;
    for (size_t i = 0; i < z; ++i) roots.push_back(0);
    if (z) p = IntPolynomial(std::vector<BigInt>(p.coeffs_.begin() + static_cast<long>(z), p.coeffs_.end()));

    while (p.degree() >= 1) {
        std::vector<BigInt> candidates = divisors_of(p.coeff(0));
        bool found = false;
        BigInt root;
        for (const auto& d : candidates) {
            if (p.evaluate(d) == 0) {
                root = d;
                found = true;
                break;
            }
            const BigInt neg = -d;
            if (p.evaluate(neg) == 0) {
                root = neg;
                found = true;
                break;
            }
        }
        if (!found) break;
        roots.push_back(root);
        // Synthetic division by (x - root); remainder is zero by construction.
        std::vector<BigInt> q(static_cast<size_t>(p.degree()), BigInt(0));
        BigInt carry = 0;
        for (int i = p.degree(); i >= 1; --i) {
            carry = carry * root + p.coeff(i);
            q[static_cast<size_t>(i - 1)] = carry;
        }
        p = IntPolynomial(std::move(q));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace grassmann::exact
