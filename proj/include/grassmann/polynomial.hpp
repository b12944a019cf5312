#pragma once

#include "grassmann/bigint.hpp"

#include <vector>

namespace grassmann::exact {

/// Dense integer polynomial, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(BigInt c);
    /// c0 + c1*x
    static IntPolynomial linear(BigInt c0, BigInt c1);
    /// Monic product prod (x - r) over the given roots.
    static IntPolynomial from_roots(const std::vector<BigInt>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& leading_coefficient() const;
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial scaled(const BigInt& s) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    BigRat evaluate(const BigRat& x) const;

    /// All integer roots with multiplicity, sorted ascending. Candidates are
    /// the divisors of the constant term (after stripping zero roots), found
    /// by trial-division factorization; intended for desk-scale coefficients.
    /// Throws std::domain_error if the constant term resists factorization.
    std::vector<BigInt> integer_roots() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace grassmann::exact
