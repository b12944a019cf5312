#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace grassmann::gf {

/// GF(q) for prime powers q <= 16, with dense add/mul/inverse tables.
/// Extension fields use one fixed irreducible polynomial per (p,e):
///   GF(4):  x^2 + x + 1      GF(8):  x^3 + x + 1
///   GF(9):  x^2 + 1          GF(16): x^4 + x + 1
/// An element with base-p digits (c_0, c_1, ...) has index sum c_i p^i,
/// so 0 is the additive and 1 the multiplicative identity.
class Field {
public:
    /// Throws std::invalid_argument "not a prime power" / "unsupported order".
    static Field make(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    /// Multiplicative inverse; a must be nonzero.
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        return inv_[a];
    }

private:
    Field() = default;
    size_t idx(uint8_t a, uint8_t b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(q_) + b;
    }

    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<uint8_t> add_, mul_, inv_, neg_;
};

/// Dense row-major matrix of field-element indices.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<uint8_t> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

/// Reduces m to its (unique) reduced row-echelon form; returns the rank.
int rref_in_place(Matrix& m, const Field& f);

/// Rank of m, leaving the input untouched.
int rank(Matrix m, const Field& f);

}  // namespace grassmann::gf
