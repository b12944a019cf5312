#include "grassmann/gf.hpp"

#include <array>

namespace grassmann::gf {

namespace {

constexpr int kMaxOrder = 16;

struct PrimePower {
    int p, e;
};

// Returns (p, e) with q = p^e, or p = 0 if q is not a prime power.
PrimePower factor_prime_power(int q) {
    if (q < 2) return {0, 0};
    int m = q;
    int p = 0;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};  // prime
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return {0, 0};
    return {p, e};
}

// Coefficients of the fixed irreducible modulus, lowest degree first,
// excluding the leading 1.
std::vector<int> modulus_for(int p, int e) {
    if (p == 2 && e == 2) return {1, 1};        // x^2 + x + 1
    if (p == 2 && e == 3) return {1, 1, 0};     // x^3 + x + 1
    if (p == 2 && e == 4) return {1, 1, 0, 0};  // x^4 + x + 1
    if (p == 3 && e == 2) return {1, 0};        // x^2 + 1
    throw std::logic_error("modulus_for: unexpected extension");
}

std::array<int, 16> digits_of(int x, int p, int e) {
    std::array<int, 16> d{};
    for (int i = 0; i < e; ++i) {
        d[static_cast<size_t>(i)] = x % p;
        x /= p;
    }
    return d;
}

int index_of(const std::array<int, 16>& d, int p, int e) {
    int x = 0;
    for (int i = e - 1; i >= 0; --i) x = x * p + d[static_cast<size_t>(i)];
    return x;
}

}  // namespace

Field Field::make(int q) {
    const auto [p, e] = factor_prime_power(q);
    if (p == 0) throw std::invalid_argument("not a prime power");
    if (q > kMaxOrder) throw std::invalid_argument("unsupported order");

    Field f;
    f.q_ = q;
    f.p_ = p;
    f.e_ = e;
    f.add_.assign(static_cast<size_t>(q) * q, 0);
    f.mul_.assign(static_cast<size_t>(q) * q, 0);
    f.neg_.assign(static_cast<size_t>(q), 0);
    f.inv_.assign(static_cast<size_t>(q), 0);

    if (e == 1) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add_[f.idx(uint8_t(a), uint8_t(b))] = static_cast<uint8_t>((a + b) % q);
                f.mul_[f.idx(uint8_t(a), uint8_t(b))] = static_cast<uint8_t>((a * b) % q);
            }
        for (int a = 0; a < q; ++a) f.neg_[static_cast<size_t>(a)] = static_cast<uint8_t>((q - a) % q);
    } else {
        const std::vector<int> mod = modulus_for(p, e);
        for (int a = 0; a < q; ++a) {
            const auto da = digits_of(a, p, e);
            for (int b = 0; b < q; ++b) {
                const auto db = digits_of(b, p, e);
                std::array<int, 16> ds{};
                for (int i = 0; i < e; ++i)
                    ds[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
                f.add_[f.idx(uint8_t(a), uint8_t(b))] = static_cast<uint8_t>(index_of(ds, p, e));

                // Polynomial product reduced by the modulus.
                std::array<int, 32> prod{};
                for (int i = 0; i < e; ++i)
                    for (int j = 0; j < e; ++j)
                        prod[static_cast<size_t>(i + j)] =
                            (prod[static_cast<size_t>(i + j)] +
                             da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p;
                for (int d = 2 * e - 2; d >= e; --d) {
                    const int coef = prod[static_cast<size_t>(d)];
                    if (coef == 0) continue;
                    prod[static_cast<size_t>(d)] = 0;
                    // x^d = x^{d-e} * (-mod)
                    for (int i = 0; i < e; ++i)
                        prod[static_cast<size_t>(d - e + i)] =
                            (prod[static_cast<size_t>(d - e + i)] + coef * (p - mod[static_cast<size_t>(i)])) % p;
                }
                std::array<int, 16> dm{};
                for (int i = 0; i < e; ++i) dm[static_cast<size_t>(i)] = prod[static_cast<size_t>(i)];
                f.mul_[f.idx(uint8_t(a), uint8_t(b))] = static_cast<uint8_t>(index_of(dm, p, e));
            }
            std::array<int, 16> dn{};
            for (int i = 0; i < e; ++i) dn[static_cast<size_t>(i)] = (p - da[static_cast<size_t>(i)]) % p;
            f.neg_[static_cast<size_t>(a)] = static_cast<uint8_t>(index_of(dn, p, e));
        }
    }

    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f.mul_[f.idx(uint8_t(a), uint8_t(b))] == 1) {
                f.inv_[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
                break;
            }
        }
        if (f.inv_[static_cast<size_t>(a)] == 0)
            throw std::logic_error("Field::make: element without inverse");
    }
    return f;
}

int rref_in_place(Matrix& m, const Field& f) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const uint8_t s = f.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), s);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            const uint8_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

int rank(Matrix m, const Field& f) { return rref_in_place(m, f); }

}  // namespace grassmann::gf
