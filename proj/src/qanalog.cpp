#include "grassmann/qanalog.hpp"

namespace grassmann::exact {

BigInt bracket(int j, const BigInt& b) {
    if (j < 0) throw std::invalid_argument("bracket: j must be non-negative");
    if (b < 2) throw std::invalid_argument("bracket: base must be >= 2");
    return exact_div(pow_int(b, static_cast<unsigned>(j)) - 1, b - 1);
}

BigInt bracket(int j, int b) { return bracket(j, BigInt(b)); }

BigInt gaussian_binomial(int n, int m, int q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (n < 0) throw std::invalid_argument("gaussian_binomial: n must be >= 0");
    if (m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;

    // Numerator product first, then one exact division; the quotient is an
    // integer but the partial quotients need not be.
    BigInt num = 1, den = 1;
    const BigInt Q(q);
    for (int i = 0; i < m; ++i) {
        num *= pow_int(Q, static_cast<unsigned>(n - i)) - 1;
        den *= pow_int(Q, static_cast<unsigned>(i + 1)) - 1;
    }
    return exact_div(num, den);
}

int chi(int q) {
    if (q < 2) throw std::invalid_argument("chi: q must be >= 2");
    if (q == 2) return 9;
    if (q == 3) return 8;
    if (q <= 6) return 7;
    return 6;
}

}  // namespace grassmann::exact
