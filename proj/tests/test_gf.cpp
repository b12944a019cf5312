#include "doctest.h"

#include "grassmann/gf.hpp"

using namespace grassmann::gf;

TEST_CASE("make_field: prime arithmetic") {
    const Field f5 = Field::make(5);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f5.add(4, 3) == 2);
    CHECK(f5.inv(3) == 2);
    CHECK(f5.neg(2) == 3);
}

TEST_CASE("make_field: GF(4) with modulus x^2+x+1") {
    const Field f4 = Field::make(4);
    // x has index 2; x*x = x+1 which has index 3.
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.mul(2, 3) == 1);  // x(x+1) = x^2+x = 1
    CHECK(f4.add(2, 3) == 1);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
}

TEST_CASE("make_field: rejects non prime powers and big orders") {
    CHECK_THROWS_WITH_AS(Field::make(6), "not a prime power", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Field::make(12), "not a prime power", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Field::make(32), "unsupported order", std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for all supported orders") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const Field f = Field::make(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(uint8_t(a), 0) == a);
            CHECK(f.mul(uint8_t(a), 1) == a);
            CHECK(f.add(uint8_t(a), f.neg(uint8_t(a))) == 0);
            if (a) CHECK(f.mul(uint8_t(a), f.inv(uint8_t(a))) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(uint8_t(a), uint8_t(b)) == f.add(uint8_t(b), uint8_t(a)));
                CHECK(f.mul(uint8_t(a), uint8_t(b)) == f.mul(uint8_t(b), uint8_t(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                          f.add(uint8_t(a), f.add(uint8_t(b), uint8_t(c))));
                    CHECK(f.mul(f.mul(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                          f.mul(uint8_t(a), f.mul(uint8_t(b), uint8_t(c))));
                    CHECK(f.mul(uint8_t(a), f.add(uint8_t(b), uint8_t(c))) ==
                          f.add(f.mul(uint8_t(a), uint8_t(b)), f.mul(uint8_t(a), uint8_t(c))));
                }
            }
        }
    }
}

TEST_CASE("rref: identity, zero and the hand-worked GF(2) case") {
    const Field f2 = Field::make(2);

    Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    Matrix m = id;
    CHECK(rref_in_place(m, f2) == 3);
    CHECK(m == id);

    Matrix z(2, 4);
    Matrix zc = z;
    CHECK(rref_in_place(zc, f2) == 0);
    CHECK(zc == z);

    // rows {1100, 0110} -> {1010, 0110}
    Matrix g(2, 4);
    g.at(0, 0) = 1;
    g.at(0, 1) = 1;
    g.at(1, 1) = 1;
    g.at(1, 2) = 1;
    CHECK(rref_in_place(g, f2) == 2);
    Matrix want(2, 4);
    want.at(0, 0) = 1;
    want.at(0, 2) = 1;
    want.at(1, 1) = 1;
    want.at(1, 2) = 1;
    CHECK(g == want);
}

TEST_CASE("rref: idempotent and row-space preserving over GF(3)") {
    const Field f3 = Field::make(3);
    Matrix m(3, 4);
    // Deterministic pseudo-random fill.
    uint32_t state = 7;
    for (auto& x : m.data) {
        state = state * 1103515245u + 12345u;
        x = static_cast<uint8_t>((state >> 16) % 3);
    }
    Matrix r = m;
    const int rank1 = rref_in_place(r, f3);
    Matrix rr = r;
    CHECK(rref_in_place(rr, f3) == rank1);
    CHECK(rr == r);

    // Membership: every original row reduces to zero against the RREF rows.
    for (int row = 0; row < m.rows; ++row) {
        Matrix aug(r.rows + 1, m.cols);
        aug.data.assign(r.data.begin(), r.data.end());
        aug.data.insert(aug.data.end(), m.data.begin() + static_cast<long>(row) * m.cols,
                        m.data.begin() + static_cast<long>(row + 1) * m.cols);
        CHECK(rank(aug, f3) == rank1);
    }
}
