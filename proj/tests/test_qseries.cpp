#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/qseries.hpp"

#include <random>

using motivic::geometric_factor;
using motivic::LPoly;
using motivic::product;
using motivic::QSeries;

namespace {

LPoly L(long deg, long c = 1) { return LPoly::monomial(deg, c); }

QSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<long> deg(-3, 3);
    std::uniform_int_distribution<long> coeff(-9, 9);
    QSeries s = QSeries::one(order);
    for (int n = 0; n <= order; ++n)
        s.set_coefficient(n, L(deg(rng), coeff(rng)) + L(deg(rng), coeff(rng)));
    return s;
}

}  // namespace

TEST_CASE("one") {
    QSeries s = QSeries::one(2);
    CHECK(s.coefficient(0) == LPoly::one());
    CHECK(s.coefficient(1).is_zero());
    CHECK(s.coefficient(2).is_zero());
    CHECK(QSeries::one(0).order() == 0);
    std::mt19937 rng(3);
    QSeries r = random_series(rng, 5);
    CHECK(QSeries::one(5) * r == r);
}

TEST_CASE("mul_series") {
    // (1+q)(1-q) = 1 - q^2
    QSeries a = QSeries::one(2), b = QSeries::one(2);
    a.set_coefficient(1, LPoly::one());
    b.set_coefficient(1, L(0, -1));
    QSeries c = a * b;
    CHECK(c.coefficient(0) == LPoly::one());
    CHECK(c.coefficient(1).is_zero());
    CHECK(c.coefficient(2) == L(0, -1));

    // (1+Lq)^2 = 1 + 2Lq + L^2 q^2
    QSeries d = QSeries::one(2);
    d.set_coefficient(1, L(1));
    QSeries e = d * d;
    CHECK(e.coefficient(1) == L(1, 2));
    CHECK(e.coefficient(2) == L(2));

    CHECK_THROWS_AS(QSeries::one(2) * QSeries::one(3), std::invalid_argument);
}

TEST_CASE("geometric_factor") {
    QSeries g = geometric_factor(0, 1, 3);
    for (int n = 0; n <= 3; ++n) CHECK(g.coefficient(n) == LPoly::one());

    QSeries h = geometric_factor(1, 2, 5);
    CHECK(h.coefficient(0) == LPoly::one());
    CHECK(h.coefficient(2) == L(1));
    CHECK(h.coefficient(4) == L(2));
    CHECK(h.coefficient(1).is_zero());
    CHECK(h.coefficient(3).is_zero());
    CHECK(h.coefficient(5).is_zero());

    CHECK(geometric_factor(2, 3, 2) == QSeries::one(2));
    CHECK_THROWS_AS(geometric_factor(1, 0, 3), std::invalid_argument);
}

TEST_CASE("product") {
    CHECK(product({{0, 1}}, 3) == geometric_factor(0, 1, 3));

    // three simple poles: coefficient of q is 1 + L + L^2
    QSeries p = product({{0, 1}, {1, 1}, {2, 1}}, 1);
    CHECK(p.coefficient(1) == L(0) + L(1) + L(2));

    // k=1 factors of the plane product, coefficient of q^2 = h_2(1, L, L^2)
    QSeries k1 = product({{0, 1}, {1, 1}, {2, 1}}, 2);
    CHECK(k1.coefficient(2) == L(0) + L(1) + L(2, 2) + L(3) + L(4));

    // all plane factors with k <= 3, coefficient of q^3
    QSeries full = product({{0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 3}}, 3);
    LPoly expected = L(0) + L(1, 2) + L(2, 5) + L(3, 6) + L(4, 5) + L(5, 2) + L(6);
    CHECK(full.coefficient(3) == expected);
    CHECK(full.coefficient(3).eval_at_one() == 22);

    // order independent
    QSeries swapped = product({{2, 3}, {3, 2}, {1, 1}, {4, 3}, {0, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}}, 3);
    CHECK(swapped == full);

    // k > N factors are the constant 1
    CHECK(product({{5, 9}}, 3) == QSeries::one(3));
    CHECK_THROWS_AS(product({{1, -1}}, 3), std::invalid_argument);
}

TEST_CASE("truncation stability") {
    std::vector<std::pair<long, int>> factors = {{0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}};
    QSeries wide = product(factors, 8);
    for (int n = 0; n <= 8; ++n) {
        QSeries narrow = product(factors, n);
        CHECK(narrow.coefficient(n) == wide.coefficient(n));
    }
}

TEST_CASE("mul_series associative and commutative on random inputs") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        QSeries a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}
