#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weiercount/qseries.hpp"

using namespace weiercount;

namespace {

QSeries random_series(std::mt19937& rng, long low, long order) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c;
    for (long n = low; n < order; ++n) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(r);
    }
    return QSeries(low, std::move(c));
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    QSeries s(-1, {Rational(-2), Rational(0), Rational(528)});
    CHECK(s.lowest_exponent() == -1);
    CHECK(s.truncation_order() == 2);
    CHECK(s.coeff(-1) == -2);
    CHECK(s.coeff(1) == 528);
    CHECK_THROWS_AS(s.coeff(2), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(-5), std::out_of_range);
}

TEST_CASE("factories") {
    // zero is the empty representation: no stored coefficients at all
    CHECK(QSeries::zero(4).truncation_order() == 4);
    CHECK(QSeries::zero(4) == QSeries::constant(Rational(0), 4));
    CHECK(QSeries::constant(Rational(7), 4).coeff(0) == 7);
    CHECK(QSeries::constant(Rational(7), 4).coeff(1) == 0);
    QSeries m = QSeries::monomial(Rational(1, 2), -3, 2);
    CHECK(m.coeff(-3) == Rational(1, 2));
    CHECK(m.coeff(1) == 0);
}

TEST_CASE("equality pads below the lowest exponent with zeros") {
    QSeries a(0, {Rational(1), Rational(2)});
    QSeries b(-2, {Rational(0), Rational(0), Rational(1), Rational(2)});
    CHECK(a == b);
    QSeries c(0, {Rational(1), Rational(3)});
    CHECK(a != c);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, -2, 8);
        QSeries b = random_series(rng, 0, 8);
        QSeries c = random_series(rng, -1, 8);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b).truncate(5) == (b * a).truncate(5));
        // product truncations stack, so compare on a common valid range
        CHECK(((a * b) * c).truncate(3) == (a * (b * c)).truncate(3));
        CHECK((a * (b + c)).truncate(5) == (a * b + a * c).truncate(5));
        CHECK(a - a == QSeries::zero(8));
        CHECK(a + (-a) == a - a);
    }
}

TEST_CASE("geometric series inverse") {
    // 1 - q inverts to sum q^n
    std::vector<Rational> c{Rational(1), Rational(-1)};
    for (int i = 0; i < 8; ++i) c.emplace_back(0);
    QSeries g(0, std::move(c));
    QSeries inv = g.inverse();
    for (long n = 0; n < 10; ++n) CHECK(inv.coeff(n) == 1);
}

TEST_CASE("inverse is a two-sided unit on random units") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(rng, 0, 9);
        if (a.coeff(0) == 0) continue;
        QSeries prod = a * a.inverse();
        CHECK(prod.coeff(0) == 1);
        for (long n = 1; n < prod.truncation_order(); ++n) CHECK(prod.coeff(n) == 0);
    }
}

TEST_CASE("inverse rejects non-units") {
    QSeries q(0, {Rational(0), Rational(1), Rational(0)});
    CHECK_THROWS_AS(q.inverse(), std::domain_error);
    QSeries laurent(-1, {Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS_AS(laurent.inverse(), std::domain_error);
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937 rng(99);
    QSeries a = random_series(rng, 0, 7);
    QSeries p = QSeries::constant(Rational(1), 7);
    for (unsigned e = 0; e <= 5; ++e) {
        CHECK(a.pow(e) == p);
        p = p * a;
    }
}

TEST_CASE("shift and truncate") {
    QSeries a(0, {Rational(3), Rational(1)});
    QSeries s = a.shift(-2);
    CHECK(s.lowest_exponent() == -2);
    CHECK(s.coeff(-2) == 3);
    CHECK(s.truncation_order() == 0);
    CHECK(a.truncate(1).truncation_order() == 1);
    CHECK_THROWS_AS(a.truncate(5), std::invalid_argument);
}

TEST_CASE("string rendering") {
    QSeries s(-1, {Rational(-2), Rational(0), Rational(528), Rational(1, 2)});
    CHECK(s.str() == "-2*q^-1 + 528*q + 1/2*q^2 + O(q^3)");
}

TEST_CASE("rational string round trip") {
    CHECK(rational_str(Rational(-31, 48)) == "-31/48");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK(rational_from_str("-31/48") == Rational(-31, 48));
    CHECK(rational_from_str("117") == Rational(117));
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 997);
    for (int i = 0; i < 50; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        CHECK(rational_from_str(rational_str(r)) == r);
    }
}
