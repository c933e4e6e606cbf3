#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weiercount/hodge.hpp"
#include "weiercount/schubert.hpp"

using namespace weiercount;

TEST_CASE("constant terms for the three numeric configurations") {
    ConstantTermRecord stu = constant_term(2, 2);
    CHECK(stu.k == 2);
    CHECK(stu.normalization == Rational(1, 2));
    CHECK(stu.raw_integral == Rational(-4));
    CHECK(stu.c0 == Rational(-2));

    ConstantTermRecord x18 = constant_term(2, 1);
    CHECK(x18.k == 3);
    CHECK(x18.normalization == Rational(1));
    CHECK(x18.c0 == Rational(3));

    ConstantTermRecord cubic = constant_term(3, 3);
    CHECK(cubic.k == 3);
    CHECK(cubic.c0 == Rational(117));
}

TEST_CASE("the record is consistent with its own factors") {
    for (auto [m, d] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 3}, std::pair{3, 4}}) {
        ConstantTermRecord r = constant_term(m, d);
        CHECK(r.m == m);
        CHECK(r.d == d);
        CHECK(r.k == 2 * m - d);
        CHECK(r.c0 == r.normalization * r.raw_integral);
        // the raw integral is (-1)^{k-1} times the Schubert pairing
        Integer pairing = (hodge_bundle_chern(r.k, m) * fano_class(m, d)).integrate();
        Rational expected(pairing);
        if ((r.k - 1) % 2 != 0) expected = -expected;
        CHECK(r.raw_integral == expected);
    }
}

TEST_CASE("only k = 2 and k = 3 have a calibrated constant term") {
    CHECK_THROWS_AS(constant_term(2, 3), std::invalid_argument);  // k = 1
    CHECK_THROWS_AS(constant_term(3, 2), std::invalid_argument);  // k = 4
}
