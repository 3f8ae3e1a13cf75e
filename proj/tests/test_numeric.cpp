#include "doctest.h"

#include "critex/interval_set.hpp"
#include "critex/quadratic.hpp"
#include "critex/rational.hpp"

using namespace critex;

TEST_CASE("rational basics") {
    CHECK(parse_rat("7/5") == Rat(7, 5));
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(rat_str(Rat(-3, 2)) == "-3/2");
    CHECK(rat_str(Rat(4, 2)) == "2");
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("square extraction") {
    auto [s, sf] = extract_square(Int(20));
    CHECK(s == 2);
    CHECK(sf == 5);
    auto [s2, sf2] = extract_square(Int(577));
    CHECK(s2 == 1);
    CHECK(sf2 == 577);
    auto [s3, sf3] = extract_square(Int(144));
    CHECK(s3 == 12);
    CHECK(sf3 == 1);
    // large: 2^2 * 3^4 * 1000003
    Int n = Int(4) * 81 * 1000003;
    auto [s4, sf4] = extract_square(n);
    CHECK(s4 == 18);
    CHECK(sf4 == 1000003);
}

TEST_CASE("quad_cmp spec examples") {
    Quad sqrt2 = Quad::sqrt_of(2);
    CHECK(quad_cmp(sqrt2, Quad(Rat(7, 5))) > 0);   // sqrt(2) > 7/5 since 2 > 49/25
    CHECK(quad_cmp(Quad(Rat(1, 2)), Quad(Rat(1, 2))) == 0);
    Quad golden = (Quad::sqrt_of(5) + Quad(1)) / Quad(2);
    CHECK(quad_cmp(golden, Quad(Rat(8, 5))) > 0);  // 10*sqrt(5) vs 11: 500 > 121
    Quad s3 = Quad::sqrt_of(3);
    CHECK_THROWS_AS(quad_cmp(sqrt2, s3), incompatible_fields);
    CHECK(Quad::cmp(sqrt2, s3) < 0);  // mixed-field fallback still orders them
}

TEST_CASE("floor_quad spec examples") {
    CHECK(floor_quad(Quad(1) + Quad::sqrt_of(2)) == 2);
    CHECK(floor_quad(Quad(Rat(7, 2))) == 3);
    // (3*sqrt(65)-5)/80 + 1 = 1.2398...
    Quad x = (Quad(3) * Quad::sqrt_of(65) - Quad(5)) / Quad(80) + Quad(1);
    CHECK(floor_quad(x) == 1);
    CHECK(floor_quad(-x) == -2);
    CHECK((-x).ceil() == -1);
}

TEST_CASE("quad arithmetic and normalization") {
    Quad x(Rat(1), Rat(2), Int(20));       // 1 + 2*sqrt(20) = 1 + 4*sqrt(5)
    CHECK(x.surd() == 5);
    CHECK(x.surd_coeff() == Rat(4));
    Quad y(Rat(0), Rat(3), Int(9));        // 3*sqrt(9) = 9
    CHECK(y.is_rational());
    CHECK(y.as_rational() == Rat(9));
    Quad z = Quad::sqrt_of(5) * Quad::sqrt_of(5);
    CHECK(z.is_rational());
    CHECK(z.as_rational() == Rat(5));
    Quad w = (Quad(2) + Quad::sqrt_of(7)) / (Quad(2) + Quad::sqrt_of(7));
    CHECK(w == Quad(1));
}

TEST_CASE("quad parser") {
    CHECK(parse_quad("1/2") == Quad(Rat(1, 2)));
    Quad b6 = (Quad(3) * Quad::sqrt_of(65) - Quad(5)) / Quad(80);
    CHECK(parse_quad("(3*sqrt(65)-5)/80") == b6);
    Quad b4 = (Quad::sqrt_of(5) + Quad(1)) / Quad(4);
    CHECK(parse_quad("(sqrt(5)+1)/4") == b4);
    CHECK(parse_quad("2+(1+sqrt(5))/2") == Quad(2) + (Quad(1) + Quad::sqrt_of(5)) / Quad(2));
    CHECK(parse_quad("sqrt(20)") == Quad(2) * Quad::sqrt_of(5));
    CHECK(parse_quad("sqrt(9/4)") == Quad(Rat(3, 2)));
    CHECK_THROWS_AS(parse_quad("1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quad("sqrt(-1)"), std::invalid_argument);
}

TEST_CASE("quad printing") {
    Quad v = Quad(Rat(5, 2)) + Quad(Rat(1, 2)) * Quad::sqrt_of(5);
    CHECK(v.str() == "5/2 + 1/2*sqrt(5)");
    CHECK(v.decimal(6) == "3.618033");
    CHECK(Quad(Rat(3, 2)).str() == "3/2");
    Quad neg = Quad(1) - Quad::sqrt_of(2);
    CHECK(neg.decimal(4) == "-0.4142");
}

TEST_CASE("interval subtract closure spec examples") {
    // (1,4) minus closure of (2,3) -> (1,2) ∪ (3,4)
    IntervalSet a = IntervalSet::full(Quad(1), Quad(4));
    a.subtract_closure(Quad(2), Quad(3));
    REQUIRE(a.intervals().size() == 2);
    CHECK(a.intervals()[0].lo == Quad(1));
    CHECK(a.intervals()[0].hi == Quad(2));
    CHECK(a.intervals()[1].lo == Quad(3));
    CHECK(a.intervals()[1].hi == Quad(4));
    CHECK(a.str() == "(1,2)∪(3,4)");
    CHECK_FALSE(a.contains(Quad(2)));
    CHECK(a.contains(Quad(Rat(3, 2))));

    // (1,4) minus closure of (3,inf)∩ambient -> (1,3)
    IntervalSet b = IntervalSet::full(Quad(1), Quad(4));
    b.subtract_closure(Quad(3), Quad(100));
    REQUIRE(b.intervals().size() == 1);
    CHECK(b.intervals()[0].hi == Quad(3));

    // identity
    IntervalSet c = IntervalSet::full(Quad(1), Quad(14));
    IntervalSet none(Quad(1), Quad(14));
    c.subtract_closure(none);
    CHECK(c.str() == "(1,14)");
}

TEST_CASE("interval add keeps removed points removed") {
    IntervalSet a(Quad(0), Quad(10));
    a.add(Quad(1), Quad(2));
    a.add(Quad(2), Quad(3));
    CHECK(a.intervals().size() == 2);  // 2 stays excluded
    a.add(Quad(Rat(3, 2)), Quad(Rat(5, 2)));
    CHECK(a.intervals().size() == 1);  // now the union is open
    CHECK(a.contains(Quad(2)));
}
