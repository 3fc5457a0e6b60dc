#include "doctest.h"
#include "syz/rational.hpp"

using namespace syz;

TEST_CASE("binomial") {
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(64, 32) == Int("1832624140942590534"));
}

TEST_CASE("floor and ceil") {
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
    CHECK(rat_floor(Rat(6, 2)) == 3);
    CHECK(rat_ceil(Rat(6, 2)) == 3);
}

TEST_CASE("parse_rat") {
    CHECK(parse_rat("7/2") == Rat(7, 2));
    CHECK(parse_rat("-3/6") == Rat(-1, 2));
    CHECK(parse_rat("5") == 5);
    CHECK(parse_rat("-12") == -12);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("rat_str canonical form") {
    CHECK(rat_str(Rat(21, 2)) == "21/2");
    CHECK(rat_str(Rat(4, 2)) == "2");
    CHECK(rat_str(Rat(-5, 3)) == "-5/3");
    // round-trip
    for (const char* s : {"21/2", "-5/3", "0", "17"}) CHECK(rat_str(parse_rat(s)) == s);
}
