#include <doctest.h>

#include <cmath>
#include <limits>

#include "core/text.hpp"

using namespace swd;

TEST_CASE("format_double round-trips any double exactly") {
    const double values[] = {0.0,       -0.0,       1.0,      -1.0,
                             0.1,       1.0 / 3.0,  M_PI,     1e-300,
                             1e300,     -4.4148130149974616, 256.0,
                             5.4957387179230839};
    for (double v : values) {
        double back = 0.0;
        REQUIRE(parse_double(format_double(v), back));
        CHECK(std::signbit(back) == std::signbit(v));
        CHECK(back == v);
    }
}

TEST_CASE("format_double uses plain decimal notation for typical values") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(256.0) == "256");
    CHECK(format_double(0.625) == "0.625");
}

TEST_CASE("parse_double rejects partial tokens and junk") {
    double out = 0.0;
    CHECK(parse_double("1.5", out));
    CHECK(out == 1.5);
    CHECK(parse_double("+2", out));
    CHECK(out == 2.0);
    CHECK(parse_double("-3e2", out));
    CHECK(out == -300.0);
    CHECK_FALSE(parse_double("", out));
    CHECK_FALSE(parse_double("1.5x", out));
    CHECK_FALSE(parse_double("x1.5", out));
    CHECK_FALSE(parse_double("1.5 ", out));
    CHECK_FALSE(parse_double("1,5", out));
}

TEST_CASE("parse_long rejects fractions and trailing text") {
    long out = 0;
    CHECK(parse_long("42", out));
    CHECK(out == 42);
    CHECK(parse_long("-7", out));
    CHECK(out == -7);
    CHECK_FALSE(parse_long("4.2", out));
    CHECK_FALSE(parse_long("42abc", out));
    CHECK_FALSE(parse_long("", out));
}

TEST_CASE("split keeps empty fields") {
    const auto parts = split("a,,b,", ',');
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == "a");
    CHECK(parts[1] == "");
    CHECK(parts[2] == "b");
    CHECK(parts[3] == "");
}

TEST_CASE("trim strips spaces, tabs, and carriage returns") {
    CHECK(trim("  x  ") == "x");
    CHECK(trim("\tx\r") == "x");
    CHECK(trim("") == "");
    CHECK(trim("   ") == "");
    CHECK(trim("a b") == "a b");
}
