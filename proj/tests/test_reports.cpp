#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "freefactor/reports.hpp"

using namespace freefactor;

TEST_CASE("float formatting is 12 significant digits") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(std::sqrt(3.0)) == "1.73205080757");
    CHECK(format_double(1234567.25) == "1234567.25");
}

TEST_CASE("csv layout") {
    CsvSeries s;
    s.headers = {"a", "b"};
    s.rows = {{"1", "2"}, {"3", "4"}};
    CHECK(s.to_string() == "a,b\n1,2\n3,4\n");
}

TEST_CASE("figure 1 series") {
    CsvSeries s = figure1_series(5);
    REQUIRE(s.rows.size() == 5);
    CHECK(s.headers == std::vector<std::string>{"lambda", "ef"});
    CHECK(s.rows.front()[0] == "0.5");
    CHECK(s.rows.front()[1] == format_double(std::sqrt(3.0)));
    CHECK(s.rows.back()[0] == "0.99");
    // deterministic: two runs give identical bytes
    CHECK(figure1_series(5).to_string() == s.to_string());
    // monotone nonincreasing
    double prev = 1e300;
    for (const auto& row : s.rows) {
        double v = std::stod(row[1]);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
    CHECK_THROWS_AS(figure1_series(1), ParameterOutOfRange);
}

TEST_CASE("figure 2 boundary and grid") {
    auto b = figure2_boundary(Rational(1, 2));
    REQUIRE(b.has_value());
    // ef(1/2) = sqrt(3); boundary mu solves ef(mu) = 1/sqrt(3)
    double mu = to_double(*b);
    Rational lo(*b - Rational(1, 100000)), hi(*b + Rational(1, 100000));
    CHECK(region_membership(Rational(1, 2), lo));
    CHECK(!region_membership(Rational(1, 2), hi));
    CHECK(mu > 0.5);
    CHECK(mu < 0.99);
    // near the right edge every mu keeps the product below 1: no crossing
    CHECK(!figure2_boundary(Rational(99, 100)).has_value());

    CsvSeries s = figure2_series(6);
    REQUIRE(s.rows.size() == 36);
    // symmetric membership
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(s.rows[i * 6 + j][2] == s.rows[j * 6 + i][2]);
    CHECK(s.rows[0][2] == "1");        // (1/2, 1/2)
    CHECK(s.rows[35][2] == "0");       // (0.99, 0.99)
    CHECK(figure2_series(6).to_string() == s.to_string());
}

TEST_CASE("worker count respects the environment cap") {
    setenv("FREEFACTOR_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    unsetenv("FREEFACTOR_THREADS");
    CHECK(worker_count() >= 1);
}
