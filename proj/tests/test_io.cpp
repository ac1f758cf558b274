#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slicebergman/io.hpp"
#include "slicebergman/verification.hpp"

using namespace slicebergman;

TEST_CASE("quaternion text format") {
    const Quaternion q = parse_quaternion("0.3,0.2,0.1,0.0");
    CHECK(q == Quaternion{0.3, 0.2, 0.1, 0.0});
    CHECK(parse_quaternion("5") == Quaternion{5.0});
    CHECK(parse_quaternion("-1.5e-2,0,0,1") == Quaternion{-0.015, 0, 0, 1});

    CHECK_THROWS_AS(parse_quaternion("1,2"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("a,b,c,d"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("1,2,3,4junk"), ParseError);

    SUBCASE("format/parse round trip") {
        Rng rng(137);
        for (int trial = 0; trial < 50; ++trial) {
            const Quaternion v = rng.ball(10.0);
            CHECK(parse_quaternion(format_quaternion(v)) == v);
        }
    }
}

TEST_CASE("series function JSON") {
    const SeriesFunction f{{Quaternion{1, 0, 0, 0}, Quaternion{0, 2, -1, 0.5}}, 1.5};
    const std::string text = to_json(f);
    CHECK(text.find("\"radius\"") != std::string::npos);
    CHECK(text.find("\"coeffs\"") != std::string::npos);

    const SeriesFunction back = series_function_from_json(text);
    CHECK(back.radius == f.radius);
    REQUIRE(back.coeffs.size() == f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) CHECK(back.coeffs[i] == f.coeffs[i]);
    CHECK(to_json(back) == text);  // serialize-parse-serialize is a fixed point

    CHECK_THROWS_AS(series_function_from_json("{"), ParseError);
    CHECK_THROWS_AS(series_function_from_json(R"({"coeffs": []})"), ParseError);
    CHECK_THROWS_AS(series_function_from_json(R"({"radius": 1, "coeffs": [[1, 2]]})"),
                    ParseError);
}

TEST_CASE("Laguerre coefficient JSON") {
    const std::string text = R"({"alpha": 1.0, "coeffs": [[1,0,0,0],[0,0.5,0,-2]]})";
    const LaguerreCoefficients phi = laguerre_coefficients_from_json(text);
    CHECK(phi.alpha == 1.0);
    REQUIRE(phi.coeffs.size() == 2);
    CHECK(phi.coeffs[1] == Quaternion{0, 0.5, 0, -2});

    const LaguerreCoefficients back = laguerre_coefficients_from_json(to_json(phi));
    CHECK(back.alpha == phi.alpha);
    CHECK(back.coeffs[0] == phi.coeffs[0]);
}

TEST_CASE("quadrature rule JSON") {
    SUBCASE("half-line schema and bit-exact round trip") {
        const HalfLineRule rule = build_halfline(1.5, 16);
        const std::string text = to_json(rule);
        CHECK(text.find("\"alpha\"") != std::string::npos);
        CHECK(text.find("\"nodes\"") != std::string::npos);
        CHECK(text.find("\"weights\"") != std::string::npos);

        const HalfLineRule back = halfline_rule_from_json(text);
        CHECK(back.alpha == rule.alpha);
        REQUIRE(back.nodes.size() == rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            CHECK(back.nodes[i] == rule.nodes[i]);
            CHECK(back.weights[i] == rule.weights[i]);
        }
    }
    SUBCASE("disk rule round trip") {
        const DiskRule rule = build_disk(2.0, 1.5, ImaginaryUnit::canonical_j(), 8, 24);
        const DiskRule back = disk_rule_from_json(to_json(rule));
        CHECK(back.alpha == rule.alpha);
        CHECK(back.R == rule.R);
        CHECK(back.angular_count == rule.angular_count);
        CHECK(back.unit.y() == 1.0);
        for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i)
            CHECK(back.radial_nodes[i] == rule.radial_nodes[i]);
    }
    SUBCASE("mismatched arrays are rejected") {
        CHECK_THROWS_AS(
            halfline_rule_from_json(R"({"alpha": 1, "nodes": [1, 2], "weights": [1]})"),
            ParseError);
    }
    SUBCASE("rebuilding the same rule serializes bit-identically") {
        CHECK(to_json(build_halfline(2.5, 32)) == to_json(build_halfline(2.5, 32)));
        CHECK(to_json(build_disk(1.5, 2.0, ImaginaryUnit::canonical_i(), 16, 32)) ==
              to_json(build_disk(1.5, 2.0, ImaginaryUnit::canonical_i(), 16, 32)));
    }
}

TEST_CASE("read_file") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/file.json"), FileError);
}
