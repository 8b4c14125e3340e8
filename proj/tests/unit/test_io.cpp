#include "doctest.h"
#include "sigforge/io.hpp"

using namespace sigforge;

TEST_SUITE("cli") {

TEST_CASE("matrix text format") {
    auto f = parse_matrix_text("# trefoil\n2 classical\n-1 1\n0 -1\n");
    CHECK(f.matrix == IntMatrix{{-1, 1}, {0, -1}});
    REQUIRE(f.parity.has_value());
    CHECK(*f.parity == Parity::Classical);
    auto g = parse_matrix_text("2\n0 1\n0 0\n");
    CHECK_FALSE(g.parity.has_value());
    CHECK_THROWS_AS(parse_matrix_text("2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("2\n0 1 3\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("2\n0 x\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("2 sideways\n0 1\n0 0\n"), ParseError);
    auto back = parse_matrix(format_matrix_text(f.matrix, Parity::HighDimSym));
    CHECK(back.matrix == f.matrix);
    CHECK(*back.parity == Parity::HighDimSym);
}

TEST_CASE("matrix JSON format") {
    auto f = parse_matrix(R"({"n": 2, "rows": [[-1, 1], [0, -1]], "parity": "classical"})");
    CHECK(f.matrix == IntMatrix{{-1, 1}, {0, -1}});
    CHECK(parse_matrix(matrix_to_json(f.matrix).dump()).matrix == f.matrix);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 3, "rows": [[1, 0], [0, 1]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": [[1, 0], [0]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix("{not json"), ParseError);
}

TEST_CASE("big integers survive JSON") {
    Integer big("123456789012345678901234567890");
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_to_json(Integer(-7)).is_number_integer());
    CHECK(rational_from_json(rational_to_json(Rational(-3, 7))) == Rational(-3, 7));
}

TEST_CASE("basis files") {
    CHECK(parse_basis("2 4\n1 0 1 0\n0 1 0 1\n") == IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(parse_basis(R"({"rows": [[1, 0]]})") == IntMatrix{{1, 0}});
    CHECK_THROWS_AS(parse_basis("2 4\n1 0 1 0\n"), ParseError);
}

TEST_CASE("step function round trip and CSV") {
    SeifertMatrix k(IntMatrix{{-1, 1}, {0, -1}}, Parity::Classical);
    auto f = signature_step_function(k);
    Json j = step_function_to_json(f);
    auto back = step_function_from_json(j);
    CHECK(back.interval_values == f.interval_values);
    CHECK(back.point_values == f.point_values);
    REQUIRE(back.breakpoints.size() == 1);
    CHECK(back.breakpoints[0].as_rational() == Rational(1, 2));
    Json broken = j;
    broken["point_values"] = Json::array();
    CHECK_THROWS_AS(step_function_from_json(broken), ParseError);

    std::string csv = step_function_csv(f);
    CHECK(csv.rfind("c_lo,c_hi,value,kind\n", 0) == 0);
    CHECK(csv.find("-1,0.5,-2,interval") != std::string::npos);
    CHECK(csv.find("0.5,0.5,-1,point") != std::string::npos);
    CHECK(csv.find("0.5,1,0,interval") != std::string::npos);
}

TEST_CASE("rational lists") {
    CHECK(parse_rational_list("-3/5, -1/10,2/5") ==
          std::vector<Rational>{Rational(-3, 5), Rational(-1, 10), Rational(2, 5)});
    CHECK_THROWS_AS(parse_rational_list("1/0"), ParseError);
}

}
