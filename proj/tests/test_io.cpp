#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "amd/io.hpp"
#include "amd/varieties.hpp"

using namespace amd;

TEST_CASE("ideal files round trip") {
  const std::string text =
      "# twisted cubic\n"
      "ring a b c d mod 101 order degrevlex\n"
      "a*c - b^2\n"
      "\n"
      "a*d - b*c   # trailing comment\n"
      "b*d - c^2\n";
  const GradedIdeal I = parse_ideal(text);
  CHECK(I.nvars() == 4);
  CHECK(I.ring()->prime() == 101);
  CHECK(I.generators().size() == 3);
  const GradedIdeal J = parse_ideal(format_ideal(I));
  CHECK(J.ring()->names() == I.ring()->names());
  CHECK(same_ideal(I, J));

  const Scroll s = scroll_ideal(ScrollSpec::parse("S(1,2)+vertex:0"));
  const GradedIdeal K = parse_ideal(format_ideal(s.ideal));
  CHECK(same_ideal(K, s.ideal));

  const GradedIdeal B = parse_ideal("ring y x0 x1 order block:1\ny^2 - x0*x1\n");
  CHECK(B.ring()->order() == TermOrder::block(1));
  CHECK(B.ring()->prime() == kDefaultPrime);
}

TEST_CASE("ideal file errors name the line") {
  CHECK_THROWS_AS(parse_ideal("a*b\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ring mod 7\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ring a b mod 8\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ring a b mod 2\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ring a b order lex\n"), Error);
  try {
    parse_ideal("ring a b\na*b\na^2 + b\n");
    FAIL("inhomogeneous generator accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_ideal("ring a b\na*q\n");
    FAIL("unknown variable accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(read_ideal_file("/nonexistent/ideal.txt"), Error);
}

TEST_CASE("ideal files on disk and JSON") {
  const std::string path = "io_test_ideal.txt";
  {
    std::ofstream out(path);
    out << "ring x y z\nx*y - z^2\n";
  }
  const GradedIdeal I = read_ideal_file(path);
  std::remove(path.c_str());
  const auto j = nlohmann::json::parse(ideal_to_json(I));
  CHECK(j.at("ring").at("variables").size() == 3);
  CHECK(j.at("generators").size() == 1);
}
