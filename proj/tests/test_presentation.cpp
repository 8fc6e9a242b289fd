#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ncalg/presentation.hpp"

using namespace ncalg;

namespace {

Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

bool same_presentation(const Presentation& a, const Presentation& b) {
  return a.name == b.name && a.alphabet == b.alphabet && a.order_kind == b.order_kind &&
         a.relators == b.relators;
}

}  // namespace

TEST_CASE("the quartic relator parses term by term") {
  Alphabet ab({{"x", 1}, {"y", 1}});
  NcPoly f = parse_poly("x^3*y - 3*x^2*y*x + 3*x*y*x^2 - y*x^3", ab);
  CHECK(f.term_count() == 4);
  CHECK(f.coeff(w({0, 0, 0, 1})) == 1);
  CHECK(f.coeff(w({0, 0, 1, 0})) == -3);
  CHECK(f.coeff(w({0, 1, 0, 0})) == 3);
  CHECK(f.coeff(w({1, 0, 0, 0})) == -1);
  CHECK(f == builtin_U().relators[0]);
}

TEST_CASE("polynomial grammar corners") {
  Alphabet ab({{"x", 1}, {"y", 1}});
  CHECK(parse_poly("5", ab).coeff(w({})) == 5);
  CHECK(parse_poly("1/2*x", ab).coeff(w({0})) == Rational(1, 2));
  CHECK(parse_poly("x^0", ab).coeff(w({})) == 1);
  CHECK(parse_poly("-x + x", ab).is_zero());
  CHECK(parse_poly("  x \t*  y ", ab).coeff(w({0, 1})) == 1);
  CHECK(parse_poly("2*x*y^2", ab).coeff(w({0, 1, 1})) == 2);

  CHECK_THROWS_AS(parse_poly("x + ", ab), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x", ab), ParseError);
  CHECK_THROWS_AS(parse_poly("3 x", ab), ParseError);  // missing '*'
  CHECK_THROWS_AS(parse_poly("x ^ y", ab), ParseError);
  CHECK_THROWS_AS(parse_poly("z", ab), ParseError);
  CHECK_THROWS_AS(parse_poly("x @ y", ab), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_presentation("generators: x:1 y:1\nrelator: x*q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 12);
    CHECK(std::string(e.what()).find("unknown generator 'q'") != std::string::npos);
  }
}

TEST_CASE("generators line is required and must have entries") {
  CHECK_THROWS_AS(parse_presentation("name: empty\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators:\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x:0\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: 2x\n"), ParseError);
}

TEST_CASE("directive ordering and duplicates") {
  CHECK_THROWS_AS(parse_presentation("generators: x\ngenerators: y\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("order: deglex\ngenerators: x\n"), ParseError);
  CHECK_THROWS_AS(
      parse_presentation("generators: x\nrelator: x\norder: deglex\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x\nfoo: bar\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x y\norder: deglex y\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x y\norder: deglex y < z\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x\norder: weird x\n"), ParseError);
}

TEST_CASE("order chain sets the precedence") {
  auto r = parse_presentation("generators: x:1 y:1\norder: deglex y < x\n");
  CHECK(r.presentation.alphabet.name(0) == "y");
  CHECK(r.presentation.alphabet.name(1) == "x");
  CHECK(r.presentation.order_kind == OrderKind::deglex);
}

TEST_CASE("equals sugar means difference") {
  Alphabet ab({{"x", 1}, {"y", 1}});
  auto r = parse_presentation(
      "generators: x:1 y:1\n"
      "relator: y*x^3 = x^3*y - 3*x^2*y*x + 3*x*y*x^2\n");
  NcPoly expected = parse_poly("y*x^3 - x^3*y + 3*x^2*y*x - 3*x*y*x^2", ab);
  CHECK(r.presentation.relators[0] == expected);
  CHECK_THROWS_AS(parse_presentation("generators: x\nrelator: x = x = x\n"), ParseError);
}

TEST_CASE("zero relator warns but is kept") {
  auto r = parse_presentation("generators: x:1\nrelator: x - x\n");
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("line 2") != std::string::npos);
  REQUIRE(r.presentation.relators.size() == 1);
  CHECK(r.presentation.relators[0].is_zero());
}

TEST_CASE("comments and blank lines are ignored") {
  auto r = parse_presentation(
      "# header\n"
      "\n"
      "name: T # trailing comment\n"
      "generators: x:1 # two of them? no, one\n"
      "relator: x*x # square\n");
  CHECK(r.presentation.name == "T");
  CHECK(r.presentation.alphabet.size() == 1);
  CHECK(r.presentation.relators.size() == 1);
}

TEST_CASE("the seven-relator shortlex presentation parses") {
  auto r = parse_presentation(
      "name: A\n"
      "generators: a:1 b:1 c:1\n"
      "order: shortlex a < b < c\n"
      "relator: b^2*a - a*b^2\n"
      "relator: b^2*c - a*c*a\n"
      "relator: a*c*c\n"
      "relator: a*b*a\n"
      "relator: a*b*c\n"
      "relator: c*b*a\n"
      "relator: c*b*c\n");
  CHECK(r.warnings.empty());
  CHECK(same_presentation(r.presentation, builtin_A()));
}

TEST_CASE("builtins round-trip through print and parse") {
  for (const Presentation& p : {builtin_U(), builtin_A()}) {
    auto r = parse_presentation(print_presentation(p));
    CHECK(same_presentation(r.presentation, p));
  }
}

TEST_CASE("random presentations round-trip") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> gen_count(1, 4);
  std::uniform_int_distribution<int> degree(1, 3);
  std::uniform_int_distribution<int> relator_count(0, 4);
  std::uniform_int_distribution<int> term_count(1, 5);
  std::uniform_int_distribution<int> word_len(0, 5);
  std::uniform_int_distribution<int> numer(-6, 6);
  std::uniform_int_distribution<int> denom(1, 4);
  const char* names[] = {"p", "q", "r", "s"};

  for (int trial = 0; trial < 100; ++trial) {
    Presentation p;
    int g = gen_count(rng);
    std::vector<Generator> gens;
    for (int i = 0; i < g; ++i) gens.push_back({names[i], degree(rng)});
    std::shuffle(gens.begin(), gens.end(), rng);
    p.alphabet = Alphabet(gens);
    p.order_kind = trial % 2 ? OrderKind::deglex : OrderKind::shortlex;
    if (trial % 3 == 0) p.name = "T" + std::to_string(trial);
    int rs = relator_count(rng);
    for (int i = 0; i < rs; ++i) {
      NcPoly f;
      int ts = term_count(rng);
      for (int t = 0; t < ts; ++t) {
        std::vector<Letter> ls(word_len(rng));
        for (Letter& l : ls)
          l = static_cast<Letter>(std::uniform_int_distribution<int>(0, g - 1)(rng));
        f.add_term(Word(std::move(ls)), Rational(numer(rng), denom(rng)));
      }
      p.relators.push_back(std::move(f));
    }
    auto r = parse_presentation(print_presentation(p));
    CHECK(same_presentation(r.presentation, p));
  }
}

TEST_CASE("named relation lines fail soft") {
  Alphabet ab({{"x", 1}, {"y", 1}});
  auto lines = parse_named_relations(
      "# data\n"
      "r1: x*y - y*x\n"
      "r2: x*z\n"
      "broken line without separator\n"
      "r3: x = y\n",
      ab);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].name == "r1");
  CHECK(lines[0].poly.has_value());
  CHECK(lines[0].line == 2);
  CHECK_FALSE(lines[1].poly.has_value());
  CHECK(lines[1].error.find("unknown generator") != std::string::npos);
  CHECK_FALSE(lines[2].poly.has_value());
  CHECK(lines[3].poly == parse_poly("x - y", ab));
}

TEST_CASE("load_presentation resolves builtins and files") {
  CHECK(load_presentation("builtin:U").presentation.name == "U");
  CHECK(load_presentation("builtin:A").presentation.relators.size() == 7);
  CHECK_THROWS_AS(load_presentation("builtin:L"), std::invalid_argument);
  CHECK_THROWS_AS(load_presentation("builtin:Q"), std::invalid_argument);
  CHECK_THROWS_AS(load_presentation("/no/such/file.alg"), std::runtime_error);

  auto path = std::filesystem::temp_directory_path() / "ncalg_roundtrip.alg";
  std::ofstream(path) << print_presentation(builtin_U());
  CHECK(same_presentation(load_presentation(path.string()).presentation, builtin_U()));
  std::filesystem::remove(path);
}
