#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "ncalg/presentation.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/veronese.hpp"

using namespace ncalg;

#ifndef NCALG_DATA_DIR
#define NCALG_DATA_DIR "data"
#endif

namespace {

DimensionSeries counts_for(const Presentation& p, long long n) {
  return normal_word_counts(complete(make_system(p.order(), p.relators), n), n);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string appendix_path = std::string(NCALG_DATA_DIR) + "/appendix_v4u.txt";

}  // namespace

TEST_CASE("regrading a dimension series") {
  DimensionSeries h{SeriesFlavor::graded, {1, 2, 4, 8, 14, 24, 40, 64, 100}};
  DimensionSeries v = veronese_dims(h, 4, 2);
  CHECK(v.values == std::vector<BigInt>{1, 14, 100});
  DimensionSeries v2 = veronese_dims(h, 2, 4);
  CHECK(v2.values == std::vector<BigInt>{1, 4, 14, 40, 100});
}

TEST_CASE("letters follow the uppercase binary naming scheme") {
  QuadPresentation qp = veronese_presentation(builtin_U(), 4);
  REQUIRE(qp.letter_count() == 16);
  // source words ascend, x-block first; the name encodes the last three
  // letters in binary with x = 1
  const char* expected[] = {"X8", "X7", "X6", "X5", "X4", "X3", "X2", "X1",
                            "Y8", "Y7", "Y6", "Y5", "Y4", "Y3", "Y2", "Y1"};
  std::map<std::string, std::string> source_of = {
      {"X8", "x^4"},     {"X7", "x^3*y"},   {"X6", "x^2*y*x"}, {"X5", "x^2*y^2"},
      {"X4", "x*y*x^2"}, {"X3", "x*y*x*y"}, {"X2", "x*y^2*x"}, {"X1", "x*y^3"},
      {"Y8", "y*x^3"},   {"Y7", "y*x^2*y"}, {"Y6", "y*x*y*x"}, {"Y5", "y*x*y^2"},
      {"Y4", "y^2*x^2"}, {"Y3", "y^2*x*y"}, {"Y2", "y^3*x"},   {"Y1", "y^4"}};
  for (std::size_t i = 0; i < qp.letter_count(); ++i) {
    CHECK(qp.letters[i].name == expected[i]);
    CHECK(to_string(qp.letters[i].source, builtin_U().alphabet) == source_of[expected[i]]);
  }
}

TEST_CASE("the quartic algebra quadratizes to 14 letters and rank 96") {
  Presentation U = builtin_U();
  QuadPresentation qp = veronese_presentation(U, 4);
  CHECK(qp.letter_count() == 16);
  REQUIRE(qp.linear_relations.size() == 2);
  CHECK(qp.quadratic_relations.size() == 160);

  // the two linear relations are the relators read letter-wise
  NcPoly lin1 = parse_poly("X7 - 3*X6 + 3*X4 - Y8", qp.letter_alphabet);
  NcPoly lin2 = parse_poly("Y2 - 3*Y3 + 3*Y5 - X1", qp.letter_alphabet);
  CHECK(qp.linear_relations[0] == lin1);
  CHECK(qp.linear_relations[1] == lin2);

  QuadPresentation elim = eliminate_linear(qp);
  CHECK(elim.letter_count() == 14);
  CHECK(elim.quadratic_relations.size() == 96);
  REQUIRE(elim.eliminated.size() == 2);
  CHECK(elim.eliminated[0].first.name == "Y8");
  CHECK(to_string(elim.eliminated[0].second, elim.letter_alphabet) == "X7 - 3*X6 + 3*X4");
  CHECK(elim.eliminated[1].first.name == "Y2");
  CHECK(to_string(elim.eliminated[1].second, elim.letter_alphabet) == "X1 - 3*Y5 + 3*Y3");

  auto h = counts_for(U, 8);
  RankReport rank = relation_rank(elim, h.at(8));
  CHECK(rank.letter_count == 14);
  CHECK(rank.rank == 96);
  CHECK(rank.expected == 96);
  CHECK(rank.ok());

  // elimination is idempotent
  QuadPresentation again = eliminate_linear(elim);
  CHECK(again.letter_count() == 14);
  CHECK(again.quadratic_relations == elim.quadratic_relations);
}

TEST_CASE("quadratization of the shortlex algebra at d=3") {
  Presentation A = builtin_A();
  QuadPresentation qp = eliminate_linear(veronese_presentation(A, 3));
  CHECK(qp.letter_count() == 20);  // 27 cubic words minus 7 relator leads
  auto h = counts_for(A, 9);
  CHECK(h.at(3) == 20);
  RankReport rank = relation_rank(qp, h.at(6));
  CHECK(rank.rank == 281);  // 20^2 - 119
  CHECK(rank.ok());
}

TEST_CASE("quadraticity probes match the source algebra exactly") {
  Presentation U = builtin_U();
  auto uh = counts_for(U, 12);
  QuadPresentation uq = eliminate_linear(veronese_presentation(U, 4));
  QuadraticityReport ur = verify_quadraticity(uq, uh, 4, 3);
  CHECK(ur.ok);
  REQUIRE(ur.rows.size() == 4);
  const BigInt uexp[] = {1, 14, 100, 504};
  for (int m = 0; m <= 3; ++m) {
    CHECK(ur.rows[m].m == m);
    CHECK(ur.rows[m].counted == uexp[m]);
    CHECK(ur.rows[m].expected == uexp[m]);
  }

  Presentation A = builtin_A();
  auto ah = counts_for(A, 9);
  QuadPresentation aq = eliminate_linear(veronese_presentation(A, 3));
  QuadraticityReport ar = verify_quadraticity(aq, ah, 3, 3);
  CHECK(ar.ok);
  const BigInt aexp[] = {1, 20, 119, 470};
  for (int m = 0; m <= 3; ++m) CHECK(ar.rows[m].counted == aexp[m]);
}

TEST_CASE("a quadratic algebra is its own d=1 quadratization") {
  auto r = parse_presentation(
      "generators: x:1 y:1\n"
      "relator: y*x - x*y\n");
  QuadPresentation qp = veronese_presentation(r.presentation, 1);
  CHECK(qp.letter_count() == 2);
  CHECK(qp.linear_relations.empty());
  REQUIRE(qp.quadratic_relations.size() == 1);
  CHECK(to_string(qp.quadratic_relations[0], qp.letter_alphabet) == "-X1*Y1 + Y1*X1");
  auto h = counts_for(r.presentation, 6);
  RankReport rank = relation_rank(qp, h.at(2));
  CHECK(rank.rank == 1);  // 4 - 3
  CHECK(rank.ok());
  QuadraticityReport probe = verify_quadraticity(eliminate_linear(qp), h, 1, 5);
  CHECK(probe.ok);
}

TEST_CASE("quadratization preconditions") {
  Presentation U = builtin_U();
  CHECK_THROWS_AS(veronese_presentation(U, 0), std::invalid_argument);
  CHECK_THROWS_AS(veronese_presentation(U, 3), std::invalid_argument);  // 4 > 3, != 6
  CHECK_NOTHROW(veronese_presentation(U, 2));  // relator degree 4 = 2d

  auto weighted = parse_presentation("generators: x:2 y:1\n");
  CHECK_THROWS_AS(veronese_presentation(weighted.presentation, 2), std::invalid_argument);

  auto inhomogeneous = parse_presentation("generators: x:1\nrelator: x^2 - x\n");
  CHECK_THROWS_AS(veronese_presentation(inhomogeneous.presentation, 2),
                  std::invalid_argument);

  auto wide = parse_presentation("generators: a:1 b:1 c:1\n");
  CHECK_THROWS_AS(veronese_presentation(wide.presentation, 13), std::invalid_argument);
}

TEST_CASE("parallel and serial relation kernels agree") {
  Presentation U = builtin_U();
  CHECK(detail::veronese_quadratic_relations(U, 4, true) ==
        detail::veronese_quadratic_relations(U, 4, false));
  Presentation A = builtin_A();
  CHECK(detail::veronese_quadratic_relations(A, 3, true) ==
        detail::veronese_quadratic_relations(A, 3, false));
}

TEST_CASE("the quadratization round-trips as a presentation") {
  QuadPresentation qp = eliminate_linear(veronese_presentation(builtin_U(), 4));
  Presentation p = qp.as_presentation();
  CHECK(p.alphabet.size() == 14);
  for (const NcPoly& f : p.relators) CHECK(homogeneous_degree(f, p.alphabet) == 2);
  auto r = parse_presentation(print_presentation(p));
  CHECK(r.presentation.alphabet == p.alphabet);
  CHECK(r.presentation.relators == p.relators);
}

TEST_CASE("appendix data file reconciles with two known bad lines") {
  Presentation U = builtin_U();
  QuadPresentation qp = eliminate_linear(veronese_presentation(U, 4));
  Alphabet names = appendix_alphabet(qp);
  CHECK(names.size() == 16);

  auto lines = parse_named_relations(slurp(appendix_path), names);
  AppendixReport report = appendix_reconcile(qp, lines);
  CHECK(report.total == 98);  // 96 numbered plus the two eliminations
  CHECK(report.parsed_count == 98);
  CHECK(report.verified_count == 96);

  int numbered = 0, numbered_ok = 0;
  std::vector<std::string> failed;
  for (const AppendixVerdict& v : report.verdicts) {
    if (v.name[0] != 'r') continue;
    ++numbered;
    if (v.verified) ++numbered_ok;
    else failed.push_back(v.name);
  }
  CHECK(numbered == 96);
  CHECK(numbered_ok >= 90);
  REQUIRE(failed.size() == 2);
  CHECK(failed[0] == "r68");
  CHECK(failed[1] == "r92");
}

TEST_CASE("corrupted appendix lines are flagged, not fatal") {
  Presentation U = builtin_U();
  QuadPresentation qp = eliminate_linear(veronese_presentation(U, 4));
  Alphabet names = appendix_alphabet(qp);

  auto lines = parse_named_relations(
      "good: X4*X8 = X8*Y8 - 3*X7*X8 + 3*X6*X8\n"
      "bad_coeff: X4*X8 = X8*Y8 - 4*X7*X8 + 3*X6*X8\n"
      "bad_parse: X4 ** X8\n"
      "bad_degree: X4*X8*X8\n",
      names);
  AppendixReport report = appendix_reconcile(qp, lines);
  CHECK(report.total == 4);
  CHECK(report.parsed_count == 3);
  CHECK(report.verified_count == 1);
  CHECK(report.verdicts[0].verified);
  CHECK_FALSE(report.verdicts[1].verified);
  CHECK_FALSE(report.verdicts[2].parsed);
  CHECK_FALSE(report.verdicts[3].verified);
}
