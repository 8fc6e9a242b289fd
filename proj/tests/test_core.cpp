#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ncalg/order.hpp"
#include "ncalg/poly.hpp"
#include "ncalg/word.hpp"

using namespace ncalg;

namespace {

Alphabet xy() { return Alphabet({{"x", 1}, {"y", 1}}); }

Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(letters - 1));
  std::vector<Letter> out(len(rng));
  for (Letter& l : out) l = pick(rng);
  return Word(std::move(out));
}

NcPoly random_poly(std::mt19937& rng, std::size_t letters, std::size_t max_len,
                   int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  NcPoly p;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) p.add_term(random_word(rng, letters, max_len), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK(Alphabet(std::vector<Generator>{}).empty());  // degenerate but legal
  CHECK_THROWS_AS(Alphabet({{"x", 1}, {"x", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({{"x", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({{"", 1}}), std::invalid_argument);

  Alphabet ab({{"a", 1}, {"b", 2}});
  CHECK(ab.size() == 2);
  CHECK(ab.index_of("b") == 1);
  CHECK_FALSE(ab.index_of("c").has_value());
  CHECK(ab.degree(1) == 2);
}

TEST_CASE("word basics") {
  Word u = w({0, 1, 0});
  CHECK(u.size() == 3);
  CHECK(concat(u, w({1})) == w({0, 1, 0, 1}));
  CHECK(u.prefix(2) == w({0, 1}));
  CHECK(u.suffix_from(1) == w({1, 0}));
  CHECK(u.subword(1, 1) == w({1}));

  CHECK(find_factor(w({0, 1, 1, 0}), w({1, 1})) == 1);
  CHECK(find_factor(w({0, 1}), w({})) == 0);           // empty factor at position 0
  CHECK_FALSE(find_factor(w({0, 0}), w({1})).has_value());
  CHECK(contains_factor(w({0, 1, 0}), w({1, 0})));
  // leftmost occurrence
  CHECK(find_factor(w({1, 0, 1, 0}), w({1, 0})) == 0);
}

TEST_CASE("word degree is weighted") {
  Alphabet ab({{"a", 1}, {"b", 2}});
  CHECK(word_degree(w({}), ab) == 0);
  CHECK(word_degree(w({0, 1, 1}), ab) == 5);
  CHECK_THROWS_AS(word_degree(w({2}), ab), std::out_of_range);
}

TEST_CASE("word printing uses powers") {
  Alphabet ab = xy();
  CHECK(to_string(w({}), ab) == "1");
  CHECK(to_string(w({0, 0, 0, 1}), ab) == "x^3*y");
  CHECK(to_string(w({1, 0, 1, 1}), ab) == "y*x*y^2");
}

TEST_CASE("deglex compares weighted degree first, then precedence") {
  Alphabet ab({{"a", 1}, {"b", 2}});
  MonomialOrder ord(OrderKind::deglex, ab);
  CHECK(ord.less(w({0}), w({1})));        // weighted degree 1 < 2
  CHECK(ord.less(w({0, 0}), w({1})));     // equal degree 2, lex tiebreak a < b
  CHECK(ord.less(w({1}), w({0, 0, 0})));  // degree 2 < 3 overrides lex
}

TEST_CASE("deglex on equal degree falls back to lex") {
  MonomialOrder ord(OrderKind::deglex, xy());
  // all of degree 4: x^3*y < x^2*y*x < x*y*x^2 < y*x^3
  Word a = w({0, 0, 0, 1}), b = w({0, 0, 1, 0}), c = w({0, 1, 0, 0}), d = w({1, 0, 0, 0});
  CHECK(ord.less(a, b));
  CHECK(ord.less(b, c));
  CHECK(ord.less(c, d));
  CHECK(ord.compare(b, b) == std::strong_ordering::equal);
}

TEST_CASE("shortlex compares length first") {
  Alphabet abc({{"a", 1}, {"b", 1}, {"c", 1}});
  MonomialOrder ord(OrderKind::shortlex, abc);
  CHECK(ord.less(w({2, 2}), w({0, 0, 0})));
  CHECK(ord.less(w({0, 1, 2}), w({0, 2, 0})));
  CHECK(ord.less(w({}), w({0})));
}

TEST_CASE("orders are total and multiplicative") {
  std::mt19937 rng(7);
  Alphabet ab({{"a", 1}, {"b", 2}, {"c", 1}});
  for (OrderKind kind : {OrderKind::deglex, OrderKind::shortlex}) {
    MonomialOrder ord(kind, ab);
    for (int trial = 0; trial < 300; ++trial) {
      Word a = random_word(rng, 3, 6), b = random_word(rng, 3, 6);
      auto cmp = ord.compare(a, b);
      CHECK((cmp == std::strong_ordering::equal) == (a == b));
      CHECK((ord.less(a, b) ? 1 : 0) + (ord.less(b, a) ? 1 : 0) + (a == b ? 1 : 0) == 1);
      if (ord.less(a, b)) {
        Word u = random_word(rng, 3, 3), v = random_word(rng, 3, 3);
        CHECK(ord.less(concat(concat(u, a), v), concat(concat(u, b), v)));
      }
    }
  }
}

TEST_CASE("empty word is the minimum") {
  std::mt19937 rng(11);
  for (OrderKind kind : {OrderKind::deglex, OrderKind::shortlex}) {
    MonomialOrder ord(kind, xy());
    for (int trial = 0; trial < 50; ++trial) {
      Word a = random_word(rng, 2, 8);
      if (!a.empty()) CHECK(ord.less(Word(), a));
    }
  }
}

TEST_CASE("polynomial term bookkeeping") {
  NcPoly p;
  p.add_term(w({0}), 2);
  p.add_term(w({0}), -2);
  CHECK(p.is_zero());

  p.add_term(w({0, 1}), Rational(1, 2));
  p.add_term(w({}), -1);
  CHECK(p.term_count() == 2);
  CHECK(p.coeff(w({0, 1})) == Rational(1, 2));
  CHECK(p.coeff(w({1})) == 0);

  NcPoly q = p + p;
  CHECK(q.coeff(w({0, 1})) == 1);
  CHECK((q - p) == p);
  CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("polynomial multiplication distributes and associates") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    NcPoly a = random_poly(rng, 2, 4, 4);
    NcPoly b = random_poly(rng, 2, 4, 4);
    NcPoly c = random_poly(rng, 2, 4, 4);
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
  // noncommutativity witness
  NcPoly x = NcPoly::monomial(w({0})), y = NcPoly::monomial(w({1}));
  CHECK(mul(x, y) != mul(y, x));
}

TEST_CASE("mul_word wraps every term") {
  NcPoly p;
  p.add_term(w({0}), 1);
  p.add_term(w({1}), -3);
  NcPoly r = mul_word(w({1}), p, w({0}));
  CHECK(r.coeff(w({1, 0, 0})) == 1);
  CHECK(r.coeff(w({1, 1, 0})) == -3);
  CHECK(r.term_count() == 2);
}

TEST_CASE("homogeneous degree") {
  Alphabet ab({{"x", 1}, {"y", 2}});
  NcPoly p;
  p.add_term(w({0, 0}), 1);
  p.add_term(w({1}), 5);  // degree 2 both ways
  CHECK(homogeneous_degree(p, ab) == 2);
  p.add_term(w({0}), 1);
  CHECK_FALSE(homogeneous_degree(p, ab).has_value());
  CHECK(homogeneous_degree(NcPoly(), ab) == 0);
}

TEST_CASE("leading term follows the order") {
  MonomialOrder ord(OrderKind::deglex, xy());
  NcPoly p;
  p.add_term(w({0, 0, 0, 1}), 1);
  p.add_term(w({1, 0, 0, 0}), -1);
  auto [lead, c] = leading_term(p, ord);
  CHECK(lead == w({1, 0, 0, 0}));
  CHECK(c == -1);
  CHECK_THROWS_AS(leading_term(NcPoly(), ord), std::domain_error);
}

TEST_CASE("polynomial printing") {
  Alphabet ab = xy();
  NcPoly p;
  p.add_term(w({0}), 1);
  p.add_term(w({1, 1}), -3);
  p.add_term(w({}), Rational(1, 2));
  CHECK(to_string(p, ab) == "1/2 + x - 3*y^2");
  CHECK(to_string(NcPoly(), ab) == "0");
}
