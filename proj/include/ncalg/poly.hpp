#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ncalg/order.hpp"
#include "ncalg/rational.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Noncommutative polynomial: finite formal sum of words with rational
/// coefficients. Zero coefficients are never stored, so equality is
/// structural equality of the term map.
class NcPoly {
 public:
  NcPoly() = default;
  static NcPoly monomial(Word w, Rational c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }

  /// Adds c * w, erasing the term if the coefficient cancels to zero.
  void add_term(const Word& w, const Rational& c);
  Rational coeff(const Word& w) const;

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  NcPoly& operator*=(const Rational& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }

  bool operator==(const NcPoly&) const = default;

 private:
  std::map<Word, Rational> terms_;
};

/// left * p * right, term by term.
NcPoly mul_word(const Word& left, const NcPoly& p, const Word& right);

NcPoly mul(const NcPoly& a, const NcPoly& b);

/// Degree if every term has the same weighted degree; nullopt otherwise.
/// The zero polynomial is homogeneous of degree 0.
std::optional<long long> homogeneous_degree(const NcPoly& p, const Alphabet& alphabet);

/// Largest term under the given order; throws std::domain_error on zero.
std::pair<Word, Rational> leading_term(const NcPoly& p, const MonomialOrder& order);

std::string to_string(const NcPoly& p, const Alphabet& alphabet);

}  // namespace ncalg
