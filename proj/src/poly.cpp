#include "ncalg/poly.hpp"

#include <stdexcept>

#include "ncalg/rational.hpp"

namespace ncalg {

namespace {

std::string coeff_string(const Rational& c) {
  return to_string(c);
}

}  // namespace

NcPoly NcPoly::monomial(Word w, Rational c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly mul_word(const Word& left, const NcPoly& p, const Word& right) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(concat(left, concat(w, right)), c);
  return out;
}

NcPoly mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(concat(wa, wb), ca * cb);
  return out;
}

std::optional<long long> homogeneous_degree(const NcPoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return 0;
  std::optional<long long> deg;
  for (const auto& [w, c] : p.terms()) {
    long long d = word_degree(w, alphabet);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::pair<Word, Rational> leading_term(const NcPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::domain_error("leading term of zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::string to_string(const NcPoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (w.empty()) {
      out += coeff_string(ac);
    } else {
      if (ac != 1) out += coeff_string(ac) + "*";
      out += to_string(w, alphabet);
    }
  }
  return out;
}

}  // namespace ncalg
