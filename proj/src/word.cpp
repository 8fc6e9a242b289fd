#include "ncalg/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncalg {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (g.degree < 1) throw std::invalid_argument("generator degree must be >= 1: " + g.name);
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name: " + g.name);
  }
}

const Generator& Alphabet::gen(std::size_t i) const {
  if (i >= gens_.size()) throw std::out_of_range("generator index out of range");
  return gens_[i];
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw std::out_of_range("subword out of range");
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

std::optional<std::size_t> find_factor(const Word& w, const Word& factor) {
  if (factor.empty()) return 0;
  auto it = std::search(w.letters().begin(), w.letters().end(),
                        factor.letters().begin(), factor.letters().end());
  if (it == w.letters().end()) return std::nullopt;
  return static_cast<std::size_t>(it - w.letters().begin());
}

bool contains_factor(const Word& w, const Word& factor) {
  return find_factor(w, factor).has_value();
}

long long word_degree(const Word& w, const Alphabet& alphabet) {
  long long d = 0;
  for (Letter a : w.letters()) {
    if (a >= alphabet.size()) throw std::out_of_range("word uses letter outside alphabet");
    d += alphabet.degree(a);
  }
  return d;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += alphabet.name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace ncalg
