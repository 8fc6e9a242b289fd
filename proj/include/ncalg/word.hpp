#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncalg {

struct Generator {
  std::string name;
  int degree = 1;

  bool operator==(const Generator&) const = default;
};

/// Ordered list of generators. The list position of a generator is its
/// precedence: earlier means smaller in every monomial order built on top.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& gen(std::size_t i) const;
  const std::string& name(std::size_t i) const { return gen(i).name; }
  int degree(std::size_t i) const { return gen(i).degree; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Generator> gens_;
};

using Letter = std::uint16_t;

/// A word over generator indices; the empty word is the unit monomial.
/// Comparison operators are structural (for use as map keys); ordering in the
/// algebraic sense lives in MonomialOrder.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word single(Letter a) { return Word(std::vector<Letter>{a}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix_from(std::size_t pos) const { return subword(pos, letters_.size() - pos); }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

/// First position where `factor` occurs inside `w`, if any. The empty factor
/// occurs at position 0.
std::optional<std::size_t> find_factor(const Word& w, const Word& factor);
bool contains_factor(const Word& w, const Word& factor);

/// Sum of generator degrees; throws std::out_of_range if a letter does not
/// name a generator of `alphabet`.
long long word_degree(const Word& w, const Alphabet& alphabet);

std::string to_string(const Word& w, const Alphabet& alphabet);

}  // namespace ncalg
