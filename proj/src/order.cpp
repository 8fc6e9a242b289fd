#include "ncalg/order.hpp"

namespace ncalg {

namespace {

// Left-to-right comparison by generator precedence; a proper prefix is
// smaller. Under deglex two distinct words of equal weighted degree never
// stand in a prefix relation (weights are >= 1), but totality is cheap.
std::strong_ordering lex_compare(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (kind_ == OrderKind::deglex) {
    long long da = word_degree(a, alphabet_);
    long long db = word_degree(b, alphabet_);
    if (da != db) return da <=> db;
  } else {
    word_degree(a, alphabet_);  // validate letters
    word_degree(b, alphabet_);
    if (a.size() != b.size()) return a.size() <=> b.size();
  }
  return lex_compare(a, b);
}

}  // namespace ncalg
