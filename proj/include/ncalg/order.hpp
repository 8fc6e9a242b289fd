#pragma once

#include <compare>

#include "ncalg/word.hpp"

namespace ncalg {

enum class OrderKind { deglex, shortlex };

/// Total well-founded monomial order compatible with concatenation.
///
/// deglex compares weighted degree first (generator weights from the
/// alphabet), then left-to-right by generator precedence. shortlex compares
/// length first, then the same lexicographic tiebreak.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, Alphabet alphabet)
      : kind_(kind), alphabet_(std::move(alphabet)) {}

  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  OrderKind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  OrderKind kind_;
  Alphabet alphabet_;
};

/// Comparator adapter for ordered containers keyed by monomial order.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

}  // namespace ncalg
