#pragma once

#include <cstddef>
#include <vector>

#include "ncalg/order.hpp"
#include "ncalg/poly.hpp"

namespace ncalg {

/// One reduction step: any occurrence of lhs may be replaced by rhs.
/// Invariant: lhs is strictly larger than every monomial of rhs under the
/// system's order, and never the empty word. rhs may be zero.
struct RewriteRule {
  Word lhs;
  NcPoly rhs;

  bool operator==(const RewriteRule&) const = default;
};

/// A set of rules sharing one monomial order. Rules are kept sorted by the
/// order on their left-hand sides, so equal systems compare equal and every
/// traversal is deterministic.
class RewriteSystem {
 public:
  RewriteSystem(MonomialOrder order, std::vector<RewriteRule> rules);

  const MonomialOrder& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Largest degree through which all ambiguities are known to resolve.
  /// Zero for freshly constructed systems; set by complete().
  long long completed_to() const { return completed_to_; }

 private:
  friend RewriteSystem complete(const RewriteSystem&, long long);
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  long long completed_to_ = 0;
};

/// Turns a relator into the rule (leading monomial) -> (rest / -leading
/// coefficient). Throws std::domain_error on the zero polynomial and on a
/// leading term equal to the empty word.
RewriteRule orient(const NcPoly& relator, const MonomialOrder& order);

/// Orients every nonzero relator. Zero relators are vacuous and skipped.
RewriteSystem make_system(MonomialOrder order, const std::vector<NcPoly>& relators);

/// Full normal form: rewrites until no monomial contains any lhs. Terminates
/// because replacements are strictly order-decreasing and the order is
/// well founded.
NcPoly reduce(const NcPoly& p, const RewriteSystem& sys);

bool is_irreducible(const Word& w, const RewriteSystem& sys);

enum class AmbiguityKind { overlap, inclusion };

/// A minimal superposition of two rules together with its two one-step
/// reducts. The pair resolves iff the reducts share a normal form.
struct Ambiguity {
  AmbiguityKind kind;
  std::size_t rule1 = 0;
  std::size_t rule2 = 0;
  Word superposition;
  NcPoly reduct1;
  NcPoly reduct2;
};

/// All overlap and inclusion ambiguities among the system's rules whose
/// superposition degree is at most max_degree, in deterministic order
/// (superposition degree, then rule indices, then position).
std::vector<Ambiguity> ambiguities(const RewriteSystem& sys, long long max_degree);

/// Degree-truncated Knuth-Bendix / Buchberger completion for homogeneous
/// systems: resolves every ambiguity of superposition degree <= max_degree,
/// adding oriented S-polynomial remainders as new rules and keeping the
/// system inter-reduced throughout. Requires every rule homogeneous (lhs and
/// rhs of equal degree); throws std::invalid_argument otherwise. The result
/// decides ideal membership up to max_degree.
RewriteSystem complete(const RewriteSystem& sys, long long max_degree);

}  // namespace ncalg
