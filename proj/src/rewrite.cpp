#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace ncalg {

namespace {

struct Hit {
  std::size_t pos = 0;
  const Word* lhs = nullptr;
  const NcPoly* rhs = nullptr;
};

// Normal-form computation shared by the public reduce() and the completion
// engine. Terms are kept in a map ordered by the monomial order; we always
// rewrite the largest pending term. Every replacement monomial is strictly
// smaller than the term it replaces, so terms moved to the output can never
// reappear, and the pending multiset decreases in a well-founded order.
template <class FindHit>
NcPoly reduce_with(const NcPoly& p, const MonomialOrder& order, FindHit&& find_hit) {
  std::map<Word, Rational, OrderLess> pending(OrderLess{&order});
  for (const auto& [w, c] : p.terms()) pending.emplace(w, c);

  NcPoly out;
  while (!pending.empty()) {
    auto top = std::prev(pending.end());
    Word w = top->first;
    Rational c = std::move(top->second);
    pending.erase(top);
    if (c == 0) continue;

    std::optional<Hit> hit = find_hit(w);
    if (!hit) {
      out.add_term(w, c);
      continue;
    }
    Word left = w.prefix(hit->pos);
    Word right = w.suffix_from(hit->pos + hit->lhs->size());
    for (const auto& [rw, rc] : hit->rhs->terms()) {
      Word nw = concat(left, concat(rw, right));
      auto [it, inserted] = pending.emplace(nw, c * rc);
      if (!inserted) {
        it->second += c * rc;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return out;
}

// Leftmost occurrence of the first matching rule, scanning rules in their
// deterministic system order.
template <class Rules>
std::optional<Hit> first_hit(const Word& w, const Rules& rules) {
  for (const auto& r : rules) {
    if (r.lhs.size() > w.size()) continue;
    if (auto pos = find_factor(w, r.lhs)) return Hit{*pos, &r.lhs, &r.rhs};
  }
  return std::nullopt;
}

RewriteRule orient_checked(const NcPoly& relator, const MonomialOrder& order) {
  if (relator.is_zero()) throw std::domain_error("cannot orient the zero relator");
  auto [lead, coeff] = leading_term(relator, order);
  if (lead.empty())
    throw std::domain_error("cannot orient a relator whose leading term is the unit");
  NcPoly rhs = relator;
  rhs.add_term(lead, -coeff);
  rhs *= Rational(-1) / coeff;
  return RewriteRule{lead, std::move(rhs)};
}

}  // namespace

RewriteSystem::RewriteSystem(MonomialOrder order, std::vector<RewriteRule> rules)
    : order_(std::move(order)), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument("rewrite rule with empty left-hand side");
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!order_.less(w, r.lhs))
        throw std::invalid_argument("rewrite rule is not order-decreasing");
    }
  }
  std::stable_sort(rules_.begin(), rules_.end(),
                   [this](const RewriteRule& a, const RewriteRule& b) {
                     return order_.less(a.lhs, b.lhs);
                   });
}

RewriteRule orient(const NcPoly& relator, const MonomialOrder& order) {
  return orient_checked(relator, order);
}

RewriteSystem make_system(MonomialOrder order, const std::vector<NcPoly>& relators) {
  std::vector<RewriteRule> rules;
  for (const auto& f : relators) {
    if (f.is_zero()) continue;
    rules.push_back(orient_checked(f, order));
  }
  return RewriteSystem(std::move(order), std::move(rules));
}

NcPoly reduce(const NcPoly& p, const RewriteSystem& sys) {
  return reduce_with(p, sys.order(),
                     [&sys](const Word& w) { return first_hit(w, sys.rules()); });
}

bool is_irreducible(const Word& w, const RewriteSystem& sys) {
  for (const auto& r : sys.rules())
    if (contains_factor(w, r.lhs)) return false;
  return true;
}

std::vector<Ambiguity> ambiguities(const RewriteSystem& sys, long long max_degree) {
  const auto& rules = sys.rules();
  const Alphabet& ab = sys.order().alphabet();
  std::vector<Ambiguity> out;

  auto emit = [&](Ambiguity a) {
    if (word_degree(a.superposition, ab) <= max_degree) out.push_back(std::move(a));
  };

  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      // Overlaps: a proper nonempty suffix of li equals a proper prefix of lj.
      std::size_t tmax = std::min(li.size(), lj.size()) - 1;
      for (std::size_t t = 1; t <= tmax; ++t) {
        if (li.suffix_from(li.size() - t) != lj.prefix(t)) continue;
        Word a = li.prefix(li.size() - t);
        Word c = lj.suffix_from(t);
        Ambiguity amb;
        amb.kind = AmbiguityKind::overlap;
        amb.rule1 = i;
        amb.rule2 = j;
        amb.superposition = concat(li, c);
        amb.reduct1 = mul_word(Word(), rules[i].rhs, c);
        amb.reduct2 = mul_word(a, rules[j].rhs, Word());
        emit(std::move(amb));
      }
      // Inclusions: lj occurs inside li (i != j), one ambiguity per position.
      if (i == j || lj.size() > li.size()) continue;
      for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
        if (li.subword(pos, lj.size()) != lj) continue;
        Ambiguity amb;
        amb.kind = AmbiguityKind::inclusion;
        amb.rule1 = i;
        amb.rule2 = j;
        amb.superposition = li;
        amb.reduct1 = rules[i].rhs;
        amb.reduct2 = mul_word(li.prefix(pos), rules[j].rhs, li.suffix_from(pos + lj.size()));
        emit(std::move(amb));
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [&ab](const Ambiguity& a, const Ambiguity& b) {
    return word_degree(a.superposition, ab) < word_degree(b.superposition, ab);
  });
  return out;
}

namespace {

// Completion engine. Live rules are identified by insertion id; pending
// superpositions are processed by increasing degree, FIFO within a degree.
// The set of left-hand sides stays inter-reduced: no live lhs contains
// another, and right-hand sides are renormalized whenever a rule is added.
class CompletionEngine {
 public:
  CompletionEngine(const MonomialOrder& order, long long max_degree)
      : order_(order), max_degree_(max_degree) {}

  void add_poly(NcPoly p) {
    p = reduce_live(p);
    if (p.is_zero()) return;
    RewriteRule r = orient(p, order_);

    // Rules whose lhs contains the new lhs become reducible; pull them out
    // and feed their content back in afterwards.
    std::vector<NcPoly> stash;
    for (auto it = live_.begin(); it != live_.end();) {
      if (contains_factor(it->second.lhs, r.lhs)) {
        NcPoly f = NcPoly::monomial(it->second.lhs);
        f -= it->second.rhs;
        stash.push_back(std::move(f));
        it = live_.erase(it);
      } else {
        ++it;
      }
    }

    std::uint32_t id = next_id_++;
    live_.emplace(id, std::move(r));
    for (auto& [other_id, rule] : live_) {
      if (other_id != id) rule.rhs = reduce_live(rule.rhs);
    }
    enqueue_overlaps(id);

    for (auto& f : stash) add_poly(std::move(f));
  }

  void run() {
    while (!queue_.empty()) {
      auto it = queue_.begin();
      Pending p = it->second;
      queue_.erase(it);
      auto r1 = live_.find(p.id1);
      auto r2 = live_.find(p.id2);
      if (r1 == live_.end() || r2 == live_.end()) continue;
      const Word& l1 = r1->second.lhs;
      const Word& l2 = r2->second.lhs;
      Word a = l1.prefix(l1.size() - p.overlap);
      Word c = l2.suffix_from(p.overlap);
      NcPoly diff = mul_word(Word(), r1->second.rhs, c);
      diff -= mul_word(a, r2->second.rhs, Word());
      diff = reduce_live(diff);
      if (!diff.is_zero()) add_poly(std::move(diff));
    }
  }

  std::vector<RewriteRule> rules() const {
    std::vector<RewriteRule> out;
    out.reserve(live_.size());
    for (const auto& [id, r] : live_) out.push_back(r);
    return out;
  }

 private:
  struct Pending {
    std::uint32_t id1, id2;
    std::size_t overlap;
  };

  NcPoly reduce_live(const NcPoly& p) {
    return reduce_with(p, order_, [this](const Word& w) -> std::optional<Hit> {
      for (const auto& [id, r] : live_) {
        if (r.lhs.size() > w.size()) continue;
        if (auto pos = find_factor(w, r.lhs)) return Hit{*pos, &r.lhs, &r.rhs};
      }
      return std::nullopt;
    });
  }

  void push_overlap(std::uint32_t id1, std::uint32_t id2, std::size_t t) {
    const Word& l1 = live_.at(id1).lhs;
    const Word& l2 = live_.at(id2).lhs;
    if (l1.suffix_from(l1.size() - t) != l2.prefix(t)) return;
    Word sup = concat(l1, l2.suffix_from(t));
    long long deg = word_degree(sup, order_.alphabet());
    if (deg > max_degree_) return;
    queue_.emplace(std::make_pair(deg, seq_++), Pending{id1, id2, t});
  }

  // New rules never contain, and are never contained in, a live lhs (the new
  // lhs is a reduced normal form and containing rules were just removed), so
  // only overlap ambiguities can arise.
  void enqueue_overlaps(std::uint32_t id) {
    const Word& lnew = live_.at(id).lhs;
    for (const auto& [other, r] : live_) {
      std::size_t tmax_no = std::min(lnew.size(), r.lhs.size()) - 1;
      for (std::size_t t = 1; t <= tmax_no; ++t) {
        push_overlap(id, other, t);
        if (other != id) push_overlap(other, id, t);
      }
    }
  }

  const MonomialOrder& order_;
  long long max_degree_;
  std::map<std::uint32_t, RewriteRule> live_;
  std::uint32_t next_id_ = 0;
  std::map<std::pair<long long, std::uint64_t>, Pending> queue_;
  std::uint64_t seq_ = 0;
};

}  // namespace

RewriteSystem complete(const RewriteSystem& sys, long long max_degree) {
  const Alphabet& ab = sys.order().alphabet();
  for (const auto& r : sys.rules()) {
    NcPoly f = NcPoly::monomial(r.lhs);
    f -= r.rhs;
    if (!homogeneous_degree(f, ab))
      throw std::invalid_argument("completion requires homogeneous rules");
    if (word_degree(r.lhs, ab) > max_degree)
      throw std::invalid_argument("completion degree bound is below a rule degree");
  }

  CompletionEngine engine(sys.order(), max_degree);
  for (const auto& r : sys.rules()) {
    NcPoly f = NcPoly::monomial(r.lhs);
    f -= r.rhs;
    engine.add_poly(std::move(f));
  }
  engine.run();

  RewriteSystem out(sys.order(), engine.rules());
  out.completed_to_ = max_degree;
  return out;
}

}  // namespace ncalg
