#include "ncalg/veronese.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "ncalg/rewrite.hpp"

namespace ncalg {

namespace {

std::size_t checked_letter_space(std::size_t m, int d) {
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > 1'000'000 / m) throw std::invalid_argument("letter alphabet would be too large");
    total *= m;
  }
  return total;
}

Word word_from_index(std::size_t idx, std::size_t m, int d) {
  std::vector<Letter> letters(d);
  for (int i = d - 1; i >= 0; --i) {
    letters[i] = static_cast<Letter>(idx % m);
    idx /= m;
  }
  return Word(std::move(letters));
}

std::size_t index_of_word(const Word& w, std::size_t m) {
  std::size_t idx = 0;
  for (Letter a : w.letters()) idx = idx * m + a;
  return idx;
}

bool single_char_names(const Alphabet& ab) {
  for (std::size_t i = 0; i < ab.size(); ++i)
    if (ab.name(i).size() != 1 || !std::isalpha(static_cast<unsigned char>(ab.name(i)[0])))
      return false;
  return true;
}

std::string letter_name(const Word& src, const Alphabet& ab) {
  if (ab.size() == 2 && single_char_names(ab)) {
    // The two-letter scheme: family = first letter, then one plus the value
    // of the remaining letters read as binary with the precedence-first
    // generator contributing 1. Over {x, y} with d = 4 this yields X1..X8
    // for the words starting with x and Y1..Y8 for those starting with y.
    std::size_t value = 0;
    for (std::size_t i = 1; i < src.size(); ++i) value = 2 * value + (src[i] == 0 ? 1 : 0);
    std::string name(1, static_cast<char>(std::toupper(static_cast<unsigned char>(ab.name(src[0])[0]))));
    return name + std::to_string(value + 1);
  }
  if (single_char_names(ab)) {
    std::string name;
    for (Letter a : src.letters())
      name += static_cast<char>(std::toupper(static_cast<unsigned char>(ab.name(a)[0])));
    return name;
  }
  std::string name = "V";
  for (Letter a : src.letters()) name += "_" + ab.name(a);
  return name;
}

void validate_input(const Presentation& pres, int d) {
  if (d < 1) throw std::invalid_argument("veronese degree must be >= 1");
  const Alphabet& ab = pres.alphabet;
  if (ab.empty()) throw std::invalid_argument("veronese of an empty alphabet");
  for (std::size_t i = 0; i < ab.size(); ++i)
    if (ab.degree(i) != 1)
      throw std::invalid_argument("veronese_presentation requires all generators of degree 1");
  for (const NcPoly& f : pres.relators) {
    if (f.is_zero()) continue;
    auto deg = homogeneous_degree(f, ab);
    if (!deg) throw std::invalid_argument("veronese_presentation requires homogeneous relators");
    if (!(*deg <= d || *deg == 2 * d))
      throw std::invalid_argument("veronese degree is too small for a relator of degree " +
                                  std::to_string(*deg));
  }
}

// All words of the given length in ascending order.
std::vector<Word> words_of_length(std::size_t m, int len) {
  std::size_t count = 1;
  for (int i = 0; i < len; ++i) count *= m;
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_from_index(i, m, len));
  return out;
}

// Rewrites a source polynomial whose words all have degree k*d as a
// polynomial over the letter alphabet (words of letter-length k).
NcPoly to_letters(const NcPoly& p, std::size_t m, int d) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    std::vector<Letter> letters;
    letters.reserve(w.size() / d);
    for (std::size_t pos = 0; pos < w.size(); pos += d)
      letters.push_back(static_cast<Letter>(index_of_word(w.subword(pos, d), m)));
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<NcPoly> veronese_quadratic_relations(const Presentation& pres, int d, bool parallel) {
  const Alphabet& ab = pres.alphabet;
  const std::size_t m = ab.size();

  struct Job {
    const NcPoly* relator;
    Word v, w;
  };
  std::vector<Job> jobs;
  for (const NcPoly& f : pres.relators) {
    if (f.is_zero()) continue;
    long long di = *homogeneous_degree(f, ab);
    long long total = 2LL * d - di;
    for (long long lv = 0; lv <= total; ++lv) {
      for (const Word& v : words_of_length(m, static_cast<int>(lv)))
        for (const Word& w : words_of_length(m, static_cast<int>(total - lv)))
          jobs.push_back({&f, v, w});
    }
  }

  std::vector<NcPoly> out(jobs.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::size_t i = 0; i < jobs.size(); ++i)
      out[i] = to_letters(mul_word(jobs[i].v, *jobs[i].relator, jobs[i].w), m, d);
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      out[i] = to_letters(mul_word(jobs[i].v, *jobs[i].relator, jobs[i].w), m, d);
  }
  return out;
}

}  // namespace detail

DimensionSeries veronese_dims(const DimensionSeries& h, int d, int M) {
  if (d < 1 || M < 0) throw std::invalid_argument("veronese_dims requires d >= 1 and M >= 0");
  if (h.flavor != SeriesFlavor::graded)
    throw std::invalid_argument("veronese_dims expects a graded series");
  if (h.max_degree() < static_cast<long long>(d) * M)
    throw std::invalid_argument("series too short for the requested Veronese range");
  DimensionSeries out;
  out.flavor = SeriesFlavor::graded;
  for (int k = 0; k <= M; ++k) out.values.push_back(h.values[static_cast<std::size_t>(k) * d]);
  return out;
}

Presentation QuadPresentation::as_presentation() const {
  Presentation p;
  p.name = "V" + std::to_string(d) + "(" + (source.name.empty() ? "?" : source.name) + ")";
  p.alphabet = letter_alphabet;
  p.order_kind = OrderKind::deglex;
  p.relators = linear_relations;
  p.relators.insert(p.relators.end(), quadratic_relations.begin(), quadratic_relations.end());
  return p;
}

QuadPresentation veronese_presentation(const Presentation& pres, int d) {
  validate_input(pres, d);
  const Alphabet& ab = pres.alphabet;
  const std::size_t m = ab.size();
  const std::size_t g0 = checked_letter_space(m, d);

  QuadPresentation qp;
  qp.source = pres;
  qp.d = d;
  std::vector<Generator> gens;
  gens.reserve(g0);
  for (std::size_t i = 0; i < g0; ++i) {
    Word src = word_from_index(i, m, d);
    std::string name = letter_name(src, ab);
    qp.letters.push_back({src, name});
    gens.push_back({std::move(name), 1});
  }
  qp.letter_alphabet = Alphabet(std::move(gens));

  for (const NcPoly& f : pres.relators) {
    if (f.is_zero()) continue;
    long long di = *homogeneous_degree(f, ab);
    if (di > d) continue;  // a relator of degree 2d contributes no linear relation
    long long total = d - di;
    for (long long lv = 0; lv <= total; ++lv)
      for (const Word& v : words_of_length(m, static_cast<int>(lv)))
        for (const Word& w : words_of_length(m, static_cast<int>(total - lv)))
          qp.linear_relations.push_back(to_letters(mul_word(v, f, w), m, d));
  }
  qp.quadratic_relations = detail::veronese_quadratic_relations(pres, d, true);
  return qp;
}

QuadPresentation eliminate_linear(const QuadPresentation& qp) {
  const std::size_t g0 = qp.letters.size();
  if (qp.linear_relations.empty()) return qp;

  // Run the elimination in reversed coordinates so the RowSpace pivot (the
  // smallest index) is the order-largest letter.
  auto reversed = [g0](std::size_t idx) { return g0 - 1 - idx; };
  RowSpace space(g0);
  for (const NcPoly& rel : qp.linear_relations) {
    SparseRow row;
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() != 1) throw std::invalid_argument("linear relation of letter-degree != 1");
      row.emplace_back(reversed(w[0]), c);
    }
    std::sort(row.begin(), row.end());
    space.insert(std::move(row));
  }

  // Letter substitutions: pivot letters map to their combinations, others to
  // themselves; zero combinations delete the letter.
  std::vector<bool> is_pivot(g0, false);
  std::vector<NcPoly> subst(g0);  // over the original letter indices
  for (const auto& [rp, row] : space.basis()) {
    std::size_t pivot = reversed(rp);
    is_pivot[pivot] = true;
    NcPoly combo;
    for (std::size_t k = 1; k < row.size(); ++k)
      combo.add_term(Word::single(static_cast<Letter>(reversed(row[k].first))), -row[k].second);
    subst[pivot] = std::move(combo);
  }
  for (std::size_t i = 0; i < g0; ++i)
    if (!is_pivot[i]) subst[i] = NcPoly::monomial(Word::single(static_cast<Letter>(i)));

  QuadPresentation out;
  out.source = qp.source;
  out.d = qp.d;
  std::vector<std::size_t> new_index(g0, SIZE_MAX);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < g0; ++i) {
    if (is_pivot[i]) continue;
    new_index[i] = out.letters.size();
    out.letters.push_back(qp.letters[i]);
    gens.push_back({qp.letters[i].name, 1});
  }
  out.letter_alphabet = Alphabet(std::move(gens));

  auto remap = [&new_index](const NcPoly& p) {
    NcPoly q;
    for (const auto& [w, c] : p.terms()) {
      std::vector<Letter> letters;
      letters.reserve(w.size());
      for (Letter a : w.letters()) letters.push_back(static_cast<Letter>(new_index[a]));
      q.add_term(Word(std::move(letters)), c);
    }
    return q;
  };

  auto apply_subst_linear = [&subst](const NcPoly& p) {
    NcPoly q;
    for (const auto& [w, c] : p.terms()) {
      if (w.size() != 1) throw std::invalid_argument("linear combination of letter-degree != 1");
      q += c * subst[w[0]];
    }
    return q;
  };

  for (std::size_t i = 0; i < g0; ++i)
    if (is_pivot[i]) out.eliminated.emplace_back(qp.letters[i], remap(subst[i]));
  // Carry over the history of any earlier elimination round, rewritten over
  // the letters that survive this round.
  for (const auto& [letter, combo] : qp.eliminated)
    out.eliminated.emplace_back(letter, remap(apply_subst_linear(combo)));

  for (const NcPoly& rel : qp.quadratic_relations) {
    NcPoly substituted;
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() != 2) throw std::invalid_argument("quadratic relation of letter-degree != 2");
      substituted += c * mul(subst[w[0]], subst[w[1]]);
    }
    if (!substituted.is_zero()) out.quadratic_relations.push_back(remap(substituted));
  }
  return out;
}

RankReport relation_rank(const QuadPresentation& qp, const BigInt& h2d) {
  const std::size_t g = qp.letters.size();
  RowSpace space(g * g);
  for (const NcPoly& rel : qp.quadratic_relations) {
    SparseRow row;
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() != 2) throw std::invalid_argument("quadratic relation of letter-degree != 2");
      row.emplace_back(static_cast<std::size_t>(w[0]) * g + w[1], c);
    }
    std::sort(row.begin(), row.end());
    space.insert(std::move(row));
  }
  RankReport report;
  report.letter_count = g;
  report.rank = space.rank();
  report.h2d = h2d;
  report.expected = BigInt(g) * BigInt(g) - h2d;
  return report;
}

QuadraticityReport verify_quadraticity(const QuadPresentation& qp, const DimensionSeries& h,
                                       int d, int M) {
  if (M < 3) throw std::invalid_argument("verify_quadraticity requires M >= 3");
  if (h.flavor != SeriesFlavor::graded)
    throw std::invalid_argument("verify_quadraticity expects a graded series");
  if (h.max_degree() < static_cast<long long>(d) * M)
    throw std::invalid_argument("series too short for the requested range");

  // Reduce the relation lists to spanning bases first; completion cost
  // depends on the rule count, not on the raw enumeration size.
  const std::size_t g = qp.letters.size();
  std::vector<NcPoly> relators;
  {
    RowSpace lin(g);
    for (const NcPoly& rel : qp.linear_relations) {
      SparseRow row;
      for (const auto& [w, c] : rel.terms()) row.emplace_back(w[0], c);
      std::sort(row.begin(), row.end());
      if (lin.insert(std::move(row))) relators.push_back(rel);
    }
    RowSpace quad(g * g);
    for (const NcPoly& rel : qp.quadratic_relations) {
      SparseRow row;
      for (const auto& [w, c] : rel.terms())
        row.emplace_back(static_cast<std::size_t>(w[0]) * g + w[1], c);
      std::sort(row.begin(), row.end());
      if (quad.insert(std::move(row))) relators.push_back(rel);
    }
  }

  Presentation p = qp.as_presentation();
  RewriteSystem sys = make_system(p.order(), relators);
  RewriteSystem completed = complete(sys, M);
  DimensionSeries counts = normal_word_counts(completed, M);

  QuadraticityReport report;
  for (int m = 0; m <= M; ++m) {
    QuadraticityRow row;
    row.m = m;
    row.counted = counts.values[m];
    row.expected = h.values[static_cast<std::size_t>(m) * d];
    if (row.counted != row.expected) report.ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Alphabet appendix_alphabet(const QuadPresentation& qp) {
  std::vector<std::pair<Word, std::string>> all;
  for (const auto& l : qp.letters) all.emplace_back(l.source, l.name);
  for (const auto& [l, combo] : qp.eliminated) all.emplace_back(l.source, l.name);
  std::sort(all.begin(), all.end());
  std::vector<Generator> gens;
  gens.reserve(all.size());
  for (auto& [src, name] : all) gens.push_back({std::move(name), 1});
  return Alphabet(std::move(gens));
}

AppendixReport appendix_reconcile(const QuadPresentation& qp,
                                  const std::vector<NamedRelationLine>& listed) {
  const std::size_t g = qp.letters.size();
  Alphabet full = appendix_alphabet(qp);

  // Substitution from the full (pre-elimination) alphabet into kept letters.
  std::vector<NcPoly> subst(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    const std::string& name = full.name(i);
    bool found = false;
    for (std::size_t k = 0; k < qp.letters.size() && !found; ++k) {
      if (qp.letters[k].name == name) {
        subst[i] = NcPoly::monomial(Word::single(static_cast<Letter>(k)));
        found = true;
      }
    }
    for (const auto& [l, combo] : qp.eliminated) {
      if (found) break;
      if (l.name == name) {
        subst[i] = combo;
        found = true;
      }
    }
  }

  RowSpace space(g * g);
  for (const NcPoly& rel : qp.quadratic_relations) {
    SparseRow row;
    for (const auto& [w, c] : rel.terms())
      row.emplace_back(static_cast<std::size_t>(w[0]) * g + w[1], c);
    std::sort(row.begin(), row.end());
    space.insert(std::move(row));
  }

  AppendixReport report;
  report.total = static_cast<int>(listed.size());
  for (const NamedRelationLine& line : listed) {
    AppendixVerdict v;
    v.name = line.name;
    v.line = line.line;
    if (!line.poly) {
      v.detail = line.error;
      report.verdicts.push_back(std::move(v));
      continue;
    }
    v.parsed = true;
    ++report.parsed_count;

    NcPoly substituted;
    for (const auto& [w, c] : line.poly->terms()) {
      NcPoly term = NcPoly::monomial(Word());
      for (Letter a : w.letters()) term = mul(term, subst[a]);
      substituted += c * term;
    }

    if (substituted.is_zero()) {
      v.verified = true;  // consistent with the eliminated mapping
    } else {
      auto deg = homogeneous_degree(substituted, qp.letter_alphabet);
      if (deg && *deg == 2) {
        SparseRow row;
        for (const auto& [w, c] : substituted.terms())
          row.emplace_back(static_cast<std::size_t>(w[0]) * g + w[1], c);
        std::sort(row.begin(), row.end());
        v.verified = space.contains(std::move(row));
        if (!v.verified) v.detail = "not in the span of the computed quadratic relations";
      } else {
        v.detail = "substituted polynomial is not quadratic in the kept letters";
      }
    }
    if (v.verified) ++report.verified_count;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace ncalg
