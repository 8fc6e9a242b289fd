#include "ncalg/growth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fit.hpp"

namespace ncalg {

namespace {

// Failure-link (Aho-Corasick) automaton over the forbidden factors. A word
// is irreducible iff walking it never enters a dead state, so counting
// irreducible words is a DP over (degree, state).
class FactorAutomaton {
 public:
  FactorAutomaton(const std::vector<Word>& patterns, std::size_t alphabet_size)
      : m_(alphabet_size) {
    next_.push_back(std::vector<int>(m_, -1));
    dead_.push_back(false);
    for (const Word& p : patterns) {
      int s = 0;
      for (Letter a : p.letters()) {
        if (next_[s][a] == -1) {
          next_[s][a] = static_cast<int>(next_.size());
          next_.push_back(std::vector<int>(m_, -1));
          dead_.push_back(false);
        }
        s = next_[s][a];
      }
      dead_[s] = true;
    }
    // BFS to fill failure links and flatten the goto function.
    std::vector<int> fail(next_.size(), 0);
    std::deque<int> bfs;
    for (std::size_t a = 0; a < m_; ++a) {
      int& t = next_[0][a];
      if (t == -1) {
        t = 0;
      } else {
        fail[t] = 0;
        bfs.push_back(t);
      }
    }
    while (!bfs.empty()) {
      int s = bfs.front();
      bfs.pop_front();
      if (dead_[fail[s]]) dead_[s] = true;
      for (std::size_t a = 0; a < m_; ++a) {
        int& t = next_[s][a];
        if (t == -1) {
          t = next_[fail[s]][a];
        } else {
          fail[t] = next_[fail[s]][a];
          bfs.push_back(t);
        }
      }
    }
  }

  std::size_t states() const { return next_.size(); }
  int step(int state, Letter a) const { return next_[state][a]; }
  bool dead(int state) const { return dead_[state]; }

 private:
  std::size_t m_;
  std::vector<std::vector<int>> next_;
  std::vector<bool> dead_;
};

std::vector<Word> forbidden_factors(const RewriteSystem& sys) {
  std::vector<Word> out;
  out.reserve(sys.rules().size());
  for (const auto& r : sys.rules()) out.push_back(r.lhs);
  return out;
}

}  // namespace

DimensionSeries normal_word_counts(const RewriteSystem& sys, long long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (sys.completed_to() < max_degree)
    throw std::invalid_argument("system is not completed through the requested degree");

  const Alphabet& ab = sys.order().alphabet();
  FactorAutomaton aut(forbidden_factors(sys), ab.size());

  // ways[d][s]: number of irreducible words of weighted degree d ending in
  // automaton state s.
  std::vector<std::vector<BigInt>> ways(
      max_degree + 1, std::vector<BigInt>(aut.states(), BigInt(0)));
  if (!aut.dead(0)) ways[0][0] = 1;
  for (long long d = 0; d <= max_degree; ++d) {
    for (std::size_t s = 0; s < aut.states(); ++s) {
      const BigInt& c = ways[d][s];
      if (c == 0) continue;
      for (std::size_t a = 0; a < ab.size(); ++a) {
        long long nd = d + ab.degree(a);
        if (nd > max_degree) continue;
        int ns = aut.step(static_cast<int>(s), static_cast<Letter>(a));
        if (aut.dead(ns)) continue;
        ways[nd][ns] += c;
      }
    }
  }

  DimensionSeries out;
  out.flavor = SeriesFlavor::graded;
  out.values.resize(max_degree + 1);
  for (long long d = 0; d <= max_degree; ++d) {
    BigInt total = 0;
    for (const BigInt& c : ways[d]) total += c;
    out.values[d] = total;
  }
  return out;
}

namespace {

bool suffix_reducible(const std::vector<Letter>& w, const std::vector<Word>& factors) {
  for (const Word& f : factors) {
    if (f.size() > w.size()) continue;
    if (std::equal(f.letters().begin(), f.letters().end(), w.end() - f.size())) return true;
  }
  return false;
}

// Extends an irreducible seed word depth-first; only the freshly appended
// letter can create a forbidden occurrence, so a suffix check suffices.
void extend_count(std::vector<Letter>& w, long long deg, long long max_degree,
                  const Alphabet& ab, const std::vector<Word>& factors,
                  std::vector<BigInt>& counts) {
  for (std::size_t a = 0; a < ab.size(); ++a) {
    long long nd = deg + ab.degree(a);
    if (nd > max_degree) continue;
    w.push_back(static_cast<Letter>(a));
    if (!suffix_reducible(w, factors)) {
      ++counts[nd];
      extend_count(w, nd, max_degree, ab, factors, counts);
    }
    w.pop_back();
  }
}

void check_brute_force_guards(const RewriteSystem& sys, long long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (sys.order().alphabet().size() > 4)
    throw std::domain_error("brute-force counting is limited to alphabets of size <= 4");
  if (max_degree > 14)
    throw std::domain_error("brute-force counting is limited to max_degree <= 14");
}

}  // namespace

DimensionSeries brute_force_counts_serial(const RewriteSystem& sys, long long max_degree) {
  check_brute_force_guards(sys, max_degree);
  const Alphabet& ab = sys.order().alphabet();
  std::vector<Word> factors = forbidden_factors(sys);

  std::vector<BigInt> counts(max_degree + 1, BigInt(0));
  counts[0] = 1;
  std::vector<Letter> w;
  extend_count(w, 0, max_degree, ab, factors, counts);

  DimensionSeries out;
  out.flavor = SeriesFlavor::graded;
  out.values = std::move(counts);
  return out;
}

DimensionSeries brute_force_counts(const RewriteSystem& sys, long long max_degree) {
  check_brute_force_guards(sys, max_degree);
  const Alphabet& ab = sys.order().alphabet();
  std::vector<Word> factors = forbidden_factors(sys);

  // Seeds: irreducible words of length exactly 2 (shorter words are counted
  // directly). Each seed's subtree is independent, so the sweep over seeds
  // is data-parallel; per-seed tallies are combined in seed order.
  std::vector<BigInt> counts(max_degree + 1, BigInt(0));
  counts[0] = 1;
  std::vector<std::vector<Letter>> seeds;
  for (std::size_t a = 0; a < ab.size(); ++a) {
    long long da = ab.degree(a);
    if (da > max_degree) continue;
    std::vector<Letter> w{static_cast<Letter>(a)};
    if (suffix_reducible(w, factors)) continue;
    ++counts[da];
    for (std::size_t b = 0; b < ab.size(); ++b) {
      long long dab = da + ab.degree(b);
      if (dab > max_degree) continue;
      std::vector<Letter> w2{static_cast<Letter>(a), static_cast<Letter>(b)};
      if (suffix_reducible(w2, factors)) continue;
      ++counts[dab];
      seeds.push_back(std::move(w2));
    }
  }

  std::vector<std::vector<BigInt>> partial(
      seeds.size(), std::vector<BigInt>(max_degree + 1, BigInt(0)));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    std::vector<Letter> w = seeds[i];
    long long deg = word_degree(Word(w), ab);
    extend_count(w, deg, max_degree, ab, factors, partial[i]);
  }
  for (const auto& part : partial)
    for (long long d = 0; d <= max_degree; ++d) counts[d] += part[d];

  DimensionSeries out;
  out.flavor = SeriesFlavor::graded;
  out.values = std::move(counts);
  return out;
}

std::vector<BigInt> partition_table(long long max_n) {
  if (max_n < 0) throw std::invalid_argument("partition_table requires max_n >= 0");
  std::vector<BigInt> p(max_n + 1, BigInt(0));
  p[0] = 1;
  for (long long n = 1; n <= max_n; ++n) {
    BigInt acc = 0;
    for (long long k = 1;; ++k) {
      long long g1 = k * (3 * k - 1) / 2;
      long long g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      BigInt term = 0;
      if (g1 <= n) term += p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[n] = acc;
  }
  return p;
}

BigInt partition_p(long long n) {
  if (n < 0) return 0;
  return partition_table(n)[n];
}

BigInt kobayashi_closed_form(long long n) {
  if (n < 0) throw std::invalid_argument("kobayashi_closed_form requires n >= 0");
  std::vector<BigInt> p = partition_table(n);
  BigInt total = 0;
  for (long long j = 0; j <= n; ++j) total += BigInt(2 * j + 1) * p[n - j];
  return total;
}

DimensionSeries cumulative(const DimensionSeries& graded) {
  if (graded.flavor != SeriesFlavor::graded)
    throw std::invalid_argument("cumulative() expects a graded series");
  DimensionSeries out;
  out.flavor = SeriesFlavor::cumulative;
  out.values.reserve(graded.values.size());
  BigInt acc = 0;
  for (const BigInt& v : graded.values) {
    acc += v;
    out.values.push_back(acc);
  }
  return out;
}

const char* to_string(GrowthLabel label) {
  switch (label) {
    case GrowthLabel::polynomial: return "polynomial";
    case GrowthLabel::intermediate: return "intermediate";
    case GrowthLabel::exponential: return "exponential";
  }
  return "?";
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

GrowthClass classify_growth(const DimensionSeries& series, long long first_degree) {
  if (series.flavor != SeriesFlavor::cumulative)
    throw std::invalid_argument("classify_growth expects a cumulative series");
  if (first_degree < 0 || first_degree > series.max_degree())
    throw std::invalid_argument("first_degree out of range");

  const long long N = series.max_degree();
  const std::size_t S = static_cast<std::size_t>(N - first_degree + 1);
  if (S < 16) throw std::invalid_argument("classify_growth needs at least 16 sample degrees");

  std::vector<double> logs(S);
  for (std::size_t i = 0; i < S; ++i) {
    const BigInt& v = series.values[first_degree + i];
    if (v <= 0) throw std::invalid_argument("classify_growth requires positive values");
    logs[i] = log_value(v);
  }

  GrowthClass result;

  // Exponential probe: consecutive ratios over the top quarter of the range.
  std::size_t window = std::max<std::size_t>(4, S / 4);
  std::vector<double> ratios;
  for (std::size_t i = S - window; i + 1 < S; ++i) ratios.push_back(std::exp(logs[i + 1] - logs[i]));
  result.median_ratio = median(ratios);
  double max_drop = 0;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i)
    max_drop = std::max(max_drop, ratios[i] - ratios[i + 1]);
  result.max_ratio_drop = max_drop;
  if (result.median_ratio > 1.05 && max_drop <= 1e-9) {
    result.label = GrowthLabel::exponential;
    return result;
  }

  // Polynomial probe over the top half: log-log slope below 8 and flat
  // second differences of log gamma.
  std::size_t half = S / 2;
  std::vector<double> xs, ys;
  for (std::size_t i = half; i < S; ++i) {
    xs.push_back(std::log(static_cast<double>(first_degree + i)));
    ys.push_back(logs[i]);
  }
  result.degree = detail::fit_line(xs, ys).slope;
  double max_dd = 0;
  for (std::size_t i = std::max<std::size_t>(half, 1); i + 1 < S; ++i)
    max_dd = std::max(max_dd, std::abs(logs[i + 1] - 2 * logs[i] + logs[i - 1]));
  result.max_second_difference = max_dd;
  if (result.degree < 8 && max_dd < 1e-2) {
    result.label = GrowthLabel::polynomial;
    return result;
  }

  // Intermediate: alpha from log log gamma against log n over the top half.
  std::vector<double> yy;
  for (std::size_t i = half; i < S; ++i) {
    if (logs[i] <= 0)
      throw std::invalid_argument("series too flat to fit an intermediate exponent");
    yy.push_back(std::log(logs[i]));
  }
  result.label = GrowthLabel::intermediate;
  result.alpha = detail::fit_line(xs, yy).slope;
  return result;
}

}  // namespace ncalg
