#include "ncalg/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncalg {

namespace {

std::vector<Rational> poly_trim(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Rational> poly_add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

std::vector<Rational> poly_scale(std::vector<Rational> a, const Rational& c) {
  for (auto& v : a) v *= c;
  return poly_trim(std::move(a));
}

std::vector<Rational> t_power(int k, const Rational& c) {
  std::vector<Rational> p(k + 1, Rational(0));
  p[k] = c;
  return p;
}

}  // namespace

std::string to_string(const BasisLabel& b) {
  const char* fam = b.family == LieFamily::X ? "x" : b.family == LieFamily::Y ? "y" : "z";
  return fam + std::to_string(b.index);
}

GradedLie GradedLie::build_L(long long max_degree) {
  if (max_degree < 1) throw std::invalid_argument("build_L requires max_degree >= 1");
  GradedLie g;
  g.max_degree_ = max_degree;
  for (int k = 1; 2LL * k - 1 <= max_degree; ++k) {
    g.basis_.push_back({LieFamily::X, k});
    g.basis_.push_back({LieFamily::Y, k});
  }
  for (int k = 1; 2LL * k <= max_degree; ++k) g.basis_.push_back({LieFamily::Z, k});
  std::sort(g.basis_.begin(), g.basis_.end(), [](const BasisLabel& a, const BasisLabel& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });

  auto put = [&g](const BasisLabel& a, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rational>> v) {
    g.table_[{a, b}] = std::move(v);
  };
  for (const BasisLabel& a : g.basis_) {
    for (const BasisLabel& b : g.basis_) {
      if (a.degree() + b.degree() > max_degree) continue;
      if (a.family == b.family) {
        put(a, b, {});
        continue;
      }
      // Normalize to the (X,Y), (X,Z), (Y,Z) cases; the flip changes sign.
      bool flipped = static_cast<int>(a.family) > static_cast<int>(b.family);
      const BasisLabel& u = flipped ? b : a;
      const BasisLabel& v = flipped ? a : b;
      Rational sign = flipped ? -1 : 1;
      std::vector<std::pair<BasisLabel, Rational>> val;
      if (u.family == LieFamily::X && v.family == LieFamily::Y) {
        val.push_back({{LieFamily::Z, u.index + v.index - 1}, sign});
      } else if (u.family == LieFamily::X && v.family == LieFamily::Z) {
        val.push_back({{LieFamily::X, u.index + v.index}, sign * -2});
      } else {  // (Y, Z)
        val.push_back({{LieFamily::Y, u.index + v.index}, sign * 2});
      }
      put(a, b, std::move(val));
    }
  }
  return g;
}

const std::vector<std::pair<BasisLabel, Rational>>& GradedLie::bracket_basis(
    const BasisLabel& a, const BasisLabel& b) const {
  auto it = table_.find({a, b});
  if (it == table_.end())
    throw std::domain_error("bracket of " + to_string(a) + " and " + to_string(b) +
                            " exceeds the truncation degree");
  return it->second;
}

LieElement GradedLie::bracket(const LieElement& u, const LieElement& v) const {
  LieElement out;
  for (const auto& [a, ca] : u) {
    if (ca == 0) continue;
    for (const auto& [b, cb] : v) {
      if (cb == 0) continue;
      for (const auto& [w, c] : bracket_basis(a, b)) {
        Rational& acc = out[w];
        acc += ca * cb * c;
        if (acc == 0) out.erase(w);
      }
    }
  }
  return out;
}

DimensionSeries GradedLie::graded_dims(long long max_degree) const {
  if (max_degree > max_degree_)
    throw std::invalid_argument("graded_dims beyond the built truncation");
  DimensionSeries out;
  out.flavor = SeriesFlavor::graded;
  out.values.assign(max_degree + 1, BigInt(0));
  for (const BasisLabel& b : basis_) {
    if (b.degree() <= max_degree) ++out.values[b.degree()];
  }
  return out;
}

namespace {

std::vector<std::array<BasisLabel, 3>> jacobi_triples(const GradedLie& g, long long max_degree) {
  const auto& basis = g.basis();
  std::vector<std::array<BasisLabel, 3>> triples;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      for (std::size_t k = j; k < basis.size(); ++k) {
        if (basis[i].degree() + basis[j].degree() + basis[k].degree() > max_degree) continue;
        triples.push_back({basis[i], basis[j], basis[k]});
      }
  return triples;
}

bool jacobi_holds(const GradedLie& g, const std::array<BasisLabel, 3>& t) {
  LieElement a{{t[0], 1}}, b{{t[1], 1}}, c{{t[2], 1}};
  LieElement sum = g.bracket(a, g.bracket(b, c));
  for (const auto& [w, v] : g.bracket(b, g.bracket(c, a))) {
    Rational& acc = sum[w];
    acc += v;
    if (acc == 0) sum.erase(w);
  }
  for (const auto& [w, v] : g.bracket(c, g.bracket(a, b))) {
    Rational& acc = sum[w];
    acc += v;
    if (acc == 0) sum.erase(w);
  }
  return sum.empty();
}

}  // namespace

JacobiReport jacobi_check_serial(const GradedLie& g, long long max_degree) {
  if (max_degree > g.max_degree())
    throw std::invalid_argument("jacobi_check beyond the built truncation");
  JacobiReport report;
  for (const auto& t : jacobi_triples(g, max_degree)) {
    ++report.triples_checked;
    if (!jacobi_holds(g, t)) report.violations.push_back(t);
  }
  return report;
}

JacobiReport jacobi_check(const GradedLie& g, long long max_degree) {
  if (max_degree > g.max_degree())
    throw std::invalid_argument("jacobi_check beyond the built truncation");
  auto triples = jacobi_triples(g, max_degree);
  std::vector<char> bad(triples.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!jacobi_holds(g, triples[i])) bad[i] = 1;
  }
  JacobiReport report;
  report.triples_checked = static_cast<long long>(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (bad[i]) report.violations.push_back(triples[i]);
  return report;
}

PolyMatrix PolyMatrix::zero() {
  return PolyMatrix{};
}

PolyMatrix PolyMatrix::x(int i) {
  PolyMatrix m;
  m.entry[0][1] = t_power(i - 1, 1);
  return m;
}

PolyMatrix PolyMatrix::y(int i) {
  PolyMatrix m;
  m.entry[1][0] = t_power(i, 1);
  return m;
}

PolyMatrix PolyMatrix::z(int i) {
  PolyMatrix m;
  m.entry[0][0] = t_power(i, 1);
  m.entry[1][1] = t_power(i, -1);
  return m;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& other) const {
  PolyMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.entry[r][c] = poly_add(poly_mul(entry[r][0], other.entry[0][c]),
                                 poly_mul(entry[r][1], other.entry[1][c]));
  return out;
}

PolyMatrix PolyMatrix::add(const PolyMatrix& other) const {
  PolyMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.entry[r][c] = poly_add(entry[r][c], other.entry[r][c]);
  return out;
}

PolyMatrix PolyMatrix::sub(const PolyMatrix& other) const {
  PolyMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.entry[r][c] = poly_sub(entry[r][c], other.entry[r][c]);
  return out;
}

PolyMatrix PolyMatrix::scale(const Rational& c) const {
  PolyMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) out.entry[r][col] = poly_scale(entry[r][col], c);
  return out;
}

std::vector<Rational> PolyMatrix::trace() const {
  return poly_add(entry[0][0], entry[1][1]);
}

bool PolyMatrix::is_zero() const {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!poly_trim(entry[r][c]).empty()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return sub(other).is_zero();
}

namespace {

PolyMatrix realize(const BasisLabel& b) {
  switch (b.family) {
    case LieFamily::X: return PolyMatrix::x(b.index);
    case LieFamily::Y: return PolyMatrix::y(b.index);
    case LieFamily::Z: return PolyMatrix::z(b.index);
  }
  return PolyMatrix::zero();
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
  return a.mul(b).sub(b.mul(a));
}

bool in_model_subalgebra(const PolyMatrix& m) {
  // Zero trace, and the lower-left entry divisible by t.
  if (!poly_trim(m.trace()).empty()) return false;
  const auto& ll = m.entry[1][0];
  return ll.empty() || ll[0] == 0;
}

}  // namespace

MatrixModelReport matrix_model_check(int max_index) {
  if (max_index < 1) throw std::invalid_argument("matrix_model_check requires max_index >= 1");
  MatrixModelReport report;
  report.max_index = max_index;
  GradedLie g = GradedLie::build_L(4LL * max_index + 2);

  std::vector<BasisLabel> gens;
  for (int i = 1; i <= max_index; ++i) {
    gens.push_back({LieFamily::X, i});
    gens.push_back({LieFamily::Y, i});
    gens.push_back({LieFamily::Z, i});
  }
  for (const BasisLabel& b : gens) {
    if (!in_model_subalgebra(realize(b)))
      report.violations.push_back(to_string(b) + " leaves the model subalgebra");
  }

  for (const BasisLabel& a : gens) {
    for (const BasisLabel& b : gens) {
      ++report.pairs_checked;
      PolyMatrix expected = PolyMatrix::zero();
      for (const auto& [w, c] : g.bracket_basis(a, b))
        expected = expected.add(realize(w).scale(c));
      PolyMatrix actual = commutator(realize(a), realize(b));
      if (!(actual == expected)) {
        report.violations.push_back("[" + to_string(a) + ", " + to_string(b) +
                                    "] disagrees with the matrix commutator");
      }
      if (!in_model_subalgebra(actual)) {
        report.violations.push_back("[" + to_string(a) + ", " + to_string(b) +
                                    "] leaves the model subalgebra");
      }
    }
  }
  return report;
}

}  // namespace ncalg
