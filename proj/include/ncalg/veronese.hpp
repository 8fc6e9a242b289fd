#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/growth.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/presentation.hpp"

namespace ncalg {

/// Degree-d generator of the Veronese subalgebra, remembering its source
/// word. For a two-letter source alphabet the names follow the uppercase
/// binary scheme (x4 = X8, yx3 = Y8, ...); otherwise the source spelling is
/// uppercased.
struct VeroneseLetter {
  Word source;
  std::string name;

  bool operator==(const VeroneseLetter&) const = default;
};

/// Quadratization of a presentation: one letter per degree-d word, linear
/// relations from products landing in degree d, quadratic relations from
/// degree 2d split down the middle. Letters are indexed in increasing
/// source-word order, so the letter alphabet order mirrors the source order.
struct QuadPresentation {
  Presentation source;
  int d = 1;
  std::vector<VeroneseLetter> letters;
  Alphabet letter_alphabet;  // one degree-1 generator per letter
  std::vector<NcPoly> linear_relations;     // letter-degree 1
  std::vector<NcPoly> quadratic_relations;  // letter-degree 2
  /// Removed letters with their substitutions over the kept letters
  /// (possibly zero); empty until eliminate_linear has run.
  std::vector<std::pair<VeroneseLetter, NcPoly>> eliminated;

  std::size_t letter_count() const { return letters.size(); }
  /// The quadratization viewed as a presentation in its own right.
  Presentation as_presentation() const;
};

/// Regrades a dimension series: (h_0, h_d, h_2d, ..., h_dM).
DimensionSeries veronese_dims(const DimensionSeries& h, int d, int M);

/// Builds letters and the full relation sets from every product v*f_i*w of
/// the appropriate degrees. Requires all generators of degree 1 and, for
/// every relator degree d_i, either d_i <= d or d_i = 2d.
QuadPresentation veronese_presentation(const Presentation& pres, int d);

/// Gaussian elimination over the linear relations; the pivot of each
/// relation is its order-largest letter, which is removed and substituted
/// into the quadratic relations. Idempotent.
QuadPresentation eliminate_linear(const QuadPresentation& qp);

struct RankReport {
  std::size_t letter_count = 0;
  std::size_t rank = 0;
  BigInt h2d = 0;
  BigInt expected = 0;  // letter_count^2 - h2d
  bool ok() const { return BigInt(rank) == expected; }
};

/// Rank over Q of the quadratic relations inside the letter-pair space,
/// compared against letter_count^2 - h2d.
RankReport relation_rank(const QuadPresentation& qp, const BigInt& h2d);

struct QuadraticityRow {
  int m = 0;           // letter degree
  BigInt counted = 0;  // normal-word count of the completed quadratization
  BigInt expected = 0; // h_{d m}
};

struct QuadraticityReport {
  std::vector<QuadraticityRow> rows;
  bool ok = true;
};

/// Completes the quadratization as a presentation of its own and compares
/// normal-word counts against h_{d m} for m <= M. Requires h known through
/// d*M and M >= 3.
QuadraticityReport verify_quadraticity(const QuadPresentation& qp, const DimensionSeries& h,
                                       int d, int M);

struct AppendixVerdict {
  std::string name;
  int line = 0;
  bool parsed = false;
  bool verified = false;
  std::string detail;
};

struct AppendixReport {
  std::vector<AppendixVerdict> verdicts;
  int parsed_count = 0;
  int verified_count = 0;
  int total = 0;
};

/// Union of kept and eliminated letters in pre-elimination order: the
/// alphabet the appendix data file is written against.
Alphabet appendix_alphabet(const QuadPresentation& qp);

/// Checks each listed relation against a post-elimination quadratization:
/// linear lines must be consistent with the eliminated mapping, quadratic
/// lines must lie in the span of the computed quadratic relations (rank
/// unchanged upon adjoining). Unparseable lines are flagged, not fatal.
AppendixReport appendix_reconcile(const QuadPresentation& qp,
                                  const std::vector<NamedRelationLine>& listed);

namespace detail {
/// Pair-enumeration kernel behind veronese_presentation; the parallel path
/// is the default, the serial path is the reference for tests and benchmarks.
std::vector<NcPoly> veronese_quadratic_relations(const Presentation& pres, int d, bool parallel);
}  // namespace detail

}  // namespace ncalg
