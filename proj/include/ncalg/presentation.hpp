#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/order.hpp"
#include "ncalg/poly.hpp"

namespace ncalg {

/// A finitely presented graded algebra: generators with degrees, a monomial
/// order kind (precedence is the alphabet order), and relators.
struct Presentation {
  std::string name;
  Alphabet alphabet;
  OrderKind order_kind = OrderKind::deglex;
  std::vector<NcPoly> relators;

  MonomialOrder order() const { return MonomialOrder(order_kind, alphabet); }
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col);
  int line;
  int col;
};

struct ParseResult {
  Presentation presentation;
  std::vector<std::string> warnings;
};

/// Line-oriented format:
///   # comment                     (also allowed after any content)
///   name: U                      (optional)
///   generators: x:1 y:1          (required; ":degree" defaults to 1)
///   order: deglex x < y          (optional; the chain, if given, sets the
///                                 precedence and must list every generator)
///   relator: x*y^3 - 3*y*x*y^2 + 3*y^2*x*y - y^3*x
///   relator: y*x^3 = 3*x*y*x^2 - 3*x^2*y*x + x^3*y     (LHS = RHS sugar)
/// Polynomials are sums of terms  [coefficient *] generator[^k] * ... ;
/// coefficients are integers or fractions p/q. A relator equal to zero is
/// accepted with a warning.
ParseResult parse_presentation(std::string_view text);

/// Canonical form whose reparse yields a structurally identical presentation.
std::string print_presentation(const Presentation& p);

/// One polynomial in the relator grammar over a known alphabet.
NcPoly parse_poly(std::string_view text, const Alphabet& alphabet);

struct NamedRelationLine {
  std::string name;
  int line = 0;
  std::optional<NcPoly> poly;  // empty iff the line failed to parse
  std::string error;
};

/// Data-file variant: every content line reads "name: poly" or
/// "name: lhs = rhs". A line that fails to parse is returned with its error
/// instead of aborting the run.
std::vector<NamedRelationLine> parse_named_relations(std::string_view text,
                                                     const Alphabet& alphabet);

Presentation builtin_U();
Presentation builtin_A();

/// Resolves "builtin:U" / "builtin:A" or reads and parses a file.
ParseResult load_presentation(const std::string& spec);

}  // namespace ncalg
