#include "ncalg/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncalg {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Tok {
  enum Kind { Ident, Number, Plus, Minus, Star, Caret, Slash, End } kind = End;
  std::string text;
  int col = 0;  // 1-based within the source line
};

std::vector<Tok> lex_poly(std::string_view s, int line, int col_offset) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = col_offset + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      toks.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      toks.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok::Kind kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    toks.push_back({kind, std::string(1, c), col});
    ++i;
  }
  toks.push_back({Tok::End, "", col_offset + static_cast<int>(s.size())});
  return toks;
}

class PolyParser {
 public:
  PolyParser(std::vector<Tok> toks, const Alphabet& ab, int line)
      : toks_(std::move(toks)), ab_(ab), line_(line) {}

  NcPoly parse() {
    NcPoly poly;
    Rational sign = 1;
    if (peek().kind == Tok::Plus) {
      next();
    } else if (peek().kind == Tok::Minus) {
      sign = -1;
      next();
    }
    while (true) {
      parse_term(poly, sign);
      if (peek().kind == Tok::End) break;
      if (peek().kind == Tok::Plus) {
        sign = 1;
      } else if (peek().kind == Tok::Minus) {
        sign = -1;
      } else {
        fail("expected '+' or '-' between terms");
      }
      next();
    }
    return poly;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().col); }

  BigInt parse_integer() {
    if (peek().kind != Tok::Number) fail("expected a number");
    return BigInt(next().text);
  }

  void parse_term(NcPoly& poly, const Rational& sign) {
    Rational coeff = 1;
    bool have_word = false;
    std::vector<Letter> letters;

    if (peek().kind == Tok::Number) {
      BigInt num = parse_integer();
      BigInt den = 1;
      if (peek().kind == Tok::Slash) {
        next();
        den = parse_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      if (peek().kind == Tok::Star) {
        next();
        have_word = true;  // a word must follow the coefficient
      }
    } else {
      have_word = true;
    }

    if (have_word) {
      while (true) {
        if (peek().kind != Tok::Ident) fail("expected a generator name");
        const Tok& t = next();
        auto idx = ab_.index_of(t.text);
        if (!idx) throw ParseError("unknown generator '" + t.text + "'", line_, t.col);
        long long exp = 1;
        if (peek().kind == Tok::Caret) {
          next();
          if (peek().kind != Tok::Number) fail("expected an exponent");
          exp = std::stoll(next().text);
        }
        for (long long k = 0; k < exp; ++k) letters.push_back(static_cast<Letter>(*idx));
        if (peek().kind != Tok::Star) break;
        next();
      }
    }
    poly.add_term(Word(std::move(letters)), sign * coeff);
  }

  std::vector<Tok> toks_;
  const Alphabet& ab_;
  int line_;
  std::size_t pos_ = 0;
};

NcPoly parse_poly_at(std::string_view text, const Alphabet& ab, int line, int col_offset) {
  PolyParser parser(lex_poly(text, line, col_offset), ab, line);
  return parser.parse();
}

// "lhs = rhs" sugar: at most one '=', meaning lhs - rhs.
NcPoly parse_relation_text(std::string_view text, const Alphabet& ab, int line, int col_offset) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) return parse_poly_at(text, ab, line, col_offset);
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '=' in a relation", line,
                     col_offset + static_cast<int>(text.find('=', eq + 1)));
  NcPoly lhs = parse_poly_at(text.substr(0, eq), ab, line, col_offset);
  NcPoly rhs = parse_poly_at(text.substr(eq + 1), ab, line, col_offset + static_cast<int>(eq) + 1);
  return lhs - rhs;
}

struct Line {
  int number;
  std::string content;  // comment-stripped, untrimmed (for column numbers)
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string content(text.substr(start, end - start));
    if (auto hash = content.find('#'); hash != std::string::npos) content.resize(hash);
    if (!trim(content).empty()) out.push_back({number, std::move(content)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string msg, int line_, int col_)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                         ": " + msg),
      line(line_),
      col(col_) {}

NcPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  return parse_poly_at(text, alphabet, 1, 1);
}

ParseResult parse_presentation(std::string_view text) {
  ParseResult result;
  Presentation& p = result.presentation;
  bool have_gens = false, have_order = false, have_name = false;

  for (const Line& line : content_lines(text)) {
    std::size_t colon = line.content.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'directive: ...'", line.number, 1);
    std::string directive = trim(line.content.substr(0, colon));
    std::string rest = line.content.substr(colon + 1);
    int rest_col = static_cast<int>(colon) + 2;

    if (directive == "name") {
      if (have_name) throw ParseError("duplicate name line", line.number, 1);
      have_name = true;
      p.name = trim(rest);
      if (p.name.empty()) throw ParseError("empty name", line.number, rest_col);
    } else if (directive == "generators") {
      if (have_gens) throw ParseError("duplicate generators line", line.number, 1);
      std::vector<Generator> gens;
      std::istringstream in(rest);
      std::string entry;
      while (in >> entry) {
        std::string gname = entry;
        int degree = 1;
        if (auto sep = entry.find(':'); sep != std::string::npos) {
          gname = entry.substr(0, sep);
          std::string deg = entry.substr(sep + 1);
          if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad degree in '" + entry + "'", line.number, rest_col);
          degree = std::stoi(deg);
        }
        if (!is_ident(gname))
          throw ParseError("bad generator name '" + gname + "'", line.number, rest_col);
        gens.push_back({gname, degree});
      }
      if (gens.empty()) throw ParseError("generators: with no entries", line.number, rest_col);
      try {
        p.alphabet = Alphabet(std::move(gens));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line.number, rest_col);
      }
      have_gens = true;
    } else if (directive == "order") {
      if (have_order) throw ParseError("duplicate order line", line.number, 1);
      if (!have_gens)
        throw ParseError("order must come after generators", line.number, 1);
      if (!p.relators.empty())
        throw ParseError("order must come before relators", line.number, 1);
      have_order = true;
      std::istringstream in(rest);
      std::string kind;
      in >> kind;
      if (kind == "deglex") {
        p.order_kind = OrderKind::deglex;
      } else if (kind == "shortlex") {
        p.order_kind = OrderKind::shortlex;
      } else {
        throw ParseError("unknown order kind '" + kind + "'", line.number, rest_col);
      }
      std::string chain_text;
      std::getline(in, chain_text);
      chain_text = trim(chain_text);
      if (!chain_text.empty()) {
        // The precedence chain re-orders the alphabet.
        std::vector<std::string> names;
        std::size_t start = 0;
        while (true) {
          std::size_t lt = chain_text.find('<', start);
          std::string piece = trim(lt == std::string::npos ? chain_text.substr(start)
                                                           : chain_text.substr(start, lt - start));
          names.push_back(piece);
          if (lt == std::string::npos) break;
          start = lt + 1;
        }
        if (names.size() != p.alphabet.size())
          throw ParseError("order chain must list every generator", line.number, rest_col);
        std::vector<Generator> reordered;
        for (const std::string& n : names) {
          auto idx = p.alphabet.index_of(n);
          if (!idx) throw ParseError("unknown generator '" + n + "' in order chain",
                                     line.number, rest_col);
          reordered.push_back(p.alphabet.gen(*idx));
        }
        try {
          p.alphabet = Alphabet(std::move(reordered));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line.number, rest_col);
        }
      }
    } else if (directive == "relator") {
      if (!have_gens)
        throw ParseError("generators must be declared before relators", line.number, 1);
      NcPoly f = parse_relation_text(rest, p.alphabet, line.number, rest_col);
      if (f.is_zero())
        result.warnings.push_back("line " + std::to_string(line.number) +
                                  ": zero relator (vacuous)");
      p.relators.push_back(std::move(f));
    } else {
      throw ParseError("unknown directive '" + directive + "'", line.number, 1);
    }
  }
  if (!have_gens) throw ParseError("missing generators line", 1, 1);
  return result;
}

std::string print_presentation(const Presentation& p) {
  std::string out;
  if (!p.name.empty()) out += "name: " + p.name + "\n";
  out += "generators:";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i)
    out += " " + p.alphabet.name(i) + ":" + std::to_string(p.alphabet.degree(i));
  out += "\n";
  out += "order: ";
  out += p.order_kind == OrderKind::deglex ? "deglex" : "shortlex";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i)
    out += (i == 0 ? " " : " < ") + p.alphabet.name(i);
  out += "\n";
  for (const NcPoly& f : p.relators) out += "relator: " + to_string(f, p.alphabet) + "\n";
  return out;
}

std::vector<NamedRelationLine> parse_named_relations(std::string_view text,
                                                     const Alphabet& alphabet) {
  std::vector<NamedRelationLine> out;
  for (const Line& line : content_lines(text)) {
    NamedRelationLine item;
    item.line = line.number;
    std::size_t colon = line.content.find(':');
    if (colon == std::string::npos) {
      item.name = trim(line.content);
      item.error = "missing ':' separator";
      out.push_back(std::move(item));
      continue;
    }
    item.name = trim(line.content.substr(0, colon));
    if (item.name.empty()) {
      item.error = "empty relation name";
      out.push_back(std::move(item));
      continue;
    }
    try {
      item.poly = parse_relation_text(line.content.substr(colon + 1), alphabet, line.number,
                                      static_cast<int>(colon) + 2);
    } catch (const ParseError& e) {
      item.error = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

Presentation builtin_U() {
  Presentation p;
  p.name = "U";
  p.alphabet = Alphabet({{"x", 1}, {"y", 1}});
  p.order_kind = OrderKind::deglex;
  p.relators.push_back(parse_poly("x^3*y - 3*x^2*y*x + 3*x*y*x^2 - y*x^3", p.alphabet));
  p.relators.push_back(parse_poly("y^3*x - 3*y^2*x*y + 3*y*x*y^2 - x*y^3", p.alphabet));
  return p;
}

Presentation builtin_A() {
  Presentation p;
  p.name = "A";
  p.alphabet = Alphabet({{"a", 1}, {"b", 1}, {"c", 1}});
  p.order_kind = OrderKind::shortlex;
  for (const char* rel : {"b^2*a - a*b^2", "b^2*c - a*c*a", "a*c*c", "a*b*a", "a*b*c",
                          "c*b*a", "c*b*c"})
    p.relators.push_back(parse_poly(rel, p.alphabet));
  return p;
}

ParseResult load_presentation(const std::string& spec) {
  if (spec == "builtin:U") return {builtin_U(), {}};
  if (spec == "builtin:A") return {builtin_A(), {}};
  if (spec == "builtin:L")
    throw std::invalid_argument(
        "builtin:L is the Lie algebra; use lie-check or pbw-check instead");
  if (spec.rfind("builtin:", 0) == 0)
    throw std::invalid_argument("unknown builtin '" + spec + "'");
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open presentation file: " + spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

}  // namespace ncalg
