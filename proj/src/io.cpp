#include "syzygy/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace syzygy {

namespace {

std::string describe(ParseError::Kind kind, int line, int column, const std::string& found,
                     const std::vector<std::string>& expected, const std::string& detail) {
  std::string msg = to_string(kind) + " at " + std::to_string(line) + ":" + std::to_string(column);
  msg += ": found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
  if (!detail.empty()) msg += " (" + detail + ")";
  if (!expected.empty()) {
    msg += "; expected one of:";
    for (const auto& e : expected) msg += " " + e;
  }
  return msg;
}

const std::set<std::string> kReserved = {"ring", "ideal", "order", "expect"};

struct Token {
  enum class Type { ident, integer, punct, end };
  Type type;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, col = column;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Type::ident, std::string(text.substr(i, j - i)), l, col});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::integer, std::string(text.substr(i, j - i)), l, col});
    } else if (std::string_view("()[],*^+-/=").find(c) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Token::Type::punct, std::string(1, c), l, col});
    } else {
      throw ParseError(ParseError::Kind::unexpected_token, l, col, std::string(1, c), {},
                       "unrecognized character");
    }
    advance(j - i);
  }
  out.push_back({Token::Type::end, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  InputDocument document() {
    InputDocument doc;
    if (!is_word("ring")) fail({"ring"});
    ring_decl(doc.ring);
    if (is_word("ring")) duplicate_ring();
    if (!is_word("ideal")) fail({"ideal"});
    ++pos_;
    for (;;) {
      doc.ideal.push_back(polynomial(doc.ring.variables));
      if (is_punct(",")) {
        ++pos_;
        continue;
      }
      break;
    }
    if (is_word("expect")) {
      doc.expect = expect_decl();
    }
    if (is_word("ring")) duplicate_ring();
    if (peek().type != Token::Type::end) fail({"','", "'+'", "'-'", "'*'", "expect", "end of input"});
    return doc;
  }

  RawPolynomial lone_polynomial(const std::vector<std::string>& vars) {
    RawPolynomial p = polynomial(vars);
    if (peek().type != Token::Type::end) fail({"'+'", "'-'", "'*'", "end of input"});
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_word(std::string_view w) const {
    return peek().type == Token::Type::ident && peek().text == w;
  }
  bool is_punct(std::string_view p) const {
    return peek().type == Token::Type::punct && peek().text == p;
  }

  [[noreturn]] void fail(std::vector<std::string> expected,
                         ParseError::Kind kind = ParseError::Kind::unexpected_token,
                         std::string detail = {}) const {
    const Token& t = peek();
    throw ParseError(kind, t.line, t.column, t.text, std::move(expected), std::move(detail));
  }
  [[noreturn]] void duplicate_ring() const {
    fail({}, ParseError::Kind::duplicate_ring, "only one ring declaration is allowed");
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail({"'" + std::string(p) + "'"});
    ++pos_;
  }

  std::uint64_t integer(std::uint64_t limit, ParseError::Kind kind = ParseError::Kind::unexpected_token) {
    if (peek().type != Token::Type::integer) fail({"integer"}, kind);
    const std::string& s = peek().text;
    std::uint64_t v = 0;
    for (char c : s) {
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > limit) fail({"integer <= " + std::to_string(limit)}, kind, "value too large");
    }
    ++pos_;
    return v;
  }

  void ring_decl(RingSpec& ring) {
    ++pos_;  // "ring"
    if (is_word("QQ")) {
      ring.field = FieldSpec::rationals();
      ++pos_;
    } else if (is_word("GF")) {
      ++pos_;
      expect_punct("(");
      const Token at = peek();
      const auto p = integer(std::numeric_limits<std::uint32_t>::max());
      if (p >= (1ull << 31) || !is_prime(p)) {
        throw ParseError(ParseError::Kind::invalid_ring, at.line, at.column, at.text,
                         {"prime below 2^31"}, "characteristic must be a prime below 2^31");
      }
      ring.field = FieldSpec::prime(static_cast<std::uint32_t>(p));
      expect_punct(")");
    } else if (!is_punct("[")) {
      fail({"GF", "QQ", "'['"});
    }
    expect_punct("[");
    for (;;) {
      if (peek().type != Token::Type::ident) fail({"variable name"});
      const Token& t = peek();
      if (kReserved.count(t.text)) {
        fail({"variable name"}, ParseError::Kind::invalid_ring, "reserved word");
      }
      if (std::find(ring.variables.begin(), ring.variables.end(), t.text) != ring.variables.end()) {
        fail({"variable name"}, ParseError::Kind::invalid_ring, "repeated variable");
      }
      ring.variables.push_back(t.text);
      ++pos_;
      if (is_punct(",")) {
        ++pos_;
        continue;
      }
      if (is_punct("]")) break;
      fail({"','", "']'"});
    }
    ++pos_;
    if (is_word("order")) {
      ++pos_;
      if (is_word("grevlex")) {
        ring.order = MonomialOrder::grevlex;
      } else if (is_word("lex")) {
        ring.order = MonomialOrder::lex;
      } else {
        fail({"grevlex", "lex"});
      }
      ++pos_;
    }
  }

  // poly := ["+"|"-"] term (("+"|"-") term)*
  RawPolynomial polynomial(const std::vector<std::string>& vars) {
    RawPolynomial p;
    bool negative = false;
    if (is_punct("+") || is_punct("-")) {
      negative = peek().text == "-";
      ++pos_;
    }
    for (;;) {
      auto t = term(vars);
      if (negative) t.coef = -t.coef;
      p.terms.push_back(std::move(t));
      if (is_punct("+") || is_punct("-")) {
        negative = peek().text == "-";
        ++pos_;
        continue;
      }
      break;
    }
    return p;
  }

  bool at_factor() const { return peek().type == Token::Type::ident && !kReserved.count(peek().text); }

  // term := coefficient | [coefficient ["*"]] factor ("*" factor)*
  RawPolynomial::Term term(const std::vector<std::string>& vars) {
    RawPolynomial::Term t{mpq_class(1), Monomial(vars.size())};
    if (peek().type == Token::Type::integer) {
      mpz_class num(peek().text);
      ++pos_;
      mpz_class den(1);
      if (is_punct("/")) {
        ++pos_;
        if (peek().type != Token::Type::integer) fail({"integer"});
        den = mpz_class(peek().text);
        if (den == 0) fail({"nonzero integer"}, ParseError::Kind::unexpected_token, "zero denominator");
        ++pos_;
      }
      t.coef = mpq_class(num, den);
      t.coef.canonicalize();
      if (is_punct("*")) {
        ++pos_;
        if (!at_factor()) fail({"variable name"});
      } else if (!at_factor()) {
        return t;
      }
    } else if (!at_factor()) {
      fail({"integer", "variable name"});
    }
    for (;;) {
      t.mono *= factor(vars);
      if (is_punct("*")) {
        ++pos_;
        if (!at_factor()) fail({"variable name"});
        continue;
      }
      break;
    }
    return t;
  }

  // factor := ident ["^" integer]
  Monomial factor(const std::vector<std::string>& vars) {
    const auto it = std::find(vars.begin(), vars.end(), peek().text);
    if (it == vars.end()) {
      fail(vars, ParseError::Kind::unknown_variable,
           "'" + peek().text + "' is not a ring variable (write products with '*')");
    }
    ++pos_;
    const auto index = static_cast<std::size_t>(it - vars.begin());
    Monomial::Exponent e = 1;
    if (is_punct("^")) {
      ++pos_;
      e = static_cast<Monomial::Exponent>(integer(std::numeric_limits<std::int32_t>::max() / 2,
                                                  ParseError::Kind::malformed_exponent));
    }
    return Monomial::variable(vars.size(), index, e);
  }

  std::vector<int> int_list() {
    expect_punct("(");
    std::vector<int> out;
    if (is_punct(")")) {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(static_cast<int>(integer(std::numeric_limits<std::int32_t>::max())));
      if (is_punct(",")) {
        ++pos_;
        continue;
      }
      expect_punct(")");
      return out;
    }
  }

  Expectation expect_decl() {
    ++pos_;  // "expect"
    Expectation e;
    if (!is_word("T")) fail({"T"});
    ++pos_;
    expect_punct("=");
    e.T = int_list();
    if (!e.T.empty() && e.T.front() == 0) e.T.erase(e.T.begin());
    if (is_word("t")) {
      ++pos_;
      expect_punct("=");
      auto t = int_list();
      if (!t.empty() && t.front() == 0) t.erase(t.begin());
      e.t = std::move(t);
    }
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <class K>
Polynomial<K> materialize_one(const RawPolynomial& raw, const RingPtr<K>& ring) {
  const K& field = ring->field();
  std::vector<typename Polynomial<K>::Term> terms;
  terms.reserve(raw.terms.size());
  for (const auto& t : raw.terms) terms.push_back({field.from_rational(t.coef), t.mono});
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

}  // namespace

ParseError::ParseError(Kind kind, int line, int column, std::string found,
                       std::vector<std::string> expected, std::string detail)
    : Error(describe(kind, line, column, found, expected, detail)),
      kind_(kind),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

std::string to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::unexpected_token: return "unexpected token";
    case ParseError::Kind::unknown_variable: return "unknown variable";
    case ParseError::Kind::malformed_exponent: return "malformed exponent";
    case ParseError::Kind::duplicate_ring: return "duplicate ring declaration";
    case ParseError::Kind::invalid_ring: return "invalid ring";
  }
  return "parse error";
}

InputDocument parse(std::string_view text) { return Parser(text).document(); }

template <class K>
std::vector<Polynomial<K>> materialize(const InputDocument& doc, const RingPtr<K>& ring) {
  if (ring->variables() != doc.ring.variables) {
    throw RingMismatchError("ring variables differ from the document's");
  }
  std::vector<Polynomial<K>> out;
  for (const auto& raw : doc.ideal) {
    auto p = materialize_one(raw, ring);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring) {
  return materialize_one(Parser(text).lone_polynomial(ring->variables()), ring);
}

std::string format_int_list(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string print_betti(const BettiTable& table) {
  const int s = table.projdim();
  int row_min = 0, row_max = 0;
  for (const auto& [key, count] : table.entries()) {
    row_min = std::min(row_min, key.second - key.first);
    row_max = std::max(row_max, key.second - key.first);
  }
  const auto totals = table.totals();
  std::vector<std::size_t> width(static_cast<std::size_t>(s) + 1, 1);
  for (int a = 0; a <= s; ++a) {
    auto& w = width[static_cast<std::size_t>(a)];
    w = std::max(w, std::to_string(a).size());
    w = std::max(w, std::to_string(totals[static_cast<std::size_t>(a)]).size());
  }
  std::size_t label = std::string("total:").size();
  for (int r = row_min; r <= row_max; ++r) label = std::max(label, std::to_string(r).size() + 1);

  auto pad = [](const std::string& s2, std::size_t w) {
    return std::string(w > s2.size() ? w - s2.size() : 0, ' ') + s2;
  };
  std::string out = std::string(label, ' ');
  for (int a = 0; a <= s; ++a) out += " " + pad(std::to_string(a), width[static_cast<std::size_t>(a)]);
  out += "\n" + pad("total:", label);
  for (int a = 0; a <= s; ++a) {
    out += " " + pad(std::to_string(totals[static_cast<std::size_t>(a)]), width[static_cast<std::size_t>(a)]);
  }
  out += "\n";
  for (int r = row_min; r <= row_max; ++r) {
    out += pad(std::to_string(r) + ":", label);
    for (int a = 0; a <= s; ++a) {
      const auto b = table(a, a + r);
      out += " " + pad(b ? std::to_string(b) : ".", width[static_cast<std::size_t>(a)]);
    }
    out += "\n";
  }
  out += "t = " + format_int_list(table.t()) + "\n";
  out += "T = " + format_int_list(table.T()) + "\n";
  return out;
}

template std::vector<Polynomial<PrimeField>> materialize(const InputDocument&,
                                                         const RingPtr<PrimeField>&);
template std::vector<Polynomial<RationalField>> materialize(const InputDocument&,
                                                            const RingPtr<RationalField>&);
template Polynomial<PrimeField> parse_polynomial(std::string_view, const RingPtr<PrimeField>&);
template Polynomial<RationalField> parse_polynomial(std::string_view,
                                                    const RingPtr<RationalField>&);

}  // namespace syzygy
