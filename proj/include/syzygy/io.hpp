#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "syzygy/betti.hpp"
#include "syzygy/ring.hpp"

namespace syzygy {

class ParseError : public Error {
 public:
  enum class Kind {
    unexpected_token,
    unknown_variable,
    malformed_exponent,
    duplicate_ring,
    invalid_ring,  // bad characteristic, repeated or reserved variable name
  };

  ParseError(Kind kind, int line, int column, std::string found, std::vector<std::string> expected,
             std::string detail = {});

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string found_;
  std::vector<std::string> expected_;
};

std::string to_string(ParseError::Kind kind);

// A polynomial exactly as written: rational coefficients, terms in source
// order, repeated monomials not yet merged.
struct RawPolynomial {
  struct Term {
    mpq_class coef;
    Monomial mono;
  };
  std::vector<Term> terms;
};

struct Expectation {
  // Maximal shifts T_1..T_s; a leading T_0 = 0 in the file is dropped.
  std::vector<int> T;
  std::optional<std::vector<int>> t;
};

struct InputDocument {
  RingSpec ring;
  std::vector<RawPolynomial> ideal;
  std::optional<Expectation> expect;
};

// document := ring-decl ideal-decl [expect-decl]; see docs/FORMAT.md.
InputDocument parse(std::string_view text);

// Generators over `ring` (which must have the document's variables).
// Zero generators are dropped. Over GF(p) a denominator divisible by p
// raises InvalidArgumentError.
template <class K>
std::vector<Polynomial<K>> materialize(const InputDocument& doc, const RingPtr<K>& ring);

// Parses a single polynomial over the given variables.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring);

// Grid with one column per homological degree a and one row per j - a,
// "." for zero, a "total:" row, then "t = (...)" and "T = (...)".
std::string print_betti(const BettiTable& table);

std::string format_int_list(const std::vector<int>& values);

}  // namespace syzygy
