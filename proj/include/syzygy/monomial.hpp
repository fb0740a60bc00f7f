#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace syzygy {

enum class MonomialOrder { grevlex, lex };

std::string to_string(MonomialOrder order);

// Exponent vector of a monomial in d variables. Total degree and a support
// bitmask are cached; both are maintained by every constructor.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  // The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::int32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  // True when *this divides `other`.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& b);
  // Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  void refresh();

  boost::container::small_vector<Exponent, 8> exps_;
  std::int32_t degree_ = 0;
  std::uint64_t support_ = 0;
};

// Total order on monomials of equal length. grevlex breaks degree ties by
// the last differing exponent (smaller wins); lex compares from x_1.
// Throws DimensionError on mismatched lengths.
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of total degree `degree` in `nvars` variables, in
// descending lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace syzygy
