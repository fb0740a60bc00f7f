#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "syzygy/errors.hpp"

namespace syzygy {

// Z/pZ for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from_int(std::int64_t v) const;
  // Throws InvalidArgumentError when the denominator vanishes mod p.
  Element from_rational(const mpq_class& q) const;

  // Symmetric representative: residues above p/2 print as negatives.
  std::string to_string(Element a) const;
  bool is_negative(Element a) const { return a > p_ / 2; }

  Element random(std::mt19937_64& rng) const {
    return static_cast<Element>(rng() % p_);
  }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

// The rationals, backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  // Small integers in [-50, 50]; enough to hit generic points in tests.
  Element random(std::mt19937_64& rng) const {
    return Element(static_cast<long>(rng() % 101) - 50);
  }

  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime(std::uint64_t n);

}  // namespace syzygy
