#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/monomial.hpp"

namespace syzygy {

// Field-independent description of a coefficient field, as read from input.
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::prime;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;

  static FieldSpec prime(std::uint32_t p) { return {Kind::prime, p}; }
  static FieldSpec rationals() { return {Kind::rationals, 0}; }

  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Standard-graded polynomial ring k[x_1, ..., x_d]. Variable order in the
// list fixes x_1 > x_2 > ... for every monomial order.
struct RingSpec {
  FieldSpec field;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::grevlex;

  // Throws InvalidArgumentError on an empty, duplicated or blank name, and
  // on a non-prime characteristic.
  void validate() const;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

template <class K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex);

  const K& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  MonomialOrder order() const { return order_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return syzygy::compare(a, b, order_);
  }
  Monomial one() const { return Monomial(nvars()); }

  bool same_as(const Ring& other) const {
    return this == &other ||
           (field_ == other.field_ && variables_ == other.variables_ && order_ == other.order_);
  }

 private:
  K field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder::grevlex) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(variables), order);
}

// Same ring with a different monomial order.
template <class K>
RingPtr<K> with_order(const RingPtr<K>& ring, MonomialOrder order) {
  return make_ring(ring->field(), ring->variables(), order);
}

extern template class Ring<PrimeField>;
extern template class Ring<RationalField>;

}  // namespace syzygy
