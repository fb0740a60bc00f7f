#include "syzygy/ring.hpp"

#include <set>

namespace syzygy {

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

namespace {

void validate_variables(const std::vector<std::string>& variables) {
  if (variables.empty()) throw InvalidArgumentError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw InvalidArgumentError("empty variable name");
    if (!seen.insert(v).second) throw InvalidArgumentError("duplicate variable name '" + v + "'");
  }
}

}  // namespace

void RingSpec::validate() const {
  validate_variables(variables);
  if (field.kind == FieldSpec::Kind::prime) PrimeField{field.characteristic};
}

template <class K>
Ring<K>::Ring(K field, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(field)), variables_(std::move(variables)), order_(order) {
  validate_variables(variables_);
}

template class Ring<PrimeField>;
template class Ring<RationalField>;

}  // namespace syzygy
