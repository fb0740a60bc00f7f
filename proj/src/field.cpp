#include "syzygy/field.hpp"

namespace syzygy {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) {
    throw InvalidArgumentError("characteristic " + std::to_string(p) + " must be below 2^31");
  }
  if (!is_prime(p)) {
    throw InvalidArgumentError("characteristic " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error("division by zero in " + name());
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) {
    throw InvalidArgumentError("coefficient " + q.get_str() + " has a denominator divisible by " +
                               std::to_string(p_));
  }
  return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

std::string PrimeField::to_string(Element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error("division by zero in QQ");
  return Element(1) / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
  if (sgn(b) == 0) throw Error("division by zero in QQ");
  return a / b;
}

}  // namespace syzygy
