#include "syzygy/monomial.hpp"

#include <algorithm>
#include <limits>

#include "syzygy/errors.hpp"

namespace syzygy {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw DimensionError("monomials of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

std::int32_t checked_sum(std::int64_t s) {
  if (s > std::numeric_limits<std::int32_t>::max()) {
    throw OverflowError("monomial exponent or degree exceeds 32 bits");
  }
  return static_cast<std::int32_t>(s);
}

}  // namespace

std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

Monomial::Monomial(std::size_t nvars) : exps_(nvars, 0) {}

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  refresh();
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) { refresh(); }

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.refresh();
  return m;
}

void Monomial::refresh() {
  std::int64_t deg = 0;
  support_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw DimensionError("negative exponent in monomial");
    deg += exps_[i];
    if (exps_[i] != 0) support_ |= std::uint64_t{1} << (i % 64);
  }
  degree_ = checked_sum(deg);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  if ((support_ & ~other.support_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((support_ & other.support_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r *= b;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& b) {
  require_same_length(*this, b);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] = checked_sum(std::int64_t{exps_[i]} + b.exps_[i]);
  }
  degree_ = checked_sum(std::int64_t{degree_} + b.degree_);
  support_ |= b.support_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  require_same_length(*this, divisor);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= divisor.exps_[i];
    if (r.exps_[i] < 0) throw DimensionError("monomial quotient is not exact");
  }
  r.degree_ = degree_ - divisor.degree_;
  r.support_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    if (r.exps_[i] != 0) r.support_ |= std::uint64_t{1} << (i % 64);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial r = a;
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = checked_sum(deg);
  r.support_ = a.support_ | b.support_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  require_same_length(a, b);
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = ea.size(); i-- > 0;) {
      if (ea[i] != eb[i]) return eb[i] <=> ea[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Monomial::Exponent> exps(nvars, 0);
  // Recursive fill: first variable takes the largest share first.
  auto fill = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == nvars) {
      exps[i] = remaining;
      out.emplace_back(std::span<const Monomial::Exponent>(exps));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  if (degree >= 0) fill(fill, 0, degree);
  return out;
}

}  // namespace syzygy
