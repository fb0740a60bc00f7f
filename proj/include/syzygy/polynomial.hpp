#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"
#include "syzygy/ring.hpp"

namespace syzygy {

// Result of asking a polynomial for its degree.
struct HomogeneousDegree {
  enum class Status { homogeneous, inhomogeneous, zero };
  Status status = Status::zero;
  int degree = 0;

  bool has_value() const { return status == Status::homogeneous; }
  bool is_zero() const { return status == Status::zero; }
  int value() const {
    if (!has_value()) throw DegreeError("polynomial is not a nonzero homogeneous form");
    return degree;
  }
};

// Sparse polynomial: nonzero terms, strictly descending in the ring order.
template <class K>
class Polynomial {
 public:
  using Coef = typename K::Element;
  struct Term {
    Coef coef;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> terms);
  // Caller guarantees the canonical-form invariant.
  static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, Coef c);
  static Polynomial monomial(RingPtr<K> ring, Coef c, Monomial m);
  static Polynomial variable(RingPtr<K> ring, std::size_t index);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Coef& lead_coefficient() const { return terms_.front().coef; }

  // Nonzero constant, i.e. a unit of the ring.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }
  // The constant coefficient (zero when absent).
  Coef constant_coefficient() const;

  HomogeneousDegree homogeneous_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return p.combine(q, false); }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p.combine(q, true); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) { return p.multiply(q); }
  Polynomial& operator+=(const Polynomial& q) { return *this = combine(q, false); }
  Polynomial& operator-=(const Polynomial& q) { return *this = combine(q, true); }

  Polynomial scaled(const Coef& c) const;
  Polynomial times_term(const Coef& c, const Monomial& m) const;
  // Lead coefficient scaled to one; zero stays zero.
  Polynomial monic() const;

  Coef evaluate(std::span<const Coef> point) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    if (p.terms_.empty()) return true;
    if (!p.ring_->same_as(*q.ring_)) return false;
    const K& f = p.ring_->field();
    for (std::size_t i = 0; i < p.terms_.size(); ++i) {
      if (!(p.terms_[i].mono == q.terms_[i].mono) ||
          !f.equal(p.terms_[i].coef, q.terms_[i].coef)) {
        return false;
      }
    }
    return true;
  }

 private:
  void require_same_ring(const Polynomial& q) const {
    if (!ring_ || !q.ring_ || !ring_->same_as(*q.ring_)) {
      throw RingMismatchError("polynomials belong to different rings");
    }
  }
  Polynomial combine(const Polynomial& q, bool subtract) const;
  Polynomial multiply(const Polynomial& q) const;

  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

template <class K>
Polynomial<K> Polynomial<K>::from_terms(RingPtr<K> ring, std::vector<Term> terms) {
  const Ring<K>& r = *ring;
  const K& f = r.field();
  for (const auto& t : terms) {
    if (t.mono.size() != r.nvars()) throw DimensionError("monomial length differs from ring");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = f.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && f.is_zero(out.back().coef)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && f.is_zero(out.back().coef)) out.pop_back();
  return from_sorted_terms(std::move(ring), std::move(out));
}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, Coef c) {
  Monomial one = ring->one();
  return monomial(std::move(ring), std::move(c), std::move(one));
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(RingPtr<K> ring, Coef c, Monomial m) {
  if (m.size() != ring->nvars()) throw DimensionError("monomial length differs from ring");
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  auto one = ring->field().one();
  return monomial(std::move(ring), std::move(one), std::move(m));
}

template <class K>
typename Polynomial<K>::Coef Polynomial<K>::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return ring_ ? ring_->field().zero() : Coef{};
}

template <class K>
HomogeneousDegree Polynomial<K>::homogeneous_degree() const {
  if (terms_.empty()) return {HomogeneousDegree::Status::zero, 0};
  const int d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return {HomogeneousDegree::Status::inhomogeneous, 0};
  }
  return {HomogeneousDegree::Status::homogeneous, d};
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = ring_->field().neg(t.coef);
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::combine(const Polynomial& q, bool subtract) const {
  require_same_ring(q);
  const Ring<K>& r = *ring_;
  const K& f = r.field();
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < q.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == q.terms_.size()) {
      c = 1;
    } else {
      const auto ord = r.compare(terms_[i].mono, q.terms_[j].mono);
      c = ord > 0 ? 1 : (ord < 0 ? -1 : 0);
    }
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      const auto& t = q.terms_[j++];
      out.push_back({subtract ? f.neg(t.coef) : t.coef, t.mono});
    } else {
      Coef s = subtract ? f.sub(terms_[i].coef, q.terms_[j].coef)
                        : f.add(terms_[i].coef, q.terms_[j].coef);
      if (!f.is_zero(s)) out.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return from_sorted_terms(ring_, std::move(out));
}

template <class K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& q) const {
  require_same_ring(q);
  if (is_zero() || q.is_zero()) return Polynomial(ring_);
  const K& f = ring_->field();
  if (q.terms_.size() == 1) return times_term(q.terms_[0].coef, q.terms_[0].mono);
  if (terms_.size() == 1) return q.times_term(terms_[0].coef, terms_[0].mono);
  std::vector<Term> all;
  all.reserve(terms_.size() * q.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : q.terms_) all.push_back({f.mul(a.coef, b.coef), a.mono * b.mono});
  }
  return from_terms(ring_, std::move(all));
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const Coef& c) const {
  const K& f = ring_->field();
  if (f.is_zero(c)) return Polynomial(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = f.mul(t.coef, c);
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::times_term(const Coef& c, const Monomial& m) const {
  const K& f = ring_->field();
  if (f.is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({f.mul(t.coef, c), t.mono * m});
  // Multiplication by a monomial preserves the order.
  return from_sorted_terms(ring_, std::move(out));
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coefficient()));
}

template <class K>
typename Polynomial<K>::Coef Polynomial<K>::evaluate(std::span<const Coef> point) const {
  const K& f = ring_->field();
  if (point.size() != ring_->nvars()) throw DimensionError("evaluation point has wrong length");
  Coef sum = f.zero();
  for (const auto& t : terms_) {
    Coef v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.mono[i]; ++e) v = f.mul(v, point[i]);
    }
    sum = f.add(sum, v);
  }
  return sum;
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  const K& f = ring_->field();
  const auto& names = ring_->variables();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool negative = f.is_negative(t.coef);
    const auto magnitude = negative ? f.neg(t.coef) : t.coef;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = f.is_one(magnitude);
    if (t.mono.is_one()) {
      out += f.to_string(magnitude);
    } else {
      if (!unit) out += f.to_string(magnitude) + '*';
      out += t.mono.to_string(names);
    }
  }
  return out;
}

}  // namespace syzygy
