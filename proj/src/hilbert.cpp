#include "syzygy/hilbert.hpp"

#include <algorithm>

#include "syzygy/groebner.hpp"

namespace syzygy {

namespace {

void trim(QPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPolynomial add(QPolynomial a, const QPolynomial& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

QPolynomial multiply(const QPolynomial& a, const QPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  QPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// Pivot recursion: N(M) = N(M + (x)) + q N(M : x) for a variable x that
// occurs in a generator sharing support with another one.
QPolynomial numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  // Pairwise coprime generators form a regular sequence.
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < nvars; ++i) count[i] += g[i] > 0 ? 1 : 0;
  }
  const auto best = std::max_element(count.begin(), count.end());
  if (*best <= 1) {
    QPolynomial out{1};
    for (const auto& g : gens) {
      QPolynomial f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() = -1;
      out = multiply(out, f);
    }
    return out;
  }
  const auto x = static_cast<std::size_t>(best - count.begin());
  const Monomial var = Monomial::variable(nvars, x);
  std::vector<Monomial> plus{var};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[x] == 0) plus.push_back(g);
    colon.push_back(g[x] > 0 ? g / var : g);
  }
  return add(numerator(std::move(plus), nvars), numerator(std::move(colon), nvars), 1);
}

}  // namespace

std::string to_string(const QPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const std::int64_t c = p[i];
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i > 0) out += (mag != 1 ? "*q" : "q") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

QPolynomial hilbert_numerator(const std::vector<Monomial>& generators, std::size_t nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw DimensionError("monomial length differs from ring");
  }
  return numerator(generators, nvars);
}

template <class K>
QPolynomial hilbert_numerator(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) return {1};
  const auto gb = buchberger(ring, gens);
  return hilbert_numerator(initial_ideal(gb), ring->nvars());
}

QPolynomial k_polynomial(const BettiTable& table) {
  QPolynomial out;
  for (const auto& [key, count] : table.entries()) {
    const auto [a, j] = key;
    if (static_cast<std::size_t>(j) >= out.size()) out.resize(static_cast<std::size_t>(j) + 1, 0);
    const auto c = static_cast<std::int64_t>(count);
    out[static_cast<std::size_t>(j)] += a % 2 == 0 ? c : -c;
  }
  trim(out);
  return out;
}

template <class K>
bool hilbert_consistency(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators,
                         const BettiTable& table) {
  return hilbert_numerator(ring, generators) == k_polynomial(table);
}

int codimension(const QPolynomial& numerator) {
  if (numerator.empty()) throw InvalidArgumentError("zero Hilbert numerator (improper ideal)");
  QPolynomial p = numerator;
  int c = 0;
  for (;;) {
    std::int64_t at_one = 0;
    for (auto v : p) at_one += v;
    if (at_one != 0) return c;
    // p = (1 - q) r: r_i = sum_{k <= i} p_k.
    QPolynomial r(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      r[i] = acc;
    }
    trim(r);
    p = std::move(r);
    ++c;
  }
}

template QPolynomial hilbert_numerator(const RingPtr<PrimeField>&,
                                       const std::vector<Polynomial<PrimeField>>&);
template QPolynomial hilbert_numerator(const RingPtr<RationalField>&,
                                       const std::vector<Polynomial<RationalField>>&);
template bool hilbert_consistency(const RingPtr<PrimeField>&,
                                  const std::vector<Polynomial<PrimeField>>&, const BettiTable&);
template bool hilbert_consistency(const RingPtr<RationalField>&,
                                  const std::vector<Polynomial<RationalField>>&, const BettiTable&);

}  // namespace syzygy
