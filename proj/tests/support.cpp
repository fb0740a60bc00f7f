#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace syzygy::test {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::vector<std::string> names(std::size_t nvars) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= nvars; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

constexpr std::size_t kMaxOracleColumns = 400;

}  // namespace

std::string fixture_path(const std::string& name) {
  return std::string(SYZYGY_FIXTURE_DIR) + "/" + name;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  // Echelon rows keyed by pivot column, each normalized to a leading one.
  std::map<std::size_t, std::vector<std::uint64_t>> echelon;
  for (auto& row : rows) {
    for (auto& [c, pivot] : echelon) {
      if (row[c] == 0) continue;
      const std::uint64_t f = p - row[c];
      for (std::size_t k = c; k < row.size(); ++k) row[k] = (row[k] + f * pivot[k]) % p;
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](std::uint64_t x) { return x != 0; });
    if (lead == row.end()) continue;
    const std::uint64_t inv = pow_mod(*lead, p - 2, p);
    for (auto& x : row) x = x * inv % p;
    echelon.emplace(static_cast<std::size_t>(lead - row.begin()), std::move(row));
  }
  return echelon.size();
}

namespace {

using Key = std::vector<int>;

Key key_of(const Monomial& m) { return Key(m.exponents().begin(), m.exponents().end()); }

// (S/I)_d over GF(p): a standard basis of monomials and, for every monomial
// of degree d, its coordinates in that basis.
struct Quotient {
  std::vector<Monomial> monos;
  std::map<Key, std::size_t> index;
  std::vector<std::size_t> standard;  // column indices of the basis
  std::vector<std::vector<std::uint64_t>> coords;

  std::size_t dim() const { return standard.size(); }
  const std::vector<std::uint64_t>& of(const Monomial& m) const { return coords[index.at(key_of(m))]; }
};

Quotient quotient(const std::vector<Polynomial<Fp>>& gens, std::size_t n, int d, std::uint64_t p) {
  Quotient q;
  if (d < 0) return q;
  q.monos = monomials_of_degree(n, d);
  const std::size_t cols = q.monos.size();
  for (std::size_t c = 0; c < cols; ++c) q.index[key_of(q.monos[c])] = c;
  std::map<std::size_t, std::vector<std::uint64_t>> echelon;
  for (const auto& g : gens) {
    const int dg = g.homogeneous_degree().value();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(n, d - dg)) {
      std::vector<std::uint64_t> row(cols, 0);
      for (const auto& t : g.terms()) row[q.index.at(key_of(t.mono * m))] = t.coef;
      for (auto& [c, pivot] : echelon) {
        if (row[c] == 0) continue;
        const std::uint64_t f = p - row[c];
        for (std::size_t k = c; k < cols; ++k) row[k] = (row[k] + f * pivot[k]) % p;
      }
      const auto lead = std::find_if(row.begin(), row.end(), [](std::uint64_t x) { return x != 0; });
      if (lead == row.end()) continue;
      const std::uint64_t inv = pow_mod(*lead, p - 2, p);
      for (auto& x : row) x = x * inv % p;
      echelon.emplace(static_cast<std::size_t>(lead - row.begin()), std::move(row));
    }
  }
  // Back substitution gives the reduced echelon form.
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    for (auto& [c, row] : echelon) {
      if (c >= it->first || row[it->first] == 0) continue;
      const std::uint64_t f = p - row[it->first];
      for (std::size_t k = it->first; k < cols; ++k) row[k] = (row[k] + f * it->second[k]) % p;
    }
  }
  std::vector<std::size_t> position(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (!echelon.count(c)) {
      position[c] = q.standard.size();
      q.standard.push_back(c);
    }
  }
  q.coords.assign(cols, std::vector<std::uint64_t>(q.standard.size(), 0));
  for (std::size_t c = 0; c < cols; ++c) {
    const auto it = echelon.find(c);
    if (it == echelon.end()) {
      q.coords[c][position[c]] = 1;
      continue;
    }
    for (std::size_t s = 0; s < q.standard.size(); ++s) {
      const std::uint64_t x = it->second[q.standard[s]];
      q.coords[c][s] = x == 0 ? 0 : p - x;
    }
  }
  return q;
}

}  // namespace

BettiTable::Entries koszul_betti(const RingPtr<Fp>& ring, const std::vector<Polynomial<Fp>>& gens,
                                 int max_degree) {
  const std::size_t n = ring->nvars();
  const std::uint64_t p = ring->field().characteristic();
  std::vector<Polynomial<Fp>> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  std::map<int, Quotient> cache;
  auto Q = [&](int d) -> const Quotient& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, quotient(nonzero, n, d, p)).first;
    return it->second;
  };
  std::vector<std::vector<std::uint32_t>> subsets(n + 1);
  for (std::uint32_t F = 0; F < (1u << n); ++F) subsets[__builtin_popcount(F)].push_back(F);

  BettiTable::Entries out;
  for (int j = 0; j <= max_degree; ++j) {
    // rank of d_i : K_i (x) S/I -> K_{i-1} (x) S/I in internal degree j.
    std::vector<std::size_t> rank(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& src = Q(j - static_cast<int>(i));
      const auto& dst = Q(j - static_cast<int>(i) + 1);
      if (src.dim() == 0 || dst.dim() == 0) continue;
      std::map<std::uint32_t, std::size_t> block;
      for (std::size_t b = 0; b < subsets[i - 1].size(); ++b) block[subsets[i - 1][b]] = b;
      std::vector<std::vector<std::uint64_t>> rows;
      for (auto F : subsets[i]) {
        for (std::size_t s : src.standard) {
          std::vector<std::uint64_t> row(subsets[i - 1].size() * dst.dim(), 0);
          int position = 0;
          for (std::size_t k = 0; k < n; ++k) {
            if (!(F >> k & 1)) continue;
            const auto& c = dst.of(src.monos[s] * Monomial::variable(n, k));
            const std::size_t base = block.at(F & ~(1u << k)) * dst.dim();
            for (std::size_t t = 0; t < c.size(); ++t) {
              const std::uint64_t v = position % 2 == 0 ? c[t] : (p - c[t]) % p;
              row[base + t] = (row[base + t] + v) % p;
            }
            ++position;
          }
          rows.push_back(std::move(row));
        }
      }
      rank[i] = rank_mod_p(std::move(rows), p);
    }
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t dim = subsets[i].size() * Q(j - static_cast<int>(i)).dim();
      const std::size_t beta = dim - rank[i] - rank[i + 1];
      if (beta) out[{static_cast<int>(i), j}] = beta;
    }
  }
  return out;
}

BettiTable::Entries koszul_betti(const std::vector<Monomial>& gens, std::size_t nvars) {
  const auto ring = prime_ring(nvars);
  Monomial big(nvars);
  for (const auto& g : gens) big = lcm(big, g);
  // Taylor's resolution puts every shift below the lcm of all generators.
  return koszul_betti(ring, monomial_generators(ring, gens), big.degree());
}

std::size_t hilbert_function(const RingPtr<Fp>& ring, const std::vector<Polynomial<Fp>>& gens,
                             int degree) {
  std::vector<Polynomial<Fp>> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  return quotient(nonzero, ring->nvars(), degree, ring->field().characteristic()).dim();
}

std::int64_t series_coefficient(const QPolynomial& numerator, std::size_t nvars, int degree) {
  std::int64_t out = 0;
  for (int k = 0; k < static_cast<int>(numerator.size()) && k <= degree; ++k) {
    out += numerator[static_cast<std::size_t>(k)] *
           binomial(degree - k + static_cast<std::int64_t>(nvars) - 1,
                    static_cast<std::int64_t>(nvars) - 1);
  }
  return out;
}

HilbertTally& hilbert_tally() {
  static HilbertTally tally;
  return tally;
}

template <class K>
bool record_hilbert(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                    const BettiTable& table) {
  bool ok = hilbert_consistency(ring, gens, table);
  if constexpr (std::is_same_v<K, Fp>) {
    const auto kpoly = k_polynomial(table);
    // Dense counting is only affordable while degree-d monomials are few.
    const int top = *std::max_element(table.T().begin(), table.T().end()) + 2;
    for (int d = 0; d <= top && ok; ++d) {
      if (monomials_of_degree(ring->nvars(), d).size() > kMaxOracleColumns) break;
      ok = series_coefficient(kpoly, ring->nvars(), d) ==
           static_cast<std::int64_t>(hilbert_function(ring, gens, d));
    }
  }
  ++hilbert_tally().checked;
  if (!ok) ++hilbert_tally().failed;
  return ok;
}

template <class K>
Resolved<K> resolve(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens) {
  Resolved<K> r;
  r.resolution = minimal_resolution(ring, gens);
  r.table = betti_table(r.resolution);
  r.hilbert_ok = record_hilbert(ring, gens, r.table);
  return r;
}

RingPtr<Fp> prime_ring(std::size_t nvars, MonomialOrder order) {
  return make_ring(Fp(), names(nvars), order);
}

RingPtr<Qq> rational_ring(std::size_t nvars, MonomialOrder order) {
  return make_ring(Qq(), names(nvars), order);
}

template <class K>
std::vector<Polynomial<K>> monomial_generators(const RingPtr<K>& ring,
                                               const std::vector<Monomial>& monos) {
  std::vector<Polynomial<K>> out;
  for (const auto& m : monos) out.push_back(Polynomial<K>::monomial(ring, ring->field().one(), m));
  return out;
}

std::vector<Monomial> random_monomials(std::mt19937_64& rng, std::size_t nvars, int max_degree,
                                       int count) {
  std::vector<Monomial> out;
  for (int i = 0; i < count; ++i) {
    const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    const auto pool = monomials_of_degree(nvars, d);
    out.push_back(pool[rng() % pool.size()]);
  }
  return out;
}

template <class K>
Polynomial<K> random_form(std::mt19937_64& rng, const RingPtr<K>& ring, int degree,
                          int max_terms) {
  const auto pool = monomials_of_degree(ring->nvars(), degree);
  std::vector<typename Polynomial<K>::Term> terms;
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  for (int i = 0; i < n; ++i) {
    terms.push_back({ring->field().random(rng), pool[rng() % pool.size()]});
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <class K>
Polynomial<K> random_polynomial(std::mt19937_64& rng, const RingPtr<K>& ring, int max_degree,
                                int max_terms) {
  std::vector<typename Polynomial<K>::Term> terms;
  const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
  for (int i = 0; i < n; ++i) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    const auto pool = monomials_of_degree(ring->nvars(), d);
    terms.push_back({ring->field().random(rng), pool[rng() % pool.size()]});
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

Loaded load(const std::string& text, MonomialOrder order) {
  Loaded l;
  l.doc = parse(text);
  l.ring = make_ring(Fp(l.doc.ring.field.characteristic), l.doc.ring.variables, order);
  l.gens = materialize(l.doc, l.ring);
  return l;
}

#define SYZYGY_TEST_INSTANTIATE(K)                                                              \
  template bool record_hilbert(const RingPtr<K>&, const std::vector<Polynomial<K>>&,            \
                               const BettiTable&);                                              \
  template Resolved<K> resolve(const RingPtr<K>&, const std::vector<Polynomial<K>>&);           \
  template std::vector<Polynomial<K>> monomial_generators(const RingPtr<K>&,                    \
                                                          const std::vector<Monomial>&);        \
  template Polynomial<K> random_form(std::mt19937_64&, const RingPtr<K>&, int, int);            \
  template Polynomial<K> random_polynomial(std::mt19937_64&, const RingPtr<K>&, int, int);

SYZYGY_TEST_INSTANTIATE(Fp)
SYZYGY_TEST_INSTANTIATE(Qq)

}  // namespace syzygy::test
