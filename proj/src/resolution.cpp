#include "syzygy/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "syzygy/detail/reduction.hpp"

namespace syzygy {

using detail::ReducerIndex;
using detail::TermOrder;
using detail::TermVector;

template <class K>
GradedFreeResolution<K>::GradedFreeResolution(RingPtr<K> ring,
                                              std::vector<GradedMatrix<K>> differentials,
                                              bool minimal)
    : ring_(std::move(ring)), differentials_(std::move(differentials)), minimal_(minimal) {
  for (std::size_t n = 0; n < differentials_.size(); ++n) {
    const auto& d = differentials_[n];
    if (n == 0 && !(d.target() == GradedFreeModule::ring())) {
      throw DimensionError("d_1 must map into S");
    }
    if (n > 0 && !(d.target() == differentials_[n - 1].source())) {
      throw DimensionError("d_" + std::to_string(n + 1) + " does not land in F_" +
                           std::to_string(n));
    }
  }
}

template <class K>
const GradedMatrix<K>& GradedFreeResolution<K>::differential(std::size_t n) const {
  if (n == 0 || n > differentials_.size()) {
    throw DimensionError("no differential d_" + std::to_string(n));
  }
  return differentials_[n - 1];
}

template <class K>
const GradedFreeModule& GradedFreeResolution<K>::module(std::size_t a) const {
  if (a == 0) return base_;
  return differential(a).source();
}

template <class K>
std::vector<std::size_t> GradedFreeResolution<K>::ranks() const {
  std::vector<std::size_t> out{1};
  for (const auto& d : differentials_) out.push_back(d.source().rank());
  return out;
}

namespace {

// One level of the Schreyer frame: elements of F_{n-1} under the Schreyer
// order of level n-1.
template <class K>
struct Level {
  ModuleOrder order;  // order on F_{n-1}
  std::vector<TermVector<K>> elems;
};

template <class K>
Level<K> next_level(const RingPtr<K>& ring, const Level<K>& level, std::uint64_t& steps,
                    std::uint64_t budget) {
  const K& field = ring->field();
  const TermOrder ord(ring->order(), level.order);
  std::vector<Monomial> weights;
  weights.reserve(level.elems.size());
  for (const auto& e : level.elems) weights.push_back(e.front().key);
  // Equal keys compare through the order of the lead components below.
  std::vector<std::uint32_t> by_rank(level.elems.size());
  std::iota(by_rank.begin(), by_rank.end(), 0u);
  const auto& below = level.order.ranks;
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](std::uint32_t a, std::uint32_t b) {
    return below.at(level.elems[a].front().comp) < below.at(level.elems[b].front().comp);
  });
  std::vector<std::uint32_t> ranks(level.elems.size());
  for (std::size_t i = 0; i < by_rank.size(); ++i) ranks[by_rank[i]] = static_cast<std::uint32_t>(i);
  Level<K> out{ModuleOrder::schreyer(weights, std::move(ranks)), {}};
  const TermOrder next_ord(ring->order(), out.order);
  ReducerIndex<K> index(&level.elems);

  for (std::size_t k = 0; k < level.elems.size(); ++k) {
    const auto& lk = level.elems[k].front();
    // Minimal generators of (L_j : j < k) : L_k on the same component.
    std::vector<std::pair<Monomial, std::size_t>> quot;
    for (std::size_t j = 0; j < k; ++j) {
      const auto& lj = level.elems[j].front();
      if (lj.comp != lk.comp) continue;
      quot.emplace_back(lcm(lj.key, lk.key) / lk.key, j);
    }
    std::vector<std::pair<Monomial, std::size_t>> gens;
    for (std::size_t a = 0; a < quot.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < quot.size() && !redundant; ++b) {
        if (a == b || !quot[b].first.divides(quot[a].first)) continue;
        redundant = !(quot[b].first == quot[a].first) || b < a;
      }
      if (!redundant) gens.push_back(quot[a]);
    }
    // Ascending lex order keeps the frame within the Hilbert syzygy bound.
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
      return compare(a.first, b.first, MonomialOrder::lex) < 0;
    });

    for (const auto& [m, j] : gens) {
      if (++steps > budget) {
        throw BudgetExceededError("resolution step budget of " + std::to_string(budget) +
                                  " exhausted");
      }
      const Monomial mj = m * lk.key / level.elems[j].front().key;
      TermVector<K> mk;
      mk.reserve(level.elems[k].size());
      for (const auto& t : level.elems[k]) mk.push_back({t.coef, m * t.key, t.comp});
      TermVector<K> s = detail::sub_multiple(field, ord, mk, 1, field.one(), mj, level.elems[j], 1);

      TermVector<K> tau;
      tau.push_back({field.one(), m * weights[k], static_cast<std::uint32_t>(k)});
      tau.push_back({field.neg(field.one()), mj * weights[j], static_cast<std::uint32_t>(j)});
      auto rem = detail::reduce(field, ord, std::move(s), level.elems, index, true,
                                [&](const auto& c, const Monomial& q, std::size_t l) {
                                  tau.push_back({field.neg(c), q * weights[l],
                                                 static_cast<std::uint32_t>(l)});
                                });
      if (!rem.empty()) throw InternalError("Schreyer S-pair did not reduce to zero");
      detail::canonicalize(field, next_ord, tau);
      if (tau.empty() || tau.front().comp != k || !field.is_one(tau.front().coef)) {
        throw InternalError("Schreyer syzygy has an unexpected leading term");
      }
      out.elems.push_back(std::move(tau));
    }
  }
  return out;
}

}  // namespace

template <class K>
GradedFreeResolution<K> free_resolution(const RingPtr<K>& ring,
                                        const std::vector<Polynomial<K>>& generators,
                                        const ResolutionOptions& options) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : generators) {
    if (!g.ring()->same_as(*ring)) throw RingMismatchError("generator over a different ring");
    const auto hd = g.homogeneous_degree();
    if (hd.is_zero()) continue;
    if (!hd.has_value()) throw DegreeError("generator " + g.to_string() + " is not homogeneous");
    if (hd.degree == 0) throw ImproperIdealError("generator " + g.to_string() + " is a unit");
    gens.push_back(g);
  }
  if (gens.empty()) return GradedFreeResolution<K>(ring, {}, false);

  const auto gb = buchberger(ring, gens, options.groebner);
  const ModuleOrder base = ModuleOrder::schreyer({ring->one()});
  Level<K> level{base, {}};
  for (const auto& g : gb.generators()) level.elems.push_back(detail::to_terms(g, base));
  std::stable_sort(level.elems.begin(), level.elems.end(), [](const auto& a, const auto& b) {
    return compare(a.front().key, b.front().key, MonomialOrder::lex) < 0;
  });

  std::vector<GradedMatrix<K>> diffs;
  GradedFreeModule target = GradedFreeModule::ring();
  std::uint64_t steps = 0;
  const std::uint64_t budget = options.groebner.step_budget;
  while (!level.elems.empty()) {
    std::vector<ModuleElement<K>> cols;
    std::vector<int> shifts;
    for (const auto& e : level.elems) {
      cols.push_back(detail::to_element(ring, e, level.order));
      int deg = e.front().key.degree();
      const auto& w = level.order.weights.at(e.front().comp);
      deg += target.shift(e.front().comp) - w.degree();
      shifts.push_back(deg);
    }
    GradedFreeModule source(std::move(shifts));
    diffs.emplace_back(ring, source, target, std::move(cols));
    target = std::move(source);
    level = next_level(ring, level, steps, budget);
  }
  return GradedFreeResolution<K>(ring, std::move(diffs), false);
}

template <class K>
GradedFreeResolution<K> minimalize(const GradedFreeResolution<K>& resolution) {
  if (resolution.minimal()) return resolution;
  const RingPtr<K>& ring = resolution.ring();
  const K& field = ring->field();
  const std::size_t s = resolution.length();

  // cols[n][c]: column c of d_{n+1}; alive[n][i]: basis element i of F_{n+1}.
  std::vector<std::vector<ModuleElement<K>>> cols(s);
  std::vector<std::vector<int>> shifts(s);
  std::vector<std::vector<bool>> alive(s);
  for (std::size_t n = 0; n < s; ++n) {
    cols[n] = resolution.differentials()[n].columns();
    shifts[n] = resolution.differentials()[n].source().shifts();
    alive[n].assign(cols[n].size(), true);
  }

  for (std::size_t n = 1; n < s; ++n) {  // d_{n+1}; d_1 never has unit entries
    std::vector<std::size_t> order(cols[n].size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return shifts[n][a] < shifts[n][b]; });
    for (std::size_t c : order) {
      if (!alive[n][c]) continue;
      const ModuleElement<K>* pivot_col = &cols[n][c];
      std::optional<std::uint32_t> row;
      for (const auto& [r, p] : pivot_col->entries()) {
        if (p.is_unit()) {
          row = r;
          break;
        }
      }
      if (!row) continue;
      const std::uint32_t r = *row;
      const auto u_inv = field.inv(pivot_col->find(r)->lead_coefficient());
      const ModuleElement<K> pc = *pivot_col;
      for (std::size_t c2 = 0; c2 < cols[n].size(); ++c2) {
        if (c2 == c || !alive[n][c2]) continue;
        const Polynomial<K>* e = cols[n][c2].find(r);
        if (!e) continue;
        cols[n][c2] -= pc.times(e->scaled(u_inv));
      }
      alive[n][c] = false;
      cols[n][c] = ModuleElement<K>(ring);
      alive[n - 1][r] = false;
      if (n + 1 < s) {
        for (auto& col : cols[n + 1]) col.set(static_cast<std::uint32_t>(c), Polynomial<K>(ring));
      }
    }
  }

  // Renumber the survivors; level 1 by (degree, lead term descending),
  // higher levels by shift.
  std::vector<std::vector<std::optional<std::uint32_t>>> remap(s);
  for (std::size_t n = 0; n < s; ++n) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < cols[n].size(); ++i) {
      if (alive[n][i]) keep.push_back(i);
    }
    if (n == 0) {
      const auto mono_order = ring->order();
      std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        if (shifts[0][a] != shifts[0][b]) return shifts[0][a] < shifts[0][b];
        const auto& pa = *cols[0][a].find(0);
        const auto& pb = *cols[0][b].find(0);
        return compare(pa.lead_monomial(), pb.lead_monomial(), mono_order) > 0;
      });
    } else {
      std::stable_sort(keep.begin(), keep.end(),
                       [&](std::size_t a, std::size_t b) { return shifts[n][a] < shifts[n][b]; });
    }
    remap[n].assign(cols[n].size(), std::nullopt);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[n][keep[i]] = static_cast<std::uint32_t>(i);
  }

  std::vector<GradedMatrix<K>> diffs;
  GradedFreeModule target = GradedFreeModule::ring();
  for (std::size_t n = 0; n < s; ++n) {
    std::vector<std::size_t> keep(cols[n].size());
    std::size_t count = 0;
    for (std::size_t i = 0; i < cols[n].size(); ++i) {
      if (remap[n][i]) {
        keep[*remap[n][i]] = i;
        ++count;
      }
    }
    keep.resize(count);
    if (count == 0) break;
    std::vector<ModuleElement<K>> new_cols;
    std::vector<int> new_shifts;
    for (std::size_t i : keep) {
      new_cols.push_back(n == 0 ? cols[n][i] : cols[n][i].reindexed(remap[n - 1]));
      new_shifts.push_back(shifts[n][i]);
    }
    GradedFreeModule source(std::move(new_shifts));
    diffs.emplace_back(ring, source, target, std::move(new_cols));
    target = std::move(source);
  }
  return GradedFreeResolution<K>(ring, std::move(diffs), true);
}

template <class K>
GradedFreeResolution<K> minimal_resolution(const RingPtr<K>& ring,
                                           const std::vector<Polynomial<K>>& generators,
                                           const ResolutionOptions& options) {
  return minimalize(free_resolution(ring, generators, options));
}

template <class K>
bool verify_complex(const GradedFreeResolution<K>& resolution) {
  for (std::size_t n = 2; n <= resolution.length(); ++n) {
    if (!compose_is_zero(resolution.differential(n - 1), resolution.differential(n))) return false;
  }
  return true;
}

template <class K>
bool has_no_unit_entries(const GradedFreeResolution<K>& resolution) {
  for (const auto& d : resolution.differentials()) {
    if (d.count_unit_entries() != 0) return false;
  }
  return true;
}

template <class K>
bool rank_exact(const GradedFreeResolution<K>& resolution, std::mt19937_64& rng) {
  const K& field = resolution.ring()->field();
  const std::size_t s = resolution.length();
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<typename K::Element> point;
    for (std::size_t i = 0; i < resolution.ring()->nvars(); ++i) point.push_back(field.random(rng));
    std::vector<std::size_t> rank(s + 2, 0);
    for (std::size_t n = 1; n <= s; ++n) {
      rank[n] = dense_rank(field, resolution.differential(n).evaluate(point));
    }
    bool ok = true;
    for (std::size_t n = 1; n <= s && ok; ++n) {
      ok = rank[n] + rank[n + 1] == resolution.module(n).rank();
    }
    if (ok) return true;
  }
  return false;
}

#define SYZYGY_INSTANTIATE(K)                                                                  \
  template class GradedFreeResolution<K>;                                                      \
  template GradedFreeResolution<K> free_resolution(const RingPtr<K>&,                          \
                                                   const std::vector<Polynomial<K>>&,          \
                                                   const ResolutionOptions&);                  \
  template GradedFreeResolution<K> minimalize(const GradedFreeResolution<K>&);                 \
  template GradedFreeResolution<K> minimal_resolution(const RingPtr<K>&,                       \
                                                      const std::vector<Polynomial<K>>&,       \
                                                      const ResolutionOptions&);               \
  template bool verify_complex(const GradedFreeResolution<K>&);                                \
  template bool has_no_unit_entries(const GradedFreeResolution<K>&);                           \
  template bool rank_exact(const GradedFreeResolution<K>&, std::mt19937_64&);

SYZYGY_INSTANTIATE(PrimeField)
SYZYGY_INSTANTIATE(RationalField)

}  // namespace syzygy
