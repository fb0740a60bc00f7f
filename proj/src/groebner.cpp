#include "syzygy/groebner.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "syzygy/detail/reduction.hpp"

namespace syzygy {

using detail::ReducerIndex;
using detail::TermOrder;
using detail::TermVector;
using detail::VTerm;

template <class K>
struct GroebnerCache {
  std::vector<TermVector<K>> elems;
  ReducerIndex<K> index;
};

template <class K>
GroebnerBasis<K>::GroebnerBasis(RingPtr<K> ring, GradedFreeModule ambient, ModuleOrder order,
                                std::vector<ModuleElement<K>> generators, bool reduced,
                                std::optional<int> degree_bound)
    : ring_(std::move(ring)),
      ambient_(std::move(ambient)),
      order_(std::move(order)),
      generators_(std::move(generators)),
      reduced_(reduced),
      degree_bound_(degree_bound) {
  for (const auto& g : generators_) {
    if (g.is_zero()) throw ContractError("zero element in a Groebner basis");
    for (const auto& e : g.entries()) {
      if (e.first >= ambient_.rank()) throw DimensionError("basis element outside ambient module");
    }
  }
  if (order_.kind == ModuleOrder::Kind::schreyer && order_.weights.size() != ambient_.rank()) {
    throw DimensionError("Schreyer order needs one weight per basis element");
  }
  auto cache = std::make_shared<GroebnerCache<K>>();
  cache->elems.reserve(generators_.size());
  for (const auto& g : generators_) cache->elems.push_back(detail::to_terms(g, order_));
  cache->index = ReducerIndex<K>(&cache->elems);
  cache_ = std::move(cache);
}

template <class K>
std::vector<std::pair<Monomial, std::uint32_t>> GroebnerBasis<K>::lead_terms() const {
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  for (const auto& terms : cache_->elems) {
    out.emplace_back(detail::mono_of(terms.front().key, terms.front().comp, order_),
                     terms.front().comp);
  }
  return out;
}

namespace {

template <class K>
Polynomial<K> term_poly(const RingPtr<K>& ring, const typename K::Element& c, const Monomial& m) {
  return Polynomial<K>::monomial(ring, c, m);
}

// Degree of c*m*e_comp given the term's key.
inline int term_degree(const Monomial& key, std::uint32_t comp, const ModuleOrder& order,
                       const GradedFreeModule& ambient) {
  int d = key.degree();
  if (order.kind == ModuleOrder::Kind::schreyer) d -= order.weights.at(comp).degree();
  return d + ambient.shift(comp);
}

template <class K>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const RingPtr<K>& ring, const GradedFreeModule& ambient,
                   const ModuleOrder& order, const BuchbergerOptions& options,
                   std::size_t ninputs)
      : ring_(ring),
        field_(ring->field()),
        ord_(ring->order(), order),
        order_(order),
        ambient_(ambient),
        options_(options),
        ninputs_(ninputs) {
    index_.attach(&basis_);
  }

  void insert_input(TermVector<K> v, std::size_t input_index) {
    if (v.empty()) return;
    ModuleElement<K> rep(ring_);
    if (options_.track_representation) {
      rep = ModuleElement<K>::basis(ring_, static_cast<std::uint32_t>(input_index));
    }
    add(std::move(v), std::move(rep));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        const int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair p = *best;
      pairs_.erase(best);
      if (options_.degree_bound && p.degree > *options_.degree_bound) {
        truncated_ = true;
        continue;
      }
      if (++steps_ > options_.step_budget) {
        throw BudgetExceededError("Buchberger step budget of " +
                                  std::to_string(options_.step_budget) + " exhausted");
      }
      process(p);
    }
  }

  GroebnerBasis<K> finish() {
    // Minimal basis: drop elements whose lead is divisible by another lead.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& li = basis_[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const auto& lj = basis_[j].front();
        if (lj.comp != li.comp || !lj.key.divides(li.key)) continue;
        redundant = !(lj.key == li.key) || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<TermVector<K>> kept;
    std::vector<ModuleElement<K>> kept_rep;
    for (std::size_t i : keep) {
      kept.push_back(basis_[i]);
      kept_rep.push_back(rep_[i]);
    }
    // Tail reduction against the minimal basis; leads never change.
    ReducerIndex<K> kidx(&kept);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      TermVector<K> tail(kept[i].begin() + 1, kept[i].end());
      std::vector<std::tuple<typename K::Element, Monomial, std::size_t>> steps;
      auto reduced = detail::reduce(field_, ord_, std::move(tail), kept, kidx, true,
                                    [&](const auto& c, const Monomial& q, std::size_t l) {
                                      steps.emplace_back(c, q, l);
                                    });
      TermVector<K> v;
      v.reserve(reduced.size() + 1);
      v.push_back(kept[i].front());
      for (auto& t : reduced) v.push_back(std::move(t));
      if (options_.track_representation) {
        for (const auto& [c, q, l] : steps) {
          kept_rep[i] -= kept_rep[l].times(term_poly(ring_, c, q));
        }
      }
      // Later elements reduce against the updated tail; both forms are valid.
      kept[i] = std::move(v);
    }
    // Monic, then a deterministic order: descending leads.
    std::vector<std::size_t> perm(kept.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return ord_.greater(kept[a].front(), kept[b].front());
    });
    std::vector<ModuleElement<K>> gens;
    std::vector<ModuleElement<K>> reps;
    for (std::size_t i : perm) {
      auto& v = kept[i];
      const auto inv = field_.inv(v.front().coef);
      for (auto& t : v) t.coef = field_.mul(t.coef, inv);
      gens.push_back(detail::to_element(ring_, v, order_));
      if (options_.track_representation) {
        reps.push_back(kept_rep[i].times(Polynomial<K>::constant(ring_, inv)));
      }
    }
    GroebnerBasis<K> out(ring_, ambient_, order_, std::move(gens), true,
                         truncated_ || options_.degree_bound ? options_.degree_bound
                                                             : std::nullopt);
    if (options_.track_representation) out.set_representation(std::move(reps));
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    int degree;
  };

  void process(const Pair& p) {
    const auto& gi = basis_[p.i];
    const auto& gj = basis_[p.j];
    const Monomial qi = p.lcm / gi.front().key;
    const Monomial qj = p.lcm / gj.front().key;
    const auto ci = field_.inv(gi.front().coef);
    const auto cj = field_.inv(gj.front().coef);
    TermVector<K> scaled_i;
    scaled_i.reserve(gi.size());
    for (const auto& t : gi) scaled_i.push_back({field_.mul(t.coef, ci), qi * t.key, t.comp});
    // spoly = ci*qi*gi - cj*qj*gj, leads cancel.
    TermVector<K> s = detail::sub_multiple(field_, ord_, scaled_i, 1, cj, qj, gj, 1);
    std::vector<std::tuple<typename K::Element, Monomial, std::size_t>> steps;
    auto r = detail::reduce(field_, ord_, std::move(s), basis_, index_, true,
                            [&](const auto& c, const Monomial& q, std::size_t l) {
                              steps.emplace_back(c, q, l);
                            });
    if (r.empty()) return;
    ModuleElement<K> rep(ring_);
    if (options_.track_representation) {
      rep = rep_[p.i].times(term_poly(ring_, ci, qi)) - rep_[p.j].times(term_poly(ring_, cj, qj));
      for (const auto& [c, q, l] : steps) rep -= rep_[l].times(term_poly(ring_, c, q));
    }
    add(std::move(r), std::move(rep));
  }

  int pair_degree(const Monomial& lcm_key, std::uint32_t comp) const {
    return term_degree(lcm_key, comp, order_, ambient_);
  }

  // Gebauer-Moeller update for a new element.
  void add(TermVector<K> v, ModuleElement<K> rep) {
    const std::size_t k = basis_.size();
    const auto& lead = v.front();
    const std::uint32_t comp = lead.comp;
    const Monomial lk = lead.key;
    const bool ideal_case = ambient_.rank() == 1;

    // Criterion B on existing pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != comp || !lk.divides(p.lcm)) return false;
      const Monomial li = lcm(basis_[p.i].front().key, lk);
      const Monomial lj = lcm(basis_[p.j].front().key, lk);
      return !(li == p.lcm) && !(lj == p.lcm);
    });

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& li = basis_[i].front();
      if (li.comp != comp) continue;
      Monomial m = lcm(li.key, lk);
      // Product criterion only holds for polynomials, not module elements.
      const bool coprime = ideal_case && order_.kind == ModuleOrder::Kind::position_over_term &&
                           li.key.coprime(lk);
      cands.push_back({i, std::move(m), coprime});
    }
    // Criterion M: drop candidates whose lcm is a proper multiple of another.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
        if (a == b) continue;
        if (cands[b].lcm.divides(cands[a].lcm) && !(cands[b].lcm == cands[a].lcm)) drop = true;
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // Criterion F: one pair per lcm; the whole class goes if any member is coprime.
    std::map<std::size_t, bool> seen;
    std::vector<Cand> unique;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      bool first = true, any_coprime = kept[a].coprime;
      for (std::size_t b = 0; b < kept.size(); ++b) {
        if (!(kept[b].lcm == kept[a].lcm)) continue;
        if (b < a) first = false;
        any_coprime = any_coprime || kept[b].coprime;
      }
      if (first && !any_coprime) unique.push_back(kept[a]);
    }
    basis_.push_back(std::move(v));
    rep_.push_back(std::move(rep));
    index_.add(k);
    for (auto& c : unique) {
      const int deg = pair_degree(c.lcm, comp);
      pairs_.push_back({c.i, k, std::move(c.lcm), comp, deg});
    }
  }

  RingPtr<K> ring_;
  const K& field_;
  TermOrder ord_;
  ModuleOrder order_;
  GradedFreeModule ambient_;
  BuchbergerOptions options_;
  std::size_t ninputs_;
  std::vector<TermVector<K>> basis_;
  std::vector<ModuleElement<K>> rep_;
  ReducerIndex<K> index_;
  std::vector<Pair> pairs_;
  std::uint64_t steps_ = 0;
  bool truncated_ = false;
};

template <class K>
void check_ambient(const ModuleElement<K>& v, const GradedFreeModule& ambient) {
  for (const auto& e : v.entries()) {
    if (e.first >= ambient.rank()) throw DimensionError("element outside the ambient module");
  }
}

}  // namespace

template <class K>
ReductionTrace<K> normal_form(const ModuleElement<K>& v, const GroebnerBasis<K>& basis) {
  check_ambient(v, basis.ambient());
  const RingPtr<K>& ring = basis.ring();
  const TermOrder ord(ring->order(), basis.order());
  const auto& reducers = basis.cache().elems;
  const auto& index = basis.cache().index;
  std::vector<std::vector<typename Polynomial<K>::Term>> qterms(basis.size());
  auto rem = detail::reduce(ring->field(), ord, detail::to_terms(v, basis.order()), reducers, index,
                            true, [&](const auto& c, const Monomial& q, std::size_t l) {
                              qterms[l].push_back({c, q});
                            });
  ReductionTrace<K> trace;
  trace.remainder = detail::to_element(ring, rem, basis.order());
  for (auto& terms : qterms) trace.quotients.push_back(Polynomial<K>::from_terms(ring, std::move(terms)));
  return trace;
}

template <class K>
ReductionTrace<K> normal_form(const ModuleElement<K>& v, const GroebnerBasis<K>& basis,
                              const ModuleOrder& order) {
  if (!(order == basis.order())) {
    throw ContractError("normal form requested for " + order.to_string() +
                        " against a basis computed for " + basis.order().to_string());
  }
  return normal_form(v, basis);
}

template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const GradedFreeModule& ambient,
                            const std::vector<ModuleElement<K>>& gens, const ModuleOrder& order,
                            const BuchbergerOptions& options) {
  if (order.kind == ModuleOrder::Kind::schreyer && order.weights.size() != ambient.rank()) {
    throw DimensionError("Schreyer order needs one weight per basis element");
  }
  BuchbergerEngine<K> engine(ring, ambient, order, options, gens.size());
  // Inputs enter in increasing degree so the normal strategy sees them early.
  std::vector<std::pair<int, std::size_t>> by_degree;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_ambient(gens[i], ambient);
    if (gens[i].is_zero()) continue;
    const auto terms = detail::to_terms(gens[i], order);
    by_degree.emplace_back(term_degree(terms.front().key, terms.front().comp, order, ambient), i);
  }
  std::stable_sort(by_degree.begin(), by_degree.end());
  for (const auto& [deg, i] : by_degree) {
    if (options.degree_bound && deg > *options.degree_bound) continue;
    engine.insert_input(detail::to_terms(gens[i], order), i);
  }
  engine.run();
  return engine.finish();
}

template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                            const BuchbergerOptions& options) {
  std::vector<ModuleElement<K>> elems;
  elems.reserve(gens.size());
  for (const auto& g : gens) elems.push_back(ModuleElement<K>(ring, {{0, g}}));
  return buchberger(ring, GradedFreeModule::ring(), elems, ModuleOrder::position_over_term(),
                    options);
}

template <class K>
bool check_basis(const GroebnerBasis<K>& basis) {
  const RingPtr<K>& ring = basis.ring();
  const K& field = ring->field();
  const TermOrder ord(ring->order(), basis.order());
  const auto& elems = basis.cache().elems;
  const auto& index = basis.cache().index;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& li = elems[i].front();
      const auto& lj = elems[j].front();
      if (li.comp != lj.comp) continue;
      const Monomial l = lcm(li.key, lj.key);
      if (basis.degree_bound() &&
          term_degree(l, li.comp, basis.order(), basis.ambient()) > *basis.degree_bound()) {
        continue;
      }
      const Monomial qi = l / li.key;
      const Monomial qj = l / lj.key;
      const auto ci = field.inv(li.coef);
      TermVector<K> scaled_i;
      for (const auto& t : elems[i]) scaled_i.push_back({field.mul(t.coef, ci), qi * t.key, t.comp});
      auto s = detail::sub_multiple(field, ord, scaled_i, 1, field.inv(lj.coef), qj, elems[j], 1);
      auto r = detail::reduce(field, ord, std::move(s), elems, index, true,
                              [](const auto&, const Monomial&, std::size_t) {});
      if (!r.empty()) return false;
    }
  }
  return true;
}

namespace {

// Drops columns that lie in the span of lower-or-equal degree kept columns.
template <class K>
std::vector<ModuleElement<K>> prune_generators(const RingPtr<K>& ring,
                                               const GradedFreeModule& ambient,
                                               std::vector<std::pair<int, ModuleElement<K>>> cols,
                                               const BuchbergerOptions& options) {
  std::stable_sort(cols.begin(), cols.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ModuleElement<K>> kept;
  for (auto& [deg, v] : cols) {
    if (!kept.empty()) {
      BuchbergerOptions o = options;
      o.degree_bound = deg;
      o.track_representation = false;
      const auto g = buchberger(ring, ambient, kept, ModuleOrder::position_over_term(), o);
      if (normal_form(v, g).remainder.is_zero()) continue;
    }
    kept.push_back(std::move(v));
  }
  return kept;
}

}  // namespace

template <class K>
GradedMatrix<K> syzygy_basis(const GradedMatrix<K>& m, bool minimal,
                             const BuchbergerOptions& options) {
  const RingPtr<K>& ring = m.ring();
  const K& field = ring->field();
  const GradedFreeModule& target = m.target();
  const std::size_t ncols = m.source().rank();

  BuchbergerOptions o = options;
  o.track_representation = true;
  const ModuleOrder pot = ModuleOrder::position_over_term();
  const auto gb = buchberger(ring, target, m.columns(), pot, o);
  const auto& reps = *gb.representation();
  const TermOrder ord(ring->order(), pot);

  std::vector<TermVector<K>> elems;
  for (const auto& g : gb.generators()) elems.push_back(detail::to_terms(g, pot));
  ReducerIndex<K> index(&elems);

  std::vector<ModuleElement<K>> syz;
  // Schreyer syzygies of the basis, pulled back to the original columns.
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& li = elems[i].front();
      const auto& lj = elems[j].front();
      if (li.comp != lj.comp) continue;
      const Monomial l = lcm(li.key, lj.key);
      const Monomial qi = l / li.key;
      const Monomial qj = l / lj.key;
      TermVector<K> scaled_i;
      for (const auto& t : elems[i]) scaled_i.push_back({t.coef, qi * t.key, t.comp});
      auto s = detail::sub_multiple(field, ord, scaled_i, 1, field.one(), qj, elems[j], 1);
      ModuleElement<K> rel = reps[i].times(Polynomial<K>::monomial(ring, field.one(), qi)) -
                             reps[j].times(Polynomial<K>::monomial(ring, field.one(), qj));
      auto r = detail::reduce(field, ord, std::move(s), elems, index, true,
                              [&](const auto& c, const Monomial& q, std::size_t l2) {
                                rel -= reps[l2].times(Polynomial<K>::monomial(ring, c, q));
                              });
      if (!r.empty()) throw InternalError("S-pair of a Groebner basis did not reduce to zero");
      if (!rel.is_zero()) syz.push_back(std::move(rel));
    }
  }
  // Each column minus its expression through the basis.
  for (std::size_t c = 0; c < ncols; ++c) {
    const auto trace = normal_form(m.column(c), gb);
    if (!trace.remainder.is_zero()) throw InternalError("column not in its own span");
    ModuleElement<K> rel = ModuleElement<K>::basis(ring, static_cast<std::uint32_t>(c));
    for (std::size_t l = 0; l < trace.quotients.size(); ++l) {
      if (!trace.quotients[l].is_zero()) rel -= reps[l].times(trace.quotients[l]);
    }
    if (!rel.is_zero()) syz.push_back(std::move(rel));
  }

  std::vector<std::pair<int, ModuleElement<K>>> graded;
  for (auto& v : syz) {
    const auto d = element_degree(v, m.source());
    if (!d) throw DegreeError("syzygy_basis needs homogeneous columns");
    graded.emplace_back(*d, std::move(v));
  }
  std::vector<ModuleElement<K>> cols;
  if (minimal) {
    cols = prune_generators(ring, m.source(), std::move(graded), options);
  } else {
    std::stable_sort(graded.begin(), graded.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& g : graded) cols.push_back(std::move(g.second));
  }
  std::vector<int> shifts;
  for (const auto& v : cols) shifts.push_back(*element_degree(v, m.source()));
  return GradedMatrix<K>(ring, GradedFreeModule(std::move(shifts)), m.source(), std::move(cols));
}

template <class K>
std::optional<ModuleElement<K>> lift_through(const GradedMatrix<K>& m, const ModuleElement<K>& v,
                                             const BuchbergerOptions& options) {
  const RingPtr<K>& ring = m.ring();
  if (v.is_zero()) return ModuleElement<K>(ring);
  BuchbergerOptions o = options;
  o.track_representation = true;
  if (!o.degree_bound) {
    if (const auto d = element_degree(v, m.target())) o.degree_bound = *d;
  }
  const auto gb = buchberger(ring, m.target(), m.columns(), ModuleOrder::position_over_term(), o);
  const auto trace = normal_form(v, gb);
  if (!trace.remainder.is_zero()) return std::nullopt;
  ModuleElement<K> x(ring);
  const auto& reps = *gb.representation();
  for (std::size_t l = 0; l < trace.quotients.size(); ++l) {
    if (!trace.quotients[l].is_zero()) x += reps[l].times(trace.quotients[l]);
  }
  return x;
}

template <class K>
std::vector<Monomial> initial_ideal(const GroebnerBasis<K>& basis) {
  std::vector<Monomial> out;
  for (const auto& [m, comp] : basis.lead_terms()) out.push_back(m);
  return out;
}

#define SYZYGY_INSTANTIATE(K)                                                                   \
  template class GroebnerBasis<K>;                                                              \
  template ReductionTrace<K> normal_form(const ModuleElement<K>&, const GroebnerBasis<K>&);     \
  template ReductionTrace<K> normal_form(const ModuleElement<K>&, const GroebnerBasis<K>&,      \
                                         const ModuleOrder&);                                   \
  template GroebnerBasis<K> buchberger(const RingPtr<K>&, const GradedFreeModule&,              \
                                       const std::vector<ModuleElement<K>>&, const ModuleOrder&, \
                                       const BuchbergerOptions&);                               \
  template GroebnerBasis<K> buchberger(const RingPtr<K>&, const std::vector<Polynomial<K>>&,    \
                                       const BuchbergerOptions&);                               \
  template bool check_basis(const GroebnerBasis<K>&);                                           \
  template GradedMatrix<K> syzygy_basis(const GradedMatrix<K>&, bool, const BuchbergerOptions&); \
  template std::optional<ModuleElement<K>> lift_through(                                        \
      const GradedMatrix<K>&, const ModuleElement<K>&, const BuchbergerOptions&);               \
  template std::vector<Monomial> initial_ideal(const GroebnerBasis<K>&);

SYZYGY_INSTANTIATE(PrimeField)
SYZYGY_INSTANTIATE(RationalField)

}  // namespace syzygy
