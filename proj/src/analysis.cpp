#include "syzygy/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace syzygy {

namespace {

template <class R>
bool all_hold(const std::vector<R>& records) {
  return std::all_of(records.begin(), records.end(), [](const R& r) { return r.holds; });
}

std::int64_t saturating_pow(std::int64_t base, std::int64_t exp) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

}  // namespace

bool InequalityReport::theorem1_holds() const { return all_hold(theorem1); }
bool InequalityReport::subadditive() const { return all_hold(subadditivity); }
bool InequalityReport::tail_holds() const { return all_hold(tail); }
bool InequalityReport::bayer_mumford_holds() const { return all_hold(bayer_mumford); }
bool InequalityReport::herzog_srinivasan_holds() const { return all_hold(herzog_srinivasan); }

InequalityReport check_inequalities(const BettiTable& table, bool is_monomial, int nvars,
                                    std::optional<int> gorenstein_codim) {
  InequalityReport r;
  const int s = table.projdim();
  for (int n = 1; n <= s; ++n) {
    const int bound = table.t(1) + table.T(n - 1);
    r.theorem1.push_back({n, table.t(n), bound, table.t(n) <= bound, table.t(n) == bound});
  }
  for (int a = 1; a <= s; ++a) {
    for (int b = a; a + b <= s; ++b) {
      const int lhs = table.T(a + b);
      const int bound = table.T(a) + table.T(b);
      r.subadditivity.push_back({a, b, lhs, bound, lhs <= bound, lhs == bound});
    }
  }
  if (gorenstein_codim) {
    const int h = *gorenstein_codim;
    for (int n = std::max(1, h - 1); n <= std::min(h, s); ++n) {
      for (int a = 1; a < n; ++a) {
        const int bound = table.T(a) + table.T(n - a);
        r.tail.push_back({n, a, table.T(n), bound, table.T(n) <= bound, table.T(n) == bound});
      }
    }
  }
  if (nvars >= 2 && s >= 1) {
    const std::int64_t base = 2 * static_cast<std::int64_t>(table.T(1));
    const std::int64_t exp = nvars - 2 >= 62 ? std::numeric_limits<std::int64_t>::max()
                                             : (std::int64_t{1} << (nvars - 2));
    const std::int64_t power = saturating_pow(base, exp);
    for (int n = 1; n <= s; ++n) {
      constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
      const std::int64_t bound = power >= kMax - n ? kMax : power - 1 + n;
      r.bayer_mumford.push_back({n, table.T(n), bound, table.T(n) <= bound});
    }
  }
  if (is_monomial) {
    for (int a = 1; a + 1 <= s; ++a) {
      const int bound = table.T(a) + table.T(1);
      r.herzog_srinivasan.push_back(
          {a, table.T(a + 1), bound, table.T(a + 1) <= bound, table.T(a + 1) == bound});
    }
  }
  return r;
}

GorensteinInfo detect_gorenstein(const BettiTable& table) {
  GorensteinInfo g;
  const int s = table.projdim();
  g.projdim = s;
  g.h = codimension(k_polynomial(table));
  g.last_rank_one = table.total(s) == 1;
  g.is_cm_gorenstein = g.last_rank_one && s == g.h;
  if (!g.is_cm_gorenstein) return g;
  const int h = g.h;
  const int c = table.T(h);
  g.c = c;
  g.duality_ok = true;
  for (int a = 0; a <= h; ++a) {
    for (const auto& [key, count] : table.entries()) {
      if (key.first != a) continue;
      if (table(h - a, c - key.second) != count) g.duality_ok = false;
    }
  }
  g.dual_shifts_ok = table.t(h) == c;
  g.socle_subadditive = true;
  for (int a = 1; a <= h - 1; ++a) {
    g.dual_shifts_ok = g.dual_shifts_ok && c - table.t(h - a) == table.T(a);
    g.socle_subadditive = g.socle_subadditive && table.T(h) <= table.T(a) + table.T(h - a);
  }
  g.tail_subadditive = true;
  for (int a = 1; a <= h - 2; ++a) {
    g.tail_subadditive = g.tail_subadditive && table.T(h - 1) <= table.T(a) + table.T(h - 1 - a);
  }
  return g;
}

PurityProfile detect_pure(const BettiTable& table) {
  PurityProfile p;
  const int s = table.projdim();
  p.is_pure = true;
  for (int a = 1; a <= s; ++a) p.is_pure = p.is_pure && table.t(a) == table.T(a);
  if (!p.is_pure) return p;
  for (int a = 1; a <= s; ++a) p.shifts.push_back(table.T(a));
  p.chain_ok = true;
  for (int n = 2; n <= s; ++n) {
    const int bound = table.T(1) + table.T(n - 1);
    p.chain.push_back({n, table.T(n), bound, table.T(n) <= bound, table.T(n) == bound});
    p.chain_ok = p.chain_ok && table.T(n) <= bound;
  }
  return p;
}

template <class K>
struct WitnessBuilder<K>::State {
  GradedFreeResolution<K> F;
  BuchbergerOptions options;
  Polynomial<K> g1;
  int t1 = 0;
  // h[k][i] = h_k(f_{k,i}) for k >= 1.
  std::map<std::size_t, std::vector<std::optional<ModuleElement<K>>>> h;
  std::map<std::size_t, GroebnerBasis<K>> lifters;

  int max_shift(std::size_t a) const {
    const auto& sh = F.module(a).shifts();
    return sh.empty() ? 0 : *std::max_element(sh.begin(), sh.end());
  }

  // Preimage of w in F_n under d_n.
  ModuleElement<K> lift(std::size_t n, const ModuleElement<K>& w) {
    if (w.is_zero()) return ModuleElement<K>(F.ring());
    if (n > F.length()) throw InternalError("nonzero cycle in the last module of the resolution");
    auto it = lifters.find(n);
    if (it == lifters.end()) {
      BuchbergerOptions o = options;
      o.track_representation = true;
      o.degree_bound = t1 + max_shift(n - 1);
      const auto& d = F.differential(n);
      it = lifters
               .emplace(n, buchberger(F.ring(), d.target(), d.columns(),
                                      ModuleOrder::position_over_term(), o))
               .first;
    }
    const auto& gb = it->second;
    const auto trace = normal_form(w, gb);
    if (!trace.remainder.is_zero()) {
      throw InternalError("cycle of F_" + std::to_string(n - 1) + " is not a boundary");
    }
    ModuleElement<K> x(F.ring());
    const auto& reps = *gb.representation();
    for (std::size_t l = 0; l < trace.quotients.size(); ++l) {
      if (!trace.quotients[l].is_zero()) x += reps[l].times(trace.quotients[l]);
    }
    return x;
  }

  // h_k(v) for v in F_k.
  ModuleElement<K> apply_h(std::size_t k, const ModuleElement<K>& v) {
    if (k == 0) return ModuleElement<K>(F.ring(), {{0, v.component(0)}});
    ModuleElement<K> out(F.ring());
    for (const auto& [i, p] : v.entries()) out += basis_h(k, i).times(p);
    return out;
  }

  const ModuleElement<K>& basis_h(std::size_t k, std::size_t i) {
    auto& slot = h[k];
    if (slot.empty()) slot.resize(F.module(k).rank());
    if (!slot[i]) slot[i] = lift(k + 1, cycle(k, i));
    return *slot[i];
  }

  // g_1 f_{k,i} - h_{k-1}(d_k f_{k,i}), a cycle of F_k.
  ModuleElement<K> cycle(std::size_t k, std::size_t i) {
    const auto f = ModuleElement<K>::basis(F.ring(), static_cast<std::uint32_t>(i));
    return f.times(g1) - apply_h(k - 1, F.differential(k).column(i));
  }

  bool rank_check(std::size_t n) const {
    const K& field = F.ring()->field();
    std::mt19937_64 rng(0x5eedULL + n);
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<typename K::Element> point;
      for (std::size_t i = 0; i < F.ring()->nvars(); ++i) point.push_back(field.random(rng));
      const auto rn = dense_rank(field, F.differential(n).evaluate(point));
      const auto rm = dense_rank(field, F.differential(n - 1).evaluate(point));
      if (rn + rm == F.module(n - 1).rank()) return true;
    }
    return false;
  }

  WitnessCertificate<K> certificate(std::size_t n, std::size_t col) {
    WitnessCertificate<K> c;
    c.n = static_cast<int>(n);
    c.t = static_cast<int>(col) + 1;
    c.cycle = cycle(n - 1, col);
    c.nonzero = !c.cycle.is_zero();
    c.cycle_closed = apply(F.differential(n - 1), c.cycle).is_zero();
    c.lift = c.nonzero ? lift(n, c.cycle) : ModuleElement<K>(F.ring());
    c.lift_ok = apply(F.differential(n), c.lift) == c.cycle;
    c.degree = t1 + F.module(n - 1).shift(col);
    c.bound = t1 + max_shift(n - 1);
    const auto deg = element_degree(c.cycle, F.module(n - 1));
    c.degree_ok = deg && *deg == c.degree && c.degree <= c.bound;
    c.rank_ok = rank_check(n);
    if (c.nonzero) {
      auto& slot = h[n - 1];
      if (slot.empty()) slot.resize(F.module(n - 1).rank());
      if (!slot[col]) slot[col] = c.lift;
    }
    return c;
  }

  void check_step(int n) const {
    if (n < 2 || static_cast<std::size_t>(n) > F.length()) {
      throw InvalidArgumentError("witness step must satisfy 2 <= n <= projdim = " +
                                 std::to_string(F.length()));
    }
  }
};

template <class K>
WitnessBuilder<K>::WitnessBuilder(const GradedFreeResolution<K>& resolution,
                                  BuchbergerOptions options)
    : state_(std::make_unique<State>()) {
  if (!resolution.minimal()) throw ContractError("witnesses need a minimal resolution");
  state_->F = resolution;
  state_->options = options;
  if (resolution.length() >= 1) {
    state_->g1 = resolution.differential(1).entry(0, 0);
    state_->t1 = resolution.module(1).shift(0);
  }
}

template <class K>
WitnessBuilder<K>::~WitnessBuilder() = default;

template <class K>
WitnessCertificate<K> WitnessBuilder<K>::construct(int n) {
  state_->check_step(n);
  const auto rank = state_->F.module(static_cast<std::size_t>(n) - 1).rank();
  for (std::size_t col = 0; col < rank; ++col) {
    if (state_->cycle(static_cast<std::size_t>(n) - 1, col).is_zero()) continue;
    return state_->certificate(static_cast<std::size_t>(n), col);
  }
  throw InternalError("every cycle Z(f_11, f_" + std::to_string(n - 1) +
                      "t) vanishes, contradicting the rank argument");
}

template <class K>
WitnessCertificate<K> WitnessBuilder<K>::construct(int n, int t) {
  state_->check_step(n);
  const auto rank = state_->F.module(static_cast<std::size_t>(n) - 1).rank();
  if (t < 1 || static_cast<std::size_t>(t) > rank) {
    throw InvalidArgumentError("witness column must satisfy 1 <= t <= " + std::to_string(rank));
  }
  return state_->certificate(static_cast<std::size_t>(n), static_cast<std::size_t>(t) - 1);
}

template <class K>
WitnessCertificate<K> construct_witness(const GradedFreeResolution<K>& resolution, int n) {
  return WitnessBuilder<K>(resolution).construct(n);
}

template <class K>
WitnessCertificate<K> construct_witness(const GradedFreeResolution<K>& resolution, int n, int t) {
  return WitnessBuilder<K>(resolution).construct(n, t);
}

template <class K>
WitnessSummary summarize(const WitnessCertificate<K>& c) {
  return {c.n,       c.t,       c.degree,    c.bound,
          c.cycle_closed, c.lift_ok, c.nonzero, c.degree_ok,
          c.rank_ok, c.cycle.to_string(), c.lift.to_string()};
}

std::vector<std::string> AnalysisReport::theorem_failures() const {
  std::vector<std::string> out;
  for (const auto& r : inequalities.theorem1) {
    if (!r.holds) {
      out.push_back("t_" + std::to_string(r.n) + " = " + std::to_string(r.t_n) + " > t_1 + T_" +
                    std::to_string(r.n - 1) + " = " + std::to_string(r.bound));
    }
  }
  for (const auto& r : inequalities.bayer_mumford) {
    if (!r.holds) out.push_back("Bayer-Mumford bound fails at n = " + std::to_string(r.n));
  }
  for (const auto& r : inequalities.herzog_srinivasan) {
    if (!r.holds) {
      out.push_back("T_" + std::to_string(r.a + 1) + " > T_" + std::to_string(r.a) + " + T_1");
    }
  }
  for (const auto& r : inequalities.tail) {
    if (!r.holds) {
      out.push_back("T_" + std::to_string(r.n) + " > T_" + std::to_string(r.a) + " + T_" +
                    std::to_string(r.n - r.a) + " on a Gorenstein table");
    }
  }
  if (gorenstein.is_cm_gorenstein) {
    if (!gorenstein.duality_ok) out.push_back("Gorenstein table is not self-dual");
    if (!gorenstein.dual_shifts_ok) out.push_back("c - t_{h-a} != T_a on a Gorenstein table");
    if (!gorenstein.socle_subadditive) out.push_back("T_h > T_a + T_{h-a} on a Gorenstein table");
    if (!gorenstein.tail_subadditive) {
      out.push_back("T_{h-1} > T_a + T_{h-1-a} on a Gorenstein table");
    }
  }
  if (purity.is_pure && !purity.chain_ok) out.push_back("pure table with T_n > T_1 + T_{n-1}");
  for (const auto& w : witnesses) {
    if (!(w.cycle_closed && w.lift_ok && w.nonzero && w.degree_ok && w.rank_ok)) {
      out.push_back("witness certificate for n = " + std::to_string(w.n) + " failed verification");
    }
  }
  if (!hilbert_consistent) out.push_back("Betti table disagrees with the Hilbert series");
  if (!complex_ok || !minimal_ok || !rank_exact) out.push_back("resolution failed self-checks");
  return out;
}

std::vector<std::string> AnalysisReport::subadditivity_failures() const {
  std::vector<std::string> out;
  for (const auto& r : inequalities.subadditivity) {
    if (!r.holds) {
      out.push_back("T_" + std::to_string(r.a + r.b) + " = " + std::to_string(r.T_sum) + " > T_" +
                    std::to_string(r.a) + " + T_" + std::to_string(r.b) + " = " +
                    std::to_string(r.bound));
    }
  }
  return out;
}

template <class K>
AnalysisReport analyze(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators,
                       const GradedFreeResolution<K>& minimal, const AnalysisOptions& options) {
  AnalysisReport r;
  r.field = ring->field().name();
  r.variables = ring->variables();
  r.order = ring->order();
  r.is_monomial = true;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    ++r.generator_count;
    r.is_monomial = r.is_monomial && g.size() == 1;
  }
  r.betti = betti_table(minimal);
  r.regularity = regularity(r.betti);
  r.hilbert_numerator = hilbert_numerator(ring, generators);
  r.hilbert_consistent = r.hilbert_numerator == k_polynomial(r.betti);
  r.complex_ok = verify_complex(minimal);
  r.minimal_ok = has_no_unit_entries(minimal);
  std::mt19937_64 rng(0x5eedULL);
  r.rank_exact = rank_exact(minimal, rng);
  r.gorenstein = detect_gorenstein(r.betti);
  r.purity = detect_pure(r.betti);
  r.inequalities = check_inequalities(
      r.betti, r.is_monomial, static_cast<int>(ring->nvars()),
      r.gorenstein.is_cm_gorenstein ? std::optional<int>(r.gorenstein.h) : std::nullopt);
  if (options.witnesses && minimal.length() >= 2) {
    WitnessBuilder<K> builder(minimal, options.resolution.groebner);
    for (int n = 2; n <= static_cast<int>(minimal.length()); ++n) {
      r.witnesses.push_back(summarize(builder.construct(n)));
    }
  }
  return r;
}

template <class K>
AnalysisReport analyze(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators,
                       const AnalysisOptions& options) {
  return analyze(ring, generators, minimal_resolution(ring, generators, options.resolution),
                 options);
}

#define SYZYGY_INSTANTIATE(K)                                                                   \
  template class WitnessBuilder<K>;                                                             \
  template WitnessCertificate<K> construct_witness(const GradedFreeResolution<K>&, int);        \
  template WitnessCertificate<K> construct_witness(const GradedFreeResolution<K>&, int, int);   \
  template WitnessSummary summarize(const WitnessCertificate<K>&);                              \
  template AnalysisReport analyze(const RingPtr<K>&, const std::vector<Polynomial<K>>&,         \
                                  const AnalysisOptions&);                                      \
  template AnalysisReport analyze(const RingPtr<K>&, const std::vector<Polynomial<K>>&,         \
                                  const GradedFreeResolution<K>&, const AnalysisOptions&);

SYZYGY_INSTANTIATE(PrimeField)
SYZYGY_INSTANTIATE(RationalField)

}  // namespace syzygy
