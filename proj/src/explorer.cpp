#include "syzygy/explorer.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace syzygy {

namespace {

// Uniform integer in [lo, hi] by rejection, identical on every platform.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  return compare(a, b, MonomialOrder::lex) > 0;
}

std::vector<Monomial> squarefree_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    bool sq = true;
    for (std::size_t i = 0; i < nvars; ++i) sq = sq && m[i] <= 1;
    if (sq) out.push_back(m);
  }
  return out;
}

template <class Exchange>
std::vector<Monomial> closure(const std::vector<Monomial>& gens, Exchange exchange) {
  std::vector<Monomial> current = minimal_monomial_generators(gens);
  for (;;) {
    std::vector<Monomial> next = current;
    for (const auto& m : current) exchange(m, next);
    next = minimal_monomial_generators(std::move(next));
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<std::string> render(const std::vector<Polynomial<PrimeField>>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

}  // namespace

std::string to_string(IdealClass c) {
  switch (c) {
    case IdealClass::generic_monomial: return "generic-monomial";
    case IdealClass::stable: return "stable";
    case IdealClass::squarefree_strongly_stable: return "squarefree-strongly-stable";
    case IdealClass::generic_homogeneous: return "generic-homogeneous";
  }
  return "unknown";
}

std::optional<IdealClass> parse_ideal_class(const std::string& name) {
  for (auto c : {IdealClass::generic_monomial, IdealClass::stable,
                 IdealClass::squarefree_strongly_stable, IdealClass::generic_homogeneous}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

void SearchParams::validate() const {
  if (nvars < 1 || max_degree < 1 || min_degree < 1 || min_generators < 1 || samples < 0) {
    throw InvalidArgumentError("explorer bounds must be positive");
  }
  if (min_generators > max_generators) throw InvalidArgumentError("empty generator count range");
  if (ideal_class == IdealClass::squarefree_strongly_stable && max_degree > nvars) {
    throw InvalidArgumentError("squarefree generators need max degree <= number of variables");
  }
  if (!is_prime(characteristic) || characteristic >= (1u << 31)) {
    throw InvalidArgumentError("characteristic must be a prime below 2^31");
  }
}

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_greater(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Monomial> stable_closure(const std::vector<Monomial>& gens) {
  return closure(gens, [](const Monomial& m, std::vector<Monomial>& out) {
    if (m.is_one()) return;
    std::size_t i = m.size();
    while (m[i - 1] == 0) --i;
    const std::size_t top = i - 1;
    const Monomial xi = Monomial::variable(m.size(), top);
    for (std::size_t j = 0; j < top; ++j) out.push_back(m / xi * Monomial::variable(m.size(), j));
  });
}

std::vector<Monomial> squarefree_strongly_stable_closure(const std::vector<Monomial>& gens) {
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 1) throw InvalidArgumentError("squarefree closure of a non-squarefree monomial");
    }
  }
  return closure(gens, [](const Monomial& m, std::vector<Monomial>& out) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const Monomial xi = Monomial::variable(m.size(), i);
      for (std::size_t j = 0; j < i; ++j) {
        if (m[j] == 0) out.push_back(m / xi * Monomial::variable(m.size(), j));
      }
    }
  });
}

RingPtr<PrimeField> explorer_ring(const SearchParams& params) {
  std::vector<std::string> vars;
  for (int i = 1; i <= params.nvars; ++i) vars.push_back("x" + std::to_string(i));
  return make_ring(PrimeField(params.characteristic), vars);
}

std::vector<Polynomial<PrimeField>> random_ideal(const SearchParams& params, std::uint64_t index) {
  params.validate();
  auto rng = sample_rng(params.seed, index);
  const auto ring = explorer_ring(params);
  const auto nvars = static_cast<std::size_t>(params.nvars);
  const int lo = std::min(params.min_degree, params.max_degree);
  const int count = static_cast<int>(uniform(rng, params.min_generators, params.max_generators));
  const bool squarefree = params.ideal_class == IdealClass::squarefree_strongly_stable;

  if (params.ideal_class == IdealClass::generic_homogeneous) {
    const PrimeField& field = ring->field();
    std::vector<Polynomial<PrimeField>> out;
    for (int g = 0; g < count; ++g) {
      const int degree = static_cast<int>(uniform(rng, lo, params.max_degree));
      const auto monos = monomials_of_degree(nvars, degree);
      const auto max_terms = std::min<std::int64_t>(4, static_cast<std::int64_t>(monos.size()));
      const auto nterms = uniform(rng, 1, max_terms);
      std::set<std::size_t> picked;
      while (static_cast<std::int64_t>(picked.size()) < nterms) {
        picked.insert(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(monos.size()) - 1)));
      }
      std::vector<Polynomial<PrimeField>::Term> terms;
      for (std::size_t k : picked) {
        const auto c = static_cast<PrimeField::Element>(uniform(rng, 1, field.characteristic() - 1));
        terms.push_back({c, monos[k]});
      }
      auto p = Polynomial<PrimeField>::from_terms(ring, std::move(terms));
      if (std::none_of(out.begin(), out.end(), [&](const auto& q) { return q == p; })) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  std::vector<Monomial> monos;
  for (int g = 0; g < count; ++g) {
    const int degree = static_cast<int>(uniform(rng, lo, params.max_degree));
    const auto pool = squarefree ? squarefree_of_degree(nvars, degree)
                                 : monomials_of_degree(nvars, degree);
    const auto k = uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1);
    const Monomial& m = pool[static_cast<std::size_t>(k)];
    if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
  }
  switch (params.ideal_class) {
    case IdealClass::stable: monos = stable_closure(monos); break;
    case IdealClass::squarefree_strongly_stable:
      monos = squarefree_strongly_stable_closure(monos);
      break;
    default: monos = minimal_monomial_generators(std::move(monos)); break;
  }
  std::vector<Polynomial<PrimeField>> out;
  for (auto& m : monos) out.push_back(Polynomial<PrimeField>::monomial(ring, 1, std::move(m)));
  return out;
}

bool SearchSummary::subadditivity_required() const {
  return params.ideal_class == IdealClass::stable ||
         params.ideal_class == IdealClass::squarefree_strongly_stable;
}

bool SearchSummary::herzog_srinivasan_required() const {
  return params.ideal_class != IdealClass::generic_homogeneous;
}

bool SearchSummary::internal_failure() const { return !theorem1.empty() || !other.empty(); }

bool SearchSummary::findings() const {
  return (subadditivity_required() && !subadditivity.empty()) ||
         (herzog_srinivasan_required() && !herzog_srinivasan.empty());
}

SearchSummary search(const SearchParams& params) {
  params.validate();
  SearchSummary summary;
  summary.params = params;
  const auto ring = explorer_ring(params);
  AnalysisOptions options;
  options.resolution.groebner = params.budget;
  options.witnesses = params.witnesses;
  for (std::uint64_t index = 0; index < static_cast<std::uint64_t>(params.samples); ++index) {
    const auto gens = random_ideal(params, index);
    AnalysisReport report;
    try {
      report = analyze(ring, gens, options);
    } catch (const Error& e) {
      summary.skipped.emplace_back(index, e.what());
      continue;
    }
    ++summary.completed;
    const auto rendered = render(gens);
    const auto& ineq = report.inequalities;
    for (const auto& r : ineq.theorem1) {
      ++summary.histograms["theorem1"][r.bound - r.t_n];
      if (!r.holds) {
        summary.theorem1.push_back({index, "theorem1",
                                    "t_" + std::to_string(r.n) + " = " + std::to_string(r.t_n) +
                                        " > " + std::to_string(r.bound),
                                    rendered});
      }
    }
    for (const auto& r : ineq.subadditivity) {
      ++summary.histograms["subadditivity"][r.bound - r.T_sum];
      if (!r.holds) {
        summary.subadditivity.push_back(
            {index, "subadditivity",
             "T_" + std::to_string(r.a + r.b) + " = " + std::to_string(r.T_sum) + " > T_" +
                 std::to_string(r.a) + " + T_" + std::to_string(r.b) + " = " +
                 std::to_string(r.bound),
             rendered});
      }
    }
    // Herzog-Srinivasan records exist only for monomial input; evaluate the
    // same inequality on every sample so the histogram covers all classes.
    const auto& t = report.betti;
    for (int a = 1; a + 1 <= t.projdim(); ++a) {
      const int bound = t.T(a) + t.T(1);
      ++summary.histograms["herzog_srinivasan"][bound - t.T(a + 1)];
      if (t.T(a + 1) > bound) {
        summary.herzog_srinivasan.push_back({index, "herzog_srinivasan",
                                             "T_" + std::to_string(a + 1) + " = " +
                                                 std::to_string(t.T(a + 1)) + " > " +
                                                 std::to_string(bound),
                                             rendered});
      }
    }
    for (const auto& f : report.theorem_failures()) {
      if (f.rfind("t_", 0) == 0 || f.rfind("T_", 0) == 0) {
        // Already counted above unless it is a Gorenstein tail record.
        if (f.find("Gorenstein") == std::string::npos) continue;
      }
      summary.other.push_back({index, "other", f, rendered});
    }
  }
  return summary;
}

}  // namespace syzygy
