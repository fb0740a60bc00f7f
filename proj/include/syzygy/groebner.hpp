#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "syzygy/free_module.hpp"
#include "syzygy/module_order.hpp"

namespace syzygy {

struct BuchbergerOptions {
  // Pair reductions allowed before BudgetExceededError.
  std::uint64_t step_budget = 10'000'000;
  // Homogeneous truncation: pairs of degree above the bound are skipped and
  // the result is a Groebner basis only up to that degree.
  std::optional<int> degree_bound;
  // Record every basis element as a combination of the input generators.
  bool track_representation = false;
};

template <class K>
struct GroebnerCache;

// Groebner basis of a submodule of `ambient`. An ideal is the rank-one case.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> ring, GradedFreeModule ambient, ModuleOrder order,
                std::vector<ModuleElement<K>> generators, bool reduced,
                std::optional<int> degree_bound = std::nullopt);

  const RingPtr<K>& ring() const { return ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<ModuleElement<K>>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool reduced() const { return reduced_; }
  // Set when the basis is only complete up to this degree.
  std::optional<int> degree_bound() const { return degree_bound_; }

  // representation()[i] writes generators()[i] in terms of the input
  // generators of buchberger() (present only when tracking was requested).
  const std::optional<std::vector<ModuleElement<K>>>& representation() const {
    return representation_;
  }
  void set_representation(std::vector<ModuleElement<K>> rep) { representation_ = std::move(rep); }

  // Leading (monomial, component) pairs, in generator order.
  std::vector<std::pair<Monomial, std::uint32_t>> lead_terms() const;

  // Internal term-list form of the generators, built once.
  const GroebnerCache<K>& cache() const { return *cache_; }

 private:
  RingPtr<K> ring_;
  GradedFreeModule ambient_;
  ModuleOrder order_;
  std::vector<ModuleElement<K>> generators_;
  bool reduced_;
  std::optional<int> degree_bound_;
  std::optional<std::vector<ModuleElement<K>>> representation_;
  std::shared_ptr<const GroebnerCache<K>> cache_;
};

template <class K>
struct ReductionTrace {
  ModuleElement<K> remainder;
  // One quotient per basis generator: input = sum q_i g_i + remainder.
  std::vector<Polynomial<K>> quotients;
};

// Full division of v by G. The remainder is zero iff v lies in the span
// (for a complete basis).
template <class K>
ReductionTrace<K> normal_form(const ModuleElement<K>& v, const GroebnerBasis<K>& basis);

// Same, asserting that the caller expects `order`; throws ContractError
// when the basis was computed for another order.
template <class K>
ReductionTrace<K> normal_form(const ModuleElement<K>& v, const GroebnerBasis<K>& basis,
                              const ModuleOrder& order);

// Reduced Groebner basis of the submodule generated by `gens`: normal
// selection strategy with Gebauer-Moeller pair elimination, leading
// coefficients scaled to one.
template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const GradedFreeModule& ambient,
                            const std::vector<ModuleElement<K>>& gens, const ModuleOrder& order,
                            const BuchbergerOptions& options = {});

// Ideal convenience overload (rank-one ambient module, no shift).
template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                            const BuchbergerOptions& options = {});

// Independent certificate: every S-pair reduces to zero.
template <class K>
bool check_basis(const GroebnerBasis<K>& basis);

// Columns generating ker(M), with M o N = 0. Columns of M must be
// homogeneous; columns of N are homogeneous with source shifts equal to
// their degrees. With `minimal` the columns are pruned to a minimal
// homogeneous generating set.
template <class K>
GradedMatrix<K> syzygy_basis(const GradedMatrix<K>& m, bool minimal = false,
                             const BuchbergerOptions& options = {});

// Some x with M(x) = v, or nullopt when v is not in the column span.
template <class K>
std::optional<ModuleElement<K>> lift_through(const GradedMatrix<K>& m, const ModuleElement<K>& v,
                                             const BuchbergerOptions& options = {});

// Lead monomials of a polynomial Groebner basis (the initial ideal).
template <class K>
std::vector<Monomial> initial_ideal(const GroebnerBasis<K>& basis);

}  // namespace syzygy
