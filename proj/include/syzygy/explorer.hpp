#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/analysis.hpp"

namespace syzygy {

enum class IdealClass { generic_monomial, stable, squarefree_strongly_stable, generic_homogeneous };

std::string to_string(IdealClass c);
std::optional<IdealClass> parse_ideal_class(const std::string& name);

struct SearchParams {
  int nvars = 4;
  int min_degree = 2;  // clamped to max_degree
  int max_degree = 4;
  int min_generators = 1;
  int max_generators = 6;
  IdealClass ideal_class = IdealClass::generic_monomial;
  int samples = 100;
  std::uint64_t seed = 1;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  BuchbergerOptions budget;
  bool witnesses = true;

  // Throws InvalidArgumentError on nonpositive bounds, an empty range, or a
  // squarefree class with max_degree > nvars.
  void validate() const;
};

// Minimal generators of the smallest stable ideal containing `gens`:
// for m in I with i the largest index such that x_i | m, every x_j m / x_i
// with j < i lies in I.
std::vector<Monomial> stable_closure(const std::vector<Monomial>& gens);

// Squarefree strongly stable closure of squarefree monomials: for x_i | m
// and j < i with x_j not dividing m, x_j m / x_i lies in I.
std::vector<Monomial> squarefree_strongly_stable_closure(const std::vector<Monomial>& gens);

// Minimal generators sorted by degree, then lex descending.
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);

// Ring GF(p)[x1..xd] used by the explorer.
RingPtr<PrimeField> explorer_ring(const SearchParams& params);

// Deterministic in (seed, index).
std::vector<Polynomial<PrimeField>> random_ideal(const SearchParams& params, std::uint64_t index);

struct Violation {
  std::uint64_t sample;
  std::string category;  // "theorem1", "subadditivity", "herzog_srinivasan"
  std::string detail;
  std::vector<std::string> generators;
};

struct SearchSummary {
  SearchParams params;
  std::uint64_t completed = 0;
  std::vector<std::pair<std::uint64_t, std::string>> skipped;
  std::vector<Violation> theorem1;
  std::vector<Violation> subadditivity;
  std::vector<Violation> herzog_srinivasan;
  std::vector<Violation> other;  // any other theorem check or witness failure
  // Slack (bound - value) -> record count; slack 0 is a tight record.
  std::map<std::string, std::map<int, std::uint64_t>> histograms;

  // Whether subadditivity violations count as failures for this class.
  bool subadditivity_required() const;
  bool herzog_srinivasan_required() const;
  // A violation of t_n <= t_1 + T_{n-1}, another proven bound, or a failed
  // certificate: a tool bug.
  bool internal_failure() const;
  // A violation in a category that must be empty for this class.
  bool findings() const;
};

SearchSummary search(const SearchParams& params);

}  // namespace syzygy
