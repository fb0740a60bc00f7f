#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "syzygy/resolution.hpp"

namespace syzygy {

// Graded Betti numbers beta_{a,j} of a minimal resolution, with the shift
// sequences t_a = min{j : beta_aj != 0} and T_a = max{j : beta_aj != 0}.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, int>, std::size_t>;

  // The table of S/0: beta_00 = 1 and nothing else.
  BettiTable();
  // Zero counts are dropped. Throws ContractError unless beta_00 = 1 is the
  // only entry in column 0 and the nonzero columns are 0..s without gaps.
  explicit BettiTable(Entries entries);

  std::size_t operator()(int a, int j) const;
  const Entries& entries() const { return entries_; }
  int projdim() const { return static_cast<int>(t_.size()) - 1; }
  // Indexed by a = 0..projdim.
  const std::vector<int>& t() const { return t_; }
  const std::vector<int>& T() const { return T_; }
  int t(int a) const { return t_.at(static_cast<std::size_t>(a)); }
  int T(int a) const { return T_.at(static_cast<std::size_t>(a)); }
  std::size_t total(int a) const;
  std::vector<std::size_t> totals() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  Entries entries_;
  std::vector<int> t_;
  std::vector<int> T_;
};

// Requires a minimal resolution (ContractError otherwise).
template <class K>
BettiTable betti_table(const GradedFreeResolution<K>& resolution);

// max_a (T_a - a); 0 for S/0.
int regularity(const BettiTable& table);

}  // namespace syzygy
