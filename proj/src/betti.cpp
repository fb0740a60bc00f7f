#include "syzygy/betti.hpp"

#include <algorithm>

namespace syzygy {

BettiTable::BettiTable() : BettiTable(Entries{{{0, 0}, 1}}) {}

BettiTable::BettiTable(Entries entries) {
  for (const auto& [key, count] : entries) {
    if (count != 0) entries_.emplace(key, count);
  }
  int top = -1;
  for (const auto& [key, count] : entries_) {
    const auto [a, j] = key;
    if (a < 0) throw ContractError("negative homological degree in Betti table");
    if (a == 0 && (j != 0 || count != 1)) throw ContractError("column 0 must be beta_00 = 1");
    top = std::max(top, a);
  }
  if (top < 0 || (*this)(0, 0) != 1) throw ContractError("Betti table without beta_00 = 1");
  t_.assign(static_cast<std::size_t>(top) + 1, 0);
  T_.assign(static_cast<std::size_t>(top) + 1, 0);
  std::vector<bool> seen(t_.size(), false);
  for (const auto& [key, count] : entries_) {
    const auto a = static_cast<std::size_t>(key.first);
    if (!seen[a]) {
      t_[a] = key.second;
      seen[a] = true;
    }
    T_[a] = key.second;  // map order: j ascending within a column
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ContractError("Betti table has an empty column below its projective dimension");
  }
}

std::size_t BettiTable::operator()(int a, int j) const {
  const auto it = entries_.find({a, j});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int a) const {
  std::size_t n = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == a) n += count;
  }
  return n;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out(t_.size(), 0);
  for (const auto& [key, count] : entries_) out[static_cast<std::size_t>(key.first)] += count;
  return out;
}

template <class K>
BettiTable betti_table(const GradedFreeResolution<K>& resolution) {
  if (!resolution.minimal()) throw ContractError("Betti table needs a minimal resolution");
  BettiTable::Entries entries{{{0, 0}, 1}};
  for (std::size_t a = 1; a <= resolution.length(); ++a) {
    for (int j : resolution.differential(a).source().shifts()) ++entries[{static_cast<int>(a), j}];
  }
  return BettiTable(std::move(entries));
}

int regularity(const BettiTable& table) {
  int reg = 0;
  for (int a = 0; a <= table.projdim(); ++a) reg = std::max(reg, table.T(a) - a);
  return reg;
}

template BettiTable betti_table(const GradedFreeResolution<PrimeField>&);
template BettiTable betti_table(const GradedFreeResolution<RationalField>&);

}  // namespace syzygy
