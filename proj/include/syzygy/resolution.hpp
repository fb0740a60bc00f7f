#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "syzygy/free_module.hpp"
#include "syzygy/groebner.hpp"

namespace syzygy {

// 0 -> F_s -> ... -> F_1 -> F_0 = S. differential(n) is d_n : F_n -> F_{n-1}.
template <class K>
class GradedFreeResolution {
 public:
  GradedFreeResolution() = default;
  // Checks that consecutive differentials share their middle module and
  // that d_1 lands in S.
  GradedFreeResolution(RingPtr<K> ring, std::vector<GradedMatrix<K>> differentials, bool minimal);

  const RingPtr<K>& ring() const { return ring_; }
  bool minimal() const { return minimal_; }
  // s: the index of the last nonzero free module.
  std::size_t length() const { return differentials_.size(); }
  const std::vector<GradedMatrix<K>>& differentials() const { return differentials_; }
  // 1 <= n <= length().
  const GradedMatrix<K>& differential(std::size_t n) const;
  // F_a for 0 <= a <= length(); F_0 = S.
  const GradedFreeModule& module(std::size_t a) const;
  std::vector<std::size_t> ranks() const;

 private:
  RingPtr<K> ring_;
  std::vector<GradedMatrix<K>> differentials_;
  GradedFreeModule base_ = GradedFreeModule::ring();
  bool minimal_ = false;
};

struct ResolutionOptions {
  // Bounds the total number of reductions (Groebner basis of I plus every
  // Schreyer syzygy).
  BuchbergerOptions groebner;
};

// Schreyer resolution of S/I. Level 1 is the reduced Groebner basis of I;
// each further level holds the Schreyer syzygies of the previous one. The
// result is exact but usually not minimal. Zero generators are ignored.
template <class K>
GradedFreeResolution<K> free_resolution(const RingPtr<K>& ring,
                                        const std::vector<Polynomial<K>>& generators,
                                        const ResolutionOptions& options = {});

// Removes every unit entry by change of basis, lowest internal degree first.
// Level 1 of the result is sorted by (degree, lead term descending), the
// other levels by shift.
template <class K>
GradedFreeResolution<K> minimalize(const GradedFreeResolution<K>& resolution);

template <class K>
GradedFreeResolution<K> minimal_resolution(const RingPtr<K>& ring,
                                           const std::vector<Polynomial<K>>& generators,
                                           const ResolutionOptions& options = {});

// d_{n-1} o d_n = 0 for every n, in exact arithmetic.
template <class K>
bool verify_complex(const GradedFreeResolution<K>& resolution);

// True when no differential of index >= 1 has a nonzero constant entry.
template <class K>
bool has_no_unit_entries(const GradedFreeResolution<K>& resolution);

// rank d_n + rank d_{n+1} = rank F_n for 1 <= n <= s, with ranks taken after
// evaluating at a random point (a second point is tried before giving up).
template <class K>
bool rank_exact(const GradedFreeResolution<K>& resolution, std::mt19937_64& rng);

}  // namespace syzygy
