#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syzygy/monomial.hpp"

namespace syzygy {

// Term order on a free module S^r, refined by the ring's monomial order.
//
// position_over_term: e_0 > e_1 > ...; ties broken by the monomial.
// schreyer: m*e_i > n*e_j iff m*w_i > n*w_j in the ring order, ties broken
// by the larger rank (ranks default to the basis index). With w_i the lead
// monomial of the i-th syzygy and ranks recording the order of the lead
// components one level down, this is the order Schreyer's theorem uses.
struct ModuleOrder {
  enum class Kind { position_over_term, schreyer };

  Kind kind = Kind::position_over_term;
  std::vector<Monomial> weights;
  std::vector<std::uint32_t> ranks;

  static ModuleOrder position_over_term() { return {}; }
  static ModuleOrder schreyer(std::vector<Monomial> weights,
                              std::vector<std::uint32_t> ranks = {}) {
    if (ranks.empty()) {
      for (std::size_t i = 0; i < weights.size(); ++i) ranks.push_back(static_cast<std::uint32_t>(i));
    }
    return {Kind::schreyer, std::move(weights), std::move(ranks)};
  }

  std::string to_string() const {
    return kind == Kind::schreyer ? "schreyer(" + std::to_string(weights.size()) + ")"
                                  : "position-over-term";
  }

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

}  // namespace syzygy
