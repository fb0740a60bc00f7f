#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syzygy/betti.hpp"

namespace syzygy {

// Integer polynomial in q, coefficient i at index i, no trailing zeros.
using QPolynomial = std::vector<std::int64_t>;

std::string to_string(const QPolynomial& p);

// Numerator N(q) of the Hilbert series N(q)/(1-q)^d of S/M for a monomial
// ideal M (generators need not be minimal).
QPolynomial hilbert_numerator(const std::vector<Monomial>& generators, std::size_t nvars);

// Same for S/I, through the lead-term ideal of a Groebner basis of I.
template <class K>
QPolynomial hilbert_numerator(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators);

// sum_a (-1)^a sum_j beta_aj q^j.
QPolynomial k_polynomial(const BettiTable& table);

// K-polynomial of the table equals the Hilbert numerator of S/I.
template <class K>
bool hilbert_consistency(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators,
                         const BettiTable& table);

// Codimension of S/I: the multiplicity of (1 - q) in N(q). Krull dimension
// is nvars minus this.
int codimension(const QPolynomial& numerator);

}  // namespace syzygy
