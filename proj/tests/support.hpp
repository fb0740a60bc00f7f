#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "syzygy/analysis.hpp"
#include "syzygy/io.hpp"

namespace syzygy::test {

using Fp = PrimeField;
using Qq = RationalField;

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);

// Rank over GF(p) of a dense matrix with entries already reduced mod p.
// Plain Gaussian elimination, kept separate from the library's dense_rank.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

// beta_{i,j}(S/I) for j <= max_degree as the homology of the Koszul complex
// K(x_1..x_n) tensored with S/I. Each (S/I)_d is built from scratch by row
// reduction of all products m*g of degree d.
BettiTable::Entries koszul_betti(const RingPtr<Fp>& ring, const std::vector<Polynomial<Fp>>& gens,
                                 int max_degree);

// Monomial ideal over GF(32003); complete, since no shift exceeds the degree
// of the lcm of all generators.
BettiTable::Entries koszul_betti(const std::vector<Monomial>& gens, std::size_t nvars);

// dim_k (S/I)_d by the rank of all products m*g of degree d.
std::size_t hilbert_function(const RingPtr<Fp>& ring, const std::vector<Polynomial<Fp>>& gens,
                             int degree);

// Coefficient of q^d in N(q) / (1-q)^n.
std::int64_t series_coefficient(const QPolynomial& numerator, std::size_t nvars, int degree);

// Compares the table against the library's Hilbert numerator and, over
// GF(p), against hilbert_function for every degree up to max T + 2.
struct HilbertTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};
HilbertTally& hilbert_tally();
template <class K>
bool record_hilbert(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                    const BettiTable& table);

// Minimal resolution plus its table, with the Hilbert check recorded.
template <class K>
struct Resolved {
  GradedFreeResolution<K> resolution;
  BettiTable table;
  bool hilbert_ok = false;
};
template <class K>
Resolved<K> resolve(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens);

RingPtr<Fp> prime_ring(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex);
RingPtr<Qq> rational_ring(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex);

template <class K>
std::vector<Polynomial<K>> monomial_generators(const RingPtr<K>& ring,
                                               const std::vector<Monomial>& monos);

// Uniform degree in [1, max_degree], uniform monomial of that degree.
std::vector<Monomial> random_monomials(std::mt19937_64& rng, std::size_t nvars, int max_degree,
                                       int count);

template <class K>
Polynomial<K> random_polynomial(std::mt19937_64& rng, const RingPtr<K>& ring, int max_degree,
                                int max_terms);

template <class K>
Polynomial<K> random_form(std::mt19937_64& rng, const RingPtr<K>& ring, int degree, int max_terms);

// Parses a document and materializes it over GF(p) with the given order.
struct Loaded {
  InputDocument doc;
  RingPtr<Fp> ring;
  std::vector<Polynomial<Fp>> gens;
};
Loaded load(const std::string& text, MonomialOrder order = MonomialOrder::grevlex);

}  // namespace syzygy::test
