#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/resolution.hpp"

namespace syzygy {

// t_n <= t_1 + T_{n-1}.
struct Theorem1Record {
  int n;
  int t_n;
  int bound;
  bool holds;
  bool tight;
};

// T_{a+b} <= T_a + T_b, a <= b.
struct SubadditivityRecord {
  int a;
  int b;
  int T_sum;
  int bound;
  bool holds;
  bool tight;
};

// T_n <= T_a + T_{n-a} for n in {h-1, h} on a Gorenstein table.
struct TailRecord {
  int n;
  int a;
  int T_n;
  int bound;
  bool holds;
  bool tight;
};

// T_n <= (2 T_1)^(2^(m-2)) - 1 + n; the bound saturates at INT64_MAX.
struct BayerMumfordRecord {
  int n;
  int T_n;
  std::int64_t bound;
  bool holds;
};

// T_{a+1} <= T_a + T_1 (monomial ideals).
struct HerzogSrinivasanRecord {
  int a;
  int T_next;
  int bound;
  bool holds;
  bool tight;
};

struct InequalityReport {
  std::vector<Theorem1Record> theorem1;
  std::vector<SubadditivityRecord> subadditivity;
  std::vector<TailRecord> tail;
  std::vector<BayerMumfordRecord> bayer_mumford;
  std::vector<HerzogSrinivasanRecord> herzog_srinivasan;

  bool theorem1_holds() const;
  bool subadditive() const;
  bool tail_holds() const;
  bool bayer_mumford_holds() const;
  bool herzog_srinivasan_holds() const;
};

// `gorenstein_codim` enables the tail records (n = h-1, h).
InequalityReport check_inequalities(const BettiTable& table, bool is_monomial, int nvars,
                                    std::optional<int> gorenstein_codim = std::nullopt);

struct GorensteinInfo {
  // Last free module of rank one and projdim equal to the codimension.
  bool is_cm_gorenstein = false;
  bool last_rank_one = false;
  int projdim = 0;
  int h = 0;  // codimension from the Hilbert series
  std::optional<int> c;  // socle degree T_h = t_h
  // beta_{a,j} = beta_{h-a,c-j} for all (a, j).
  bool duality_ok = false;
  // c - t_{h-a} = T_a for 1 <= a <= h-1.
  bool dual_shifts_ok = false;
  // T_h <= T_a + T_{h-a} for 1 <= a <= h-1.
  bool socle_subadditive = false;
  // T_{h-1} <= T_a + T_{h-1-a} for 1 <= a <= h-2.
  bool tail_subadditive = false;
};

// Codimension comes from the K-polynomial of the table, which equals the
// Hilbert numerator of S/I (see hilbert_consistency).
GorensteinInfo detect_gorenstein(const BettiTable& table);

struct PurityProfile {
  bool is_pure = false;
  std::vector<int> shifts;  // j_1..j_s when pure
  // When pure: T_n <= T_1 + T_{n-1} for 2 <= n <= s.
  std::vector<Theorem1Record> chain;
  bool chain_ok = false;
};

PurityProfile detect_pure(const BettiTable& table);

// The cycle Z(f_11, f_{(n-1)t}) in F_{n-1} and a preimage in F_n.
template <class K>
struct WitnessCertificate {
  int n = 0;
  int t = 0;  // 1-based column of F_{n-1}
  ModuleElement<K> cycle;
  ModuleElement<K> lift;
  int degree = 0;  // t_1 + deg f_{(n-1)t}
  int bound = 0;   // t_1 + T_{n-1}
  bool cycle_closed = false;   // d_{n-1}(Z) = 0
  bool lift_ok = false;        // d_n(lift) = Z
  bool nonzero = false;        // Z != 0
  bool degree_ok = false;      // deg Z = degree <= bound
  bool rank_ok = false;        // rank d_n + rank d_{n-1} = beta_{n-1} at a random point
  bool verified() const { return cycle_closed && lift_ok && nonzero && degree_ok && rank_ok; }
};

// Builds the homotopy h_k : F_k -> F_{k+1} with d h_k + h_{k-1} d = g_1,
// where g_1 = d_1(f_11) has degree t_1. Lifts go through a Groebner basis
// of the column span of each d_n with tracked representations.
template <class K>
class WitnessBuilder {
 public:
  explicit WitnessBuilder(const GradedFreeResolution<K>& resolution,
                          BuchbergerOptions options = {});
  ~WitnessBuilder();
  WitnessBuilder(const WitnessBuilder&) = delete;
  WitnessBuilder& operator=(const WitnessBuilder&) = delete;

  // Smallest t with Z != 0; InternalError when every Z vanishes or a lift
  // fails. 2 <= n <= projdim.
  WitnessCertificate<K> construct(int n);
  // The given 1-based column; the certificate reports nonzero = false when
  // Z vanishes there.
  WitnessCertificate<K> construct(int n, int t);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

template <class K>
WitnessCertificate<K> construct_witness(const GradedFreeResolution<K>& resolution, int n);

template <class K>
WitnessCertificate<K> construct_witness(const GradedFreeResolution<K>& resolution, int n, int t);

struct WitnessSummary {
  int n;
  int t;
  int degree;
  int bound;
  bool cycle_closed;
  bool lift_ok;
  bool nonzero;
  bool degree_ok;
  bool rank_ok;
  std::string cycle;
  std::string lift;
};

template <class K>
WitnessSummary summarize(const WitnessCertificate<K>& cert);

struct AnalysisOptions {
  ResolutionOptions resolution;
  bool witnesses = true;
};

struct AnalysisReport {
  std::string field;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::grevlex;
  std::size_t generator_count = 0;
  bool is_monomial = false;
  BettiTable betti;
  int regularity = 0;
  QPolynomial hilbert_numerator;
  bool hilbert_consistent = false;
  bool complex_ok = false;
  bool minimal_ok = false;
  bool rank_exact = false;
  GorensteinInfo gorenstein;
  PurityProfile purity;
  InequalityReport inequalities;
  std::vector<WitnessSummary> witnesses;

  // Failures of statements that are theorems for this input: the bound
  // t_n <= t_1 + T_{n-1}, Bayer-Mumford, Herzog-Srinivasan on monomial
  // ideals, the Gorenstein duality consequences, the pure chain, and any
  // witness invariant or resolution self-check.
  std::vector<std::string> theorem_failures() const;
  // Subadditivity failures; only informational off the Gorenstein case.
  std::vector<std::string> subadditivity_failures() const;
};

// resolve -> minimalize -> Betti table -> every check -> witnesses for
// 2 <= n <= projdim.
template <class K>
AnalysisReport analyze(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators,
                       const AnalysisOptions& options = {});

template <class K>
AnalysisReport analyze(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& generators,
                       const GradedFreeResolution<K>& minimal, const AnalysisOptions& options = {});

}  // namespace syzygy
