#include "syzygy/report.hpp"

#include "json.hpp"

namespace syzygy {

using Json = nlohmann::ordered_json;

namespace {

std::vector<int> tail_of(const std::vector<int>& v) {
  return v.empty() ? v : std::vector<int>(v.begin() + 1, v.end());
}

Json betti_json(const BettiTable& b, int reg) {
  Json entries = Json::array();
  for (const auto& [key, count] : b.entries()) {
    entries.push_back({{"a", key.first}, {"j", key.second}, {"beta", count}});
  }
  return {{"entries", entries}, {"totals", b.totals()}, {"t", b.t()},
          {"T", b.T()},         {"projdim", b.projdim()}, {"regularity", reg}};
}

Json inequalities_json(const InequalityReport& r) {
  Json out;
  Json& th = out["theorem1"] = Json::array();
  for (const auto& x : r.theorem1) {
    th.push_back({{"n", x.n}, {"t_n", x.t_n}, {"bound", x.bound}, {"holds", x.holds},
                  {"tight", x.tight}});
  }
  Json& sub = out["subadditivity"] = Json::array();
  for (const auto& x : r.subadditivity) {
    sub.push_back({{"a", x.a}, {"b", x.b}, {"T_sum", x.T_sum}, {"bound", x.bound},
                   {"holds", x.holds}, {"tight", x.tight}});
  }
  Json& tail = out["tail"] = Json::array();
  for (const auto& x : r.tail) {
    tail.push_back({{"n", x.n}, {"a", x.a}, {"T_n", x.T_n}, {"bound", x.bound},
                    {"holds", x.holds}, {"tight", x.tight}});
  }
  Json& bm = out["bayer_mumford"] = Json::array();
  for (const auto& x : r.bayer_mumford) {
    bm.push_back({{"n", x.n}, {"T_n", x.T_n}, {"bound", x.bound}, {"holds", x.holds}});
  }
  Json& hs = out["herzog_srinivasan"] = Json::array();
  for (const auto& x : r.herzog_srinivasan) {
    hs.push_back({{"a", x.a}, {"T_next", x.T_next}, {"bound", x.bound}, {"holds", x.holds},
                  {"tight", x.tight}});
  }
  return out;
}

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    out.push_back({{"sample", v.sample}, {"detail", v.detail}, {"generators", v.generators}});
  }
  return out;
}

}  // namespace

ExpectationCheck check_expectation(const Expectation& expect, const BettiTable& table) {
  ExpectationCheck c;
  const auto T = tail_of(table.T());
  if (expect.T != T) {
    c.T_matches = false;
    c.mismatches.push_back("expected T = " + format_int_list(expect.T) + ", computed " +
                           format_int_list(T));
  }
  if (expect.t) {
    const auto t = tail_of(table.t());
    c.t_matches = *expect.t == t;
    if (!*c.t_matches) {
      c.mismatches.push_back("expected t = " + format_int_list(*expect.t) + ", computed " +
                             format_int_list(t));
    }
  }
  return c;
}

std::string emit_report(const AnalysisReport& r, const std::optional<Expectation>& expect) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["input"] = {{"field", r.field},
                  {"variables", r.variables},
                  {"order", to_string(r.order)},
                  {"generators", r.generator_count},
                  {"is_monomial", r.is_monomial}};
  doc["betti"] = betti_json(r.betti, r.regularity);
  doc["t"] = r.betti.t();
  doc["T"] = r.betti.T();
  doc["projdim"] = r.betti.projdim();
  doc["regularity"] = r.regularity;
  doc["hilbert"] = {{"numerator", r.hilbert_numerator},
                    {"numerator_text", to_string(r.hilbert_numerator)},
                    {"consistent", r.hilbert_consistent}};
  doc["checks"] = {{"complex", r.complex_ok},
                   {"minimal", r.minimal_ok},
                   {"rank_exact", r.rank_exact},
                   {"hilbert_consistent", r.hilbert_consistent}};
  const auto& g = r.gorenstein;
  doc["gorenstein"] = {{"is_cm_gorenstein", g.is_cm_gorenstein},
                       {"last_rank_one", g.last_rank_one},
                       {"projdim", g.projdim},
                       {"h", g.h},
                       {"c", g.c ? Json(*g.c) : Json(nullptr)},
                       {"duality_ok", g.duality_ok},
                       {"dual_shifts_ok", g.dual_shifts_ok},
                       {"socle_subadditive", g.socle_subadditive},
                       {"tail_subadditive", g.tail_subadditive},
                       {"criterion", "last rank 1 and projdim = codim (Cohen-Macaulay case only)"}};
  Json chain = Json::array();
  for (const auto& x : r.purity.chain) {
    chain.push_back({{"n", x.n}, {"T_n", x.t_n}, {"bound", x.bound}, {"holds", x.holds},
                     {"tight", x.tight}});
  }
  doc["purity"] = {{"is_pure", r.purity.is_pure},
                   {"shifts", r.purity.shifts},
                   {"chain", chain},
                   {"chain_ok", r.purity.chain_ok}};
  doc["inequalities"] = inequalities_json(r.inequalities);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"n", w.n},
                  {"t", w.t},
                  {"degree", w.degree},
                  {"bound", w.bound},
                  {"verified", w.cycle_closed && w.lift_ok && w.nonzero && w.degree_ok && w.rank_ok},
                  {"cycle_closed", w.cycle_closed},
                  {"lift_ok", w.lift_ok},
                  {"nonzero", w.nonzero},
                  {"degree_ok", w.degree_ok},
                  {"rank_ok", w.rank_ok}});
  }
  doc["witnesses"] = ws;
  doc["findings"] = {{"theorem_failures", r.theorem_failures()},
                     {"subadditivity_failures", r.subadditivity_failures()}};
  if (expect) {
    const auto c = check_expectation(*expect, r.betti);
    Json e = {{"T", expect->T}, {"T_matches", c.T_matches}};
    if (expect->t) {
      e["t"] = *expect->t;
      e["t_matches"] = *c.t_matches;
    }
    e["matches"] = c.ok();
    doc["expect"] = e;
  }
  return doc.dump(2) + "\n";
}

std::string emit_explorer_report(const SearchSummary& s) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  const auto& p = s.params;
  Json hist;
  for (const auto& [name, h] : s.histograms) {
    Json rows = Json::array();
    for (const auto& [slack, count] : h) rows.push_back({{"slack", slack}, {"count", count}});
    hist[name] = rows;
  }
  Json skipped = Json::array();
  for (const auto& [index, why] : s.skipped) skipped.push_back({{"sample", index}, {"error", why}});
  doc["explorer"] = {
      {"params",
       {{"class", to_string(p.ideal_class)},
        {"vars", p.nvars},
        {"min_degree", std::min(p.min_degree, p.max_degree)},
        {"max_degree", p.max_degree},
        {"min_generators", p.min_generators},
        {"max_generators", p.max_generators},
        {"samples", p.samples},
        {"seed", p.seed},
        {"field", "GF(" + std::to_string(p.characteristic) + ")"}}},
      {"completed", s.completed},
      {"skipped", skipped},
      {"violations",
       {{"theorem1", violations_json(s.theorem1)},
        {"subadditivity", violations_json(s.subadditivity)},
        {"herzog_srinivasan", violations_json(s.herzog_srinivasan)},
        {"other", violations_json(s.other)}}},
      {"required_empty",
       {{"theorem1", true},
        {"subadditivity", s.subadditivity_required()},
        {"herzog_srinivasan", s.herzog_srinivasan_required()}}},
      {"histograms", hist}};
  return doc.dump(2) + "\n";
}

}  // namespace syzygy
