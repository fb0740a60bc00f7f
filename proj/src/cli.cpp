#include "syzygy/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "syzygy/analysis.hpp"
#include "syzygy/explorer.hpp"
#include "syzygy/io.hpp"
#include "syzygy/report.hpp"

namespace syzygy {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::optional<std::uint32_t> characteristic;
  bool rationals = false;
  std::optional<std::string> order;
  std::optional<std::uint64_t> budget;
  std::string report_path;
  bool quiet = false;
  int step = 0;
  int column = 0;
  std::string ideal_class = "generic-monomial";
  SearchParams search;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// A readable file wins; anything that looks like a document is taken as
// inline text.
std::string load_input(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (!in) throw Error("cannot read " + input);
    return buffer.str();
  }
  if (input.find("ideal") != std::string::npos && input.find_first_of(" \t\n") != std::string::npos) return input;
  throw Error("no such file: " + input);
}

BuchbergerOptions groebner_options(const Options& o) {
  BuchbergerOptions b;
  if (o.budget) b.step_budget = *o.budget;
  return b;
}

void write_report(const Options& o, const std::string& text) {
  if (o.report_path.empty()) return;
  std::ofstream file(o.report_path, std::ios::binary);
  file << text;
  if (!file) throw Error("cannot write report " + o.report_path);
}

std::string shift_line(std::size_t a, const GradedFreeModule& module) {
  std::vector<int> shifts(module.shifts().begin(), module.shifts().end());
  return "F_" + std::to_string(a) + ": rank " + std::to_string(module.rank()) + ", shifts " +
         format_int_list(shifts) + "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string check_text(const AnalysisReport& r, const std::optional<ExpectationCheck>& expect) {
  std::ostringstream s;
  s << "ring " << r.field << "[";
  for (std::size_t i = 0; i < r.variables.size(); ++i) s << (i ? "," : "") << r.variables[i];
  s << "] " << to_string(r.order) << ", " << r.generator_count << " generators\n\n";
  s << print_betti(r.betti) << "\n";
  s << "projdim " << r.betti.projdim() << ", regularity " << r.regularity << "\n";
  s << "hilbert numerator " << to_string(r.hilbert_numerator) << "\n";
  s << "checks: complex " << yes_no(r.complex_ok) << ", minimal " << yes_no(r.minimal_ok)
    << ", rank exact " << yes_no(r.rank_exact) << ", hilbert " << yes_no(r.hilbert_consistent)
    << "\n";
  const auto& g = r.gorenstein;
  if (g.is_cm_gorenstein) {
    s << "gorenstein: h = " << g.h << ", c = " << *g.c << ", duality " << yes_no(g.duality_ok)
      << ", dual shifts " << yes_no(g.dual_shifts_ok) << ", T_h subadditive "
      << yes_no(g.socle_subadditive) << ", T_{h-1} subadditive " << yes_no(g.tail_subadditive)
      << "\n";
  } else {
    s << "gorenstein: no (codim " << g.h << ", projdim " << g.projdim << ")\n";
  }
  if (r.purity.is_pure) {
    s << "pure: shifts " << format_int_list(r.purity.shifts) << ", chain T_n <= T_1 + T_{n-1} "
      << yes_no(r.purity.chain_ok) << "\n";
  } else {
    s << "pure: no\n";
  }
  const auto& q = r.inequalities;
  s << "t_n <= t_1 + T_{n-1}: " << yes_no(q.theorem1_holds()) << "\n";
  for (const auto& x : q.theorem1) {
    s << "  n = " << x.n << ": " << x.t_n << " <= " << x.bound << (x.tight ? " (tight)" : "")
      << "\n";
  }
  s << "T_{a+b} <= T_a + T_b: " << yes_no(q.subadditive()) << "\n";
  for (const auto& x : q.tail) {
    s << "  tail T_" << x.n << " = " << x.T_n << " <= T_" << x.a << " + T_" << x.n - x.a
      << " = " << x.bound << (x.tight ? " (tight)" : "") << (x.holds ? "" : " FAILS") << "\n";
  }
  if (!q.bayer_mumford.empty()) {
    s << "Bayer-Mumford: " << yes_no(q.bayer_mumford_holds()) << "\n";
  }
  if (!q.herzog_srinivasan.empty()) {
    s << "Herzog-Srinivasan T_{a+1} <= T_a + T_1: " << yes_no(q.herzog_srinivasan_holds())
      << "\n";
  }
  for (const auto& w : r.witnesses) {
    const bool ok = w.cycle_closed && w.lift_ok && w.nonzero && w.degree_ok && w.rank_ok;
    s << "witness n = " << w.n << ": t = " << w.t << ", degree " << w.degree << " <= " << w.bound
      << ", verified " << yes_no(ok) << "\n";
  }
  for (const auto& f : r.theorem_failures()) s << "FINDING " << f << "\n";
  for (const auto& f : r.subadditivity_failures()) {
    s << (r.gorenstein.is_cm_gorenstein ? "FINDING " : "note ") << f << "\n";
  }
  if (expect) {
    s << "expect: " << (expect->ok() ? "matches" : "MISMATCH") << "\n";
    for (const auto& m : expect->mismatches) s << "  " << m << "\n";
  }
  return s.str();
}

template <class K>
std::string witness_text(const WitnessCertificate<K>& c) {
  std::ostringstream s;
  s << "witness n = " << c.n << ", t = " << c.t << "\n";
  s << "cycle Z in F_" << c.n - 1 << ": " << c.cycle.to_string() << "\n";
  s << "lift in F_" << c.n << ": " << c.lift.to_string() << "\n";
  s << "degree " << c.degree << ", bound t_1 + T_" << c.n - 1 << " = " << c.bound << "\n";
  s << "d(Z) = 0: " << yes_no(c.cycle_closed) << "\n";
  s << "d(lift) = Z: " << yes_no(c.lift_ok) << "\n";
  s << "Z != 0: " << yes_no(c.nonzero) << "\n";
  s << "degree ok: " << yes_no(c.degree_ok) << "\n";
  s << "rank ok: " << yes_no(c.rank_ok) << "\n";
  s << "verified: " << yes_no(c.verified()) << "\n";
  return s.str();
}

template <class K>
int run_on(const Options& o, const InputDocument& doc, const RingPtr<K>& ring, std::ostream& out) {
  std::vector<Polynomial<K>> gens;
  try {
    gens = materialize(doc, ring);
  } catch (const InvalidArgumentError& e) {
    throw ParseError(ParseError::Kind::invalid_ring, 0, 0, "", {}, e.what());
  }
  AnalysisOptions options;
  options.resolution.groebner = groebner_options(o);
  const auto minimal = minimal_resolution(ring, gens, options.resolution);

  if (o.command == "resolve" || o.command == "betti") {
    if (!o.quiet) {
      if (o.command == "resolve") {
        for (std::size_t a = 0; a <= minimal.length(); ++a) out << shift_line(a, minimal.module(a));
      } else {
        out << print_betti(betti_table(minimal));
      }
    }
    if (!o.report_path.empty()) {
      options.witnesses = false;
      write_report(o, emit_report(analyze(ring, gens, minimal, options), doc.expect));
    }
    return kExitOk;
  }

  if (o.command == "witness") {
    if (o.step < 2 || static_cast<std::size_t>(o.step) > minimal.length()) {
      throw UsageError("--step must satisfy 2 <= N <= projdim = " +
                       std::to_string(minimal.length()));
    }
    WitnessBuilder<K> builder(minimal, options.resolution.groebner);
    if (o.column != 0) {
      const auto rank = minimal.module(static_cast<std::size_t>(o.step) - 1).rank();
      if (o.column < 1 || static_cast<std::size_t>(o.column) > rank) {
        throw UsageError("--column must satisfy 1 <= T <= " + std::to_string(rank));
      }
    }
    const auto cert = o.column ? builder.construct(o.step, o.column) : builder.construct(o.step);
    if (!o.quiet) out << witness_text(cert);
    if (!o.report_path.empty()) {
      options.witnesses = false;
      auto report = analyze(ring, gens, minimal, options);
      report.witnesses.push_back(summarize(cert));
      write_report(o, emit_report(report, doc.expect));
    }
    // An explicitly chosen column may legitimately give Z = 0.
    const bool ok = o.column ? cert.cycle_closed && cert.lift_ok && cert.rank_ok : cert.verified();
    return ok ? kExitOk : kExitError;
  }

  // check
  const auto report = analyze(ring, gens, minimal, options);
  std::optional<ExpectationCheck> expect;
  if (doc.expect) expect = check_expectation(*doc.expect, report.betti);
  if (!o.quiet) out << check_text(report, expect);
  write_report(o, emit_report(report, doc.expect));
  const bool findings = !report.theorem_failures().empty() ||
                        (report.gorenstein.is_cm_gorenstein &&
                         !report.subadditivity_failures().empty()) ||
                        (expect && !expect->ok());
  return findings ? kExitFindings : kExitOk;
}

int run_explore(const Options& o, std::ostream& out) {
  SearchParams p = o.search;
  const auto cls = parse_ideal_class(o.ideal_class);
  if (!cls) throw UsageError("unknown ideal class " + o.ideal_class);
  p.ideal_class = *cls;
  if (o.rationals) throw UsageError("the explorer works over GF(p) only");
  if (o.characteristic) p.characteristic = *o.characteristic;
  p.budget = groebner_options(o);
  try {
    p.validate();
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }
  const auto summary = search(p);
  if (!o.quiet) {
    out << "class " << to_string(p.ideal_class) << ", " << p.nvars << " variables, degrees "
        << std::min(p.min_degree, p.max_degree) << ".." << p.max_degree << ", seed " << p.seed
        << "\n";
    out << "samples " << p.samples << ", completed " << summary.completed << ", skipped "
        << summary.skipped.size() << "\n";
    for (const auto& [index, why] : summary.skipped) out << "  skipped " << index << ": " << why << "\n";
    auto category = [&](const char* name, const std::vector<Violation>& vs, bool required) {
      out << name << ": " << vs.size() << " violations" << (required ? "" : " (informational)")
          << "\n";
      for (const auto& v : vs) {
        out << "  sample " << v.sample << ": " << v.detail << "\n    ideal";
        for (std::size_t i = 0; i < v.generators.size(); ++i) {
          out << (i ? ", " : " ") << v.generators[i];
        }
        out << "\n";
      }
    };
    category("t_n <= t_1 + T_{n-1}", summary.theorem1, true);
    category("T_{a+b} <= T_a + T_b", summary.subadditivity, summary.subadditivity_required());
    category("T_{a+1} <= T_a + T_1", summary.herzog_srinivasan,
             summary.herzog_srinivasan_required());
    category("other checks", summary.other, true);
    for (const auto& [name, h] : summary.histograms) {
      out << "slack " << name << ":";
      for (const auto& [slack, count] : h) out << " " << slack << "x" << count;
      out << "\n";
    }
  }
  write_report(o, emit_explorer_report(summary));
  if (summary.internal_failure()) return kExitError;
  return summary.findings() ? kExitFindings : kExitOk;
}

int dispatch(const Options& o, std::ostream& out) {
  if (o.command == "explore") return run_explore(o, out);
  const auto doc = parse(load_input(o.input));
  RingSpec spec = doc.ring;
  if (o.rationals) spec.field = FieldSpec::rationals();
  if (o.characteristic) spec.field = FieldSpec::prime(*o.characteristic);
  if (o.order) spec.order = *o.order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex;
  try {
    spec.validate();
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }
  if (spec.field.kind == FieldSpec::Kind::rationals) {
    return run_on(o, doc, make_ring(RationalField(), spec.variables, spec.order), out);
  }
  return run_on(o, doc, make_ring(PrimeField(spec.field.characteristic), spec.variables, spec.order),
                out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Minimal free resolutions, graded Betti numbers and syzygy shift bounds", "syzygy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--char", o.characteristic, "Work over GF(P), overriding the file")
      ->check(CLI::Range(2u, (1u << 31) - 1));
  auto* rationals = app.add_flag("--rationals", o.rationals, "Work over QQ");
  app.get_option("--char")->excludes(rationals);
  app.add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--budget", o.budget, "Reduction step budget")->check(CLI::PositiveNumber);
  app.add_option("--report", o.report_path, "Write the JSON report to PATH");
  app.add_flag("--quiet", o.quiet, "Print nothing on success");

  auto input_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Ideal file, or the document text itself")->required();
    sub->callback([&o, name] { o.command = name; });
    return sub;
  };
  input_command("resolve", "Print ranks and shifts of the minimal resolution");
  input_command("betti", "Print the graded Betti table");
  input_command("check", "Run every check and compare with the expect line");
  auto* witness = input_command("witness", "Construct the degree witness for step N");
  witness->add_option("--step", o.step, "Homological step N >= 2")->required();
  witness->add_option("--column", o.column, "Use basis element T of F_{N-1} (1-based)");

  auto* explore = app.add_subcommand("explore", "Search random ideals for inequality violations");
  explore->callback([&o] { o.command = "explore"; });
  explore->add_option("--class", o.ideal_class, "Ideal class")
      ->check(CLI::IsMember({"generic-monomial", "stable", "squarefree-strongly-stable",
                             "generic-homogeneous"}));
  explore->add_option("--vars", o.search.nvars, "Number of variables");
  explore->add_option("--min-deg", o.search.min_degree, "Smallest generator degree");
  explore->add_option("--max-deg", o.search.max_degree, "Largest generator degree");
  explore->add_option("--min-gens", o.search.min_generators, "Fewest generators drawn");
  explore->add_option("--max-gens", o.search.max_generators, "Most generators drawn");
  explore->add_option("--samples", o.search.samples, "Number of samples");
  explore->add_option("--seed", o.search.seed, "Random seed");
  bool no_witnesses = false;
  explore->add_flag("--no-witnesses", no_witnesses, "Skip witness construction");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  o.search.witnesses = !no_witnesses;

  try {
    return dispatch(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace syzygy
