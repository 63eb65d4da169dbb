// Command-line front end: check / certify / search / conjecture workflows over
// graph6 input, plus brute-force reference implementations under `oracle` so
// reported values can be re-derived independently.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "extendlab/certificate.hpp"
#include "extendlab/extendability.hpp"
#include "extendlab/graph.hpp"
#include "extendlab/graph6.hpp"
#include "extendlab/matching.hpp"
#include "extendlab/oracle.hpp"
#include "extendlab/parallel.hpp"
#include "extendlab/search.hpp"
#include "extendlab/serialize.hpp"

namespace {

using namespace extendlab;

constexpr int kExitAllHeld = 0;
constexpr int kExitPredicateFailed = 1;
constexpr int kExitInputError = 2;

struct InputLine {
  std::size_t number = 0;
  std::string text;
};

std::vector<InputLine> read_lines(const std::string& path) {
  std::vector<InputLine> lines;
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    in = &file;
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(*in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back({number, line});
  }
  return lines;
}

struct LineResult {
  std::string output;  // JSON line for stdout; empty when errored
  std::string error;   // diagnostic; empty when fine
  bool predicate_held = true;
};

// Parses and evaluates lines in parallel, then emits results in input order.
// Returns the process exit code.
template <class Evaluate>
int run_line_mode(const std::vector<InputLine>& lines, int jobs, ErrorPolicy policy,
                  Evaluate&& evaluate) {
  std::vector<LineResult> results(lines.size());
  parallel_for(lines.size(), jobs, [&](std::size_t i) {
    LineResult& r = results[i];
    try {
      const Graph g = parse_graph6(lines[i].text);
      r = evaluate(lines[i].text, g);
    } catch (const std::invalid_argument& e) {
      r.error = e.what();
    }
  });
  bool all_held = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const LineResult& r = results[i];
    if (!r.error.empty()) {
      std::cerr << "line " << lines[i].number << ": " << r.error << "\n";
      if (policy == ErrorPolicy::abort) return kExitInputError;
      continue;
    }
    std::cout << r.output << "\n";
    all_held = all_held && r.predicate_held;
  }
  return all_held ? kExitAllHeld : kExitPredicateFailed;
}

ErrorPolicy parse_policy(const std::string& name) {
  return name == "abort" ? ErrorPolicy::abort : ErrorPolicy::skip;
}

int run_check(const std::string& input, int k, bool minimal, int jobs,
              const std::string& on_error) {
  const auto lines = read_lines(input);
  return run_line_mode(lines, jobs, parse_policy(on_error),
                       [&](const std::string& g6, const Graph& g) {
                         LineResult r;
                         const ExtendabilityVerdict verdict = is_k_extendable(g, k);
                         std::optional<MinimalityVerdict> min_verdict;
                         if (minimal) {
                           if (verdict.result)
                             min_verdict = detail::minimality_given_extendable(g, k);
                           else
                             min_verdict = MinimalityVerdict{k, false, std::nullopt};
                         }
                         r.output = verdict_json(g6, g, verdict, min_verdict).dump();
                         r.predicate_held =
                             verdict.result && (!minimal || min_verdict->result);
                         return r;
                       });
}

int run_certify(const std::string& input, int k, int jobs, const std::string& on_error) {
  const auto lines = read_lines(input);
  return run_line_mode(lines, jobs, parse_policy(on_error),
                       [&](const std::string& g6, const Graph& g) {
                         LineResult r;
                         if (!is_k_extendable(g, k).result) {
                           ojson out;
                           out["graph6"] = g6;
                           out["n"] = g.order();
                           out["k"] = k;
                           out["extendable"] = false;
                           r.output = out.dump();
                           r.predicate_held = false;
                           return r;
                         }
                         const CertificationResult certs = certify_all_edges(g, k);
                         r.output = certification_json(g6, g, certs).dump();
                         r.predicate_held = certs.all_certified();
                         return r;
                       });
}

int run_oracle_lines(const std::string& input, std::optional<int> k, int jobs,
                     const std::string& on_error) {
  const auto lines = read_lines(input);
  return run_line_mode(lines, jobs, parse_policy(on_error),
                       [&](const std::string& g6, const Graph& g) {
                         LineResult r;
                         ojson out;
                         out["graph6"] = g6;
                         out["n"] = g.order();
                         out["min_degree"] = min_degree(g);
                         out["connected"] = oracle::is_connected(g);
                         out["bipartite"] = is_bipartite(g);
                         out["claw_free"] = is_claw_free(g);
                         out["max_matching"] = oracle::max_matching_size(g);
                         out["has_perfect_matching"] = oracle::has_perfect_matching(g);
                         if (k) {
                           const bool extendable = oracle::k_extendable(g, *k);
                           out["k"] = *k;
                           out["extendable"] = extendable;
                           r.predicate_held = extendable;
                         }
                         r.output = out.dump();
                         return r;
                       });
}

int run_oracle_counts(int n) {
  ojson out;
  out["n"] = n;
  out["labeled_graphs"] = oracle::labeled_count(n);
  out["labeled_connected"] = oracle::labeled_connected_count(n);
  if (n <= 7) {
    const oracle::ClassCounts counts = oracle::count_classes_by_orbit(n);
    out["isomorphism_classes"] = counts.all;
    out["connected_classes"] = counts.connected;
  }
  out["class_count_cycle_index"] = oracle::class_count_cycle_index(n);
  std::cout << out.dump(2) << "\n";
  return kExitAllHeld;
}

struct SearchOptions {
  int n = 0;  // 0 means: ingest a stream instead
  std::string input;
  int k = 0;
  bool claw_free = false;
  bool minimal = false;
  int degree_lo = -1;
  int degree_hi = -1;
  std::string format = "json";
  int jobs = 1;
  std::string on_error = "skip";
  std::string survivors_path;
};

std::vector<Graph> load_search_graphs(const SearchOptions& opt) {
  if (opt.n > 0) return enumerate_graphs(opt.n);
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!opt.input.empty()) {
    file.open(opt.input);
    if (!file) throw std::runtime_error("cannot open input file: " + opt.input);
    in = &file;
  }
  IngestResult ingested = ingest_graph6(*in, parse_policy(opt.on_error));
  for (const IngestDiagnostic& d : ingested.diagnostics)
    std::cerr << "line " << d.line << ": " << d.message << "\n";
  return std::move(ingested.graphs);
}

int emit_report(const SearchReport& report, const std::string& format,
                const std::string& survivors_path) {
  if (!survivors_path.empty()) {
    std::ofstream out(survivors_path);
    if (!out) throw std::runtime_error("cannot open survivors file: " + survivors_path);
    for (const std::string& g6 : report.survivors) out << g6 << "\n";
  }
  if (format == "tsv")
    std::cout << report_tsv(report);
  else
    std::cout << report_json(report).dump(2) << "\n";
  return report.violations.empty() ? kExitAllHeld : kExitPredicateFailed;
}

int run_search(const SearchOptions& opt) {
  const std::vector<Graph> graphs = load_search_graphs(opt);
  FilterSpec spec;
  spec.require(FilterSpec::Predicate::connected);
  if (opt.claw_free) spec.require(FilterSpec::Predicate::claw_free);
  spec.require(FilterSpec::Predicate::k_extendable);
  if (opt.minimal) spec.require(FilterSpec::Predicate::minimal);
  if (opt.degree_lo >= 0 || opt.degree_hi >= 0)
    spec.require_degree_range(opt.degree_lo >= 0 ? opt.degree_lo : 0,
                              opt.degree_hi >= 0 ? opt.degree_hi : kMaxOrder);
  const SearchReport report = run_pipeline(graphs, spec, opt.k, opt.jobs);
  return emit_report(report, opt.format, opt.survivors_path);
}

int run_conjecture(const SearchOptions& opt) {
  const SearchReport report = conjecture_scan(opt.n, opt.k, opt.jobs);
  const int code = emit_report(report, opt.format, opt.survivors_path);
  if (code != kExitAllHeld) return code;
  return report.degrees_within_expected.value_or(false) ? kExitAllHeld
                                                        : kExitPredicateFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extendlab: matching extendability toolkit for small graphs"};
  app.require_subcommand(1);

  std::string input, on_error = "skip", format = "json", survivors;
  int k = 0, n = 0, jobs = 1, degree_lo = -1, degree_hi = -1;
  bool minimal = false, claw_free = false;

  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker thread count")
        ->envname("EXTENDLAB_JOBS")
        ->check(CLI::PositiveNumber);
  };
  auto add_on_error = [&](CLI::App* cmd) {
    cmd->add_option("--on-error", on_error, "per-line error policy")
        ->check(CLI::IsMember({"skip", "abort"}));
  };

  CLI::App* check = app.add_subcommand("check", "decide k-extendability per input line");
  check->add_option("--k", k, "extendability parameter")->required()->check(CLI::PositiveNumber);
  check->add_flag("--minimal", minimal, "also decide minimality");
  check->add_option("--input", input, "graph6 file (default: stdin)");
  add_jobs(check);
  add_on_error(check);

  CLI::App* certify = app.add_subcommand("certify", "per-edge criticality certificates");
  certify->add_option("--k", k, "extendability parameter")->required()->check(CLI::PositiveNumber);
  certify->add_option("--input", input, "graph6 file (default: stdin)");
  add_jobs(certify);
  add_on_error(certify);

  CLI::App* search = app.add_subcommand("search", "filter a graph stream and report degrees");
  search->add_option("--n", n, "enumerate all graphs on n vertices")->check(CLI::Range(1, 10));
  search->add_option("--k", k, "extendability parameter")->required()->check(CLI::PositiveNumber);
  search->add_flag("--claw-free", claw_free, "keep claw-free graphs only");
  search->add_flag("--minimal", minimal, "keep minimal k-extendable graphs only");
  search->add_option("--min-degree", degree_lo, "minimum allowed min degree");
  search->add_option("--max-degree", degree_hi, "maximum allowed min degree");
  search->add_option("--input", input, "graph6 file (default: stdin)")->excludes("--n");
  search->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  search->add_option("--survivors", survivors, "write surviving graph6 lines here");
  add_jobs(search);
  add_on_error(search);

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "degree survey of minimal k-extendable claw-free graphs");
  conjecture->add_option("--n", n, "order to enumerate")->required()->check(CLI::Range(1, 10));
  conjecture->add_option("--k", k, "extendability parameter")->required()->check(CLI::PositiveNumber);
  conjecture->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  conjecture->add_option("--survivors", survivors, "write surviving graph6 lines here");
  add_jobs(conjecture);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force reference values for differential testing");
  oracle_cmd->add_option("--n", n, "count isomorphism classes on n vertices instead")
      ->check(CLI::Range(1, 10));
  CLI::Option* oracle_k = oracle_cmd->add_option("--k", k, "also decide k-extendability")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--input", input, "graph6 file (default: stdin)");
  add_jobs(oracle_cmd);
  add_on_error(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (app.got_subcommand(check)) return run_check(input, k, minimal, jobs, on_error);
    if (app.got_subcommand(certify)) return run_certify(input, k, jobs, on_error);
    if (app.got_subcommand(search)) {
      SearchOptions opt{n,         input,  k,    claw_free, minimal, degree_lo,
                        degree_hi, format, jobs, on_error,  survivors};
      return run_search(opt);
    }
    if (app.got_subcommand(conjecture)) {
      SearchOptions opt;
      opt.n = n;
      opt.k = k;
      opt.format = format;
      opt.jobs = jobs;
      opt.survivors_path = survivors;
      return run_conjecture(opt);
    }
    if (app.got_subcommand(oracle_cmd)) {
      if (n > 0) return run_oracle_counts(n);
      std::optional<int> oracle_param;
      if (oracle_k->count() > 0) oracle_param = k;
      return run_oracle_lines(input, oracle_param, jobs, on_error);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
