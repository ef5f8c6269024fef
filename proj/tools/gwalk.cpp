// gwalk: Groebner bases and basis conversion from the command line.
//
//   gwalk gb      --input FILE [--ordering SPEC]
//   gwalk walk    --input FILE [--start SPEC] [--target SPEC] [--algorithm standard|generic] [-v LEVEL]
//   gwalk fan-svg --input FILE --svg-out PATH [--start SPEC] [--target SPEC] [-v LEVEL]
//   gwalk bench   [SYSTEM...] [--input FILE] [--field QQ|Fp|P] [--algorithm A] [--time-limit SEC]
//
// SPEC is a built-in name (lex, degrevlex, elim-sigma, elim-tau), a name from
// the file's "orderings" map, or an ordering spec as JSON.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwalk/gwalk.hpp"

namespace {

using namespace gwalk;

struct Options {
  std::string input;
  std::string ordering = "lex";
  std::string start = "degrevlex";
  std::string target = "lex";
  std::vector<std::string> algorithms;
  int verbosity = 0;
  std::string svg_out;
  bool no_time = false;
  std::vector<std::string> systems;
  std::vector<std::string> fields;
  double time_limit = 120;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_time(const Options& o, double s) {
  if (o.no_time) return;
  std::printf("Time: %.3fs\n", s);
}

template <class F>
void print_basis(const MarkedBasis<F>& g, const TermOrdering& ord, const std::vector<std::string>& vars) {
  std::printf("Gr\xc3\xb6" "bner basis with elements\n");
  std::size_t i = 0;
  for (const auto& e : g.sorted_by(ord)) std::printf("  %zu: %s\n", ++i, format_polynomial(e.poly(), ord).c_str());
  std::printf("with respect to the ordering\n  %s\n", ord.describe(vars).c_str());
}

std::string algorithm(const Options& o) {
  if (o.algorithms.empty()) return "standard";
  if (o.algorithms.size() > 1) throw InvalidInput("walk takes a single --algorithm");
  const auto& a = o.algorithms.front();
  if (a != "standard" && a != "generic") throw InvalidInput("unknown walk algorithm '" + a + "'");
  return a;
}

int run_gb(const Options& o) {
  const IdealFile file = load_ideal(o.input);
  std::visit(
      [&](const auto& id) {
        const TermOrdering ord = make_ordering(ordering_spec_from_text(o.ordering, file.orderings), id.nvars());
        const auto t0 = std::chrono::steady_clock::now();
        const auto g = buchberger(id, ord);
        const double s = seconds_since(t0);
        print_basis(g, ord, id.ring()->vars);
        print_time(o, s);
      },
      file.ideal);
  return 0;
}

int run_walk(const Options& o, bool svg) {
  const IdealFile file = load_ideal(o.input);
  const std::string alg = svg ? "standard" : algorithm(o);
  if (svg && o.svg_out.empty()) throw InvalidInput("fan-svg needs --svg-out");
  std::visit(
      [&](const auto& id) {
        const std::size_t n = id.nvars();
        const TermOrdering start = make_ordering(ordering_spec_from_text(o.start, file.orderings), n);
        const TermOrdering target = make_ordering(ordering_spec_from_text(o.target, file.orderings), n);
        WalkOptions wopt;
        wopt.record_bases = svg;
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = alg == "generic" ? generic_walk(id, start, target, wopt) : standard_walk(id, start, target, wopt);
        const double s = seconds_since(t0);
        if (svg) write_fan_svg(res.trace, res.visited, o.svg_out);
        if (o.verbosity >= 1) std::printf("%s", format_trace(res.trace).c_str());
        if (o.verbosity >= 2) {
          std::printf("Basis sizes:");
          for (auto k : res.trace.basis_sizes) std::printf(" %zu", k);
          std::printf("\n");
        }
        print_basis(res.basis, target, id.ring()->vars);
        if (svg) std::printf("Wrote %s\n", o.svg_out.c_str());
        print_time(o, s);
      },
      file.ideal);
  return 0;
}

FieldChoice parse_field(const std::string& s) {
  if (s == "QQ") return FieldChoice::rationals();
  if (s == "Fp") return FieldChoice::prime();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw InvalidInput("unknown field '" + s + "'");
  }
  (void)PrimeField(p);  // validates
  return FieldChoice::prime(p);
}

int run_bench_cmd(const Options& o) {
  std::vector<std::string> systems = o.systems;
  if (!o.input.empty()) systems.push_back(o.input);
  std::vector<FieldChoice> fields;
  for (const auto& f : o.fields) fields.push_back(parse_field(f));
  if (fields.empty()) fields.push_back(FieldChoice::prime());
  std::vector<BenchAlgorithm> algs;
  for (const auto& a : o.algorithms) algs.push_back(parse_bench_algorithm(a));
  if (algs.empty()) algs = {BenchAlgorithm::Standard, BenchAlgorithm::Generic};
  std::optional<double> limit;
  if (o.time_limit > 0) limit = o.time_limit;
  const auto reports = run_bench(systems, fields, algs, limit);
  std::printf("%s", format_bench_report(reports, !o.no_time).c_str());
  for (const auto& r : reports) {
    if (!r.size_ok()) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and Groebner walks over QQ and prime fields", "gwalk"};
  app.require_subcommand(1);
  Options o;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis by Buchberger's algorithm");
  gb->add_option("--input", o.input, "Ideal file")->required();
  gb->add_option("--ordering", o.ordering, "Term ordering")->capture_default_str();
  gb->add_flag("--no-time", o.no_time, "Omit timing lines");

  auto add_walk_options = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Ideal file")->required();
    sub->add_option("--start", o.start, "Start ordering")->capture_default_str();
    sub->add_option("--target", o.target, "Target ordering")->capture_default_str();
    sub->add_option("-v,--verbose", o.verbosity, "Verbosity level")->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-time", o.no_time, "Omit timing lines");
  };
  auto* walk = app.add_subcommand("walk", "Convert a basis with the Groebner walk");
  add_walk_options(walk);
  walk->add_option("--algorithm", o.algorithms, "standard or generic")->expected(1);

  auto* fan = app.add_subcommand("fan-svg", "Draw the cones visited by a standard walk (two variables)");
  add_walk_options(fan);
  fan->add_option("--svg-out", o.svg_out, "Output SVG path");

  auto* bench = app.add_subcommand("bench", "Run conversions on benchmark systems");
  bench->add_option("systems", o.systems, "cyclicN, katsuraM or ideal file paths");
  bench->add_option("--input", o.input, "Additional ideal file");
  bench->add_option("--field", o.fields, "QQ, Fp or a prime (repeatable)");
  bench->add_option("--algorithm", o.algorithms, "standard, generic or buchberger (repeatable)");
  bench->add_option("--time-limit", o.time_limit, "Seconds per run, 0 for none")->capture_default_str();
  bench->add_flag("--no-time", o.no_time, "Show basis sizes instead of times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gb) return run_gb(o);
    if (*walk) return run_walk(o, false);
    if (*fan) return run_walk(o, true);
    if (*bench) return run_bench_cmd(o);
  } catch (const Error& e) {
    std::fflush(stdout);
    std::fprintf(stderr, "gwalk: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fflush(stdout);
    std::fprintf(stderr, "gwalk: internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
