#pragma once

// Benchmark harness: runs basis conversions on generated or file systems and
// reports sizes and wall times.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwalk/generic_walk.hpp"
#include "gwalk/io.hpp"
#include "gwalk/systems.hpp"
#include "gwalk/walk.hpp"

namespace gwalk {

inline constexpr std::uint64_t kBenchModulus = kBenchPrime;

struct FieldChoice {
  bool rational = false;
  std::uint64_t modulus = kBenchModulus;

  static FieldChoice rationals() { return {true, 0}; }
  static FieldChoice prime(std::uint64_t p = kBenchModulus) { return {false, p}; }
  [[nodiscard]] std::string name() const { return rational ? "QQ" : "Fp(" + std::to_string(modulus) + ")"; }
};

enum class BenchAlgorithm { Standard, Generic, Buchberger };

inline std::string algorithm_name(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::Standard:
      return "standard";
    case BenchAlgorithm::Generic:
      return "generic";
    case BenchAlgorithm::Buchberger:
      return "buchberger";
  }
  return "";
}

inline BenchAlgorithm parse_bench_algorithm(const std::string& s) {
  if (s == "standard") return BenchAlgorithm::Standard;
  if (s == "generic") return BenchAlgorithm::Generic;
  if (s == "buchberger" || s == "gb") return BenchAlgorithm::Buchberger;
  throw InvalidInput("unknown algorithm '" + s + "'");
}

struct BenchReport {
  std::string system;
  std::string field;
  std::string algorithm;
  std::size_t start_size = 0;  // basis size under the start ordering (0 for buchberger)
  std::size_t basis_size = 0;
  std::size_t steps = 0;       // cones visited or facets flipped
  double seconds = 0;
  bool timed_out = false;
  std::optional<std::size_t> expected_start;
  std::optional<std::size_t> expected;

  [[nodiscard]] bool size_ok() const {
    if (timed_out) return true;
    if (basis_size == 0 || (expected && *expected != basis_size)) return false;
    return start_size == 0 || !expected_start || *expected_start == start_size;
  }
};

/// Known reduced basis sizes, (start, target) = (degrevlex, lex) in the
/// generated variable order.
struct ExpectedSizes {
  std::optional<std::size_t> start;
  std::optional<std::size_t> target;
};

inline const std::map<std::string, ExpectedSizes>& expected_sizes() {
  static const std::map<std::string, ExpectedSizes> table = {
      {"cyclic5", {20, 11}},
      {"cyclic6", {45, 17}},
      {"katsura6", {41, 7}},
      {"katsura7", {74, 8}},
      {"katsura8", {143, std::nullopt}},
  };
  return table;
}

struct BenchSystem {
  std::string name;
  IdealFile file;
  OrderingSpec start = OrderingSpec::named("degrevlex");
  OrderingSpec target = OrderingSpec::named("lex");
};

namespace detail {

inline std::optional<std::size_t> numbered(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || v > 1000) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return v;
}

/// The same generators over another field, re-read from their text form.
inline AnyIdeal over_field(const AnyIdeal& src, const FieldChoice& field) {
  return std::visit(
      [&](const auto& id) -> AnyIdeal {
        const auto lex = TermOrdering::lex(id.nvars());
        std::vector<std::string> text;
        for (const auto& g : id.generators()) text.push_back(format_polynomial(g, lex));
        auto rebuild = [&](auto fld) {
          using G = decltype(fld);
          const auto ring = make_ring(id.ring()->vars, std::move(fld));
          std::vector<Polynomial<G>> gens;
          for (const auto& t : text) {
            auto p = parse_polynomial(t, ring);
            if (!p.is_zero()) gens.push_back(std::move(p));
          }
          if (gens.empty()) throw InvalidInput("every generator vanishes over " + field.name());
          return Ideal<G>(ring, std::move(gens));
        };
        if (field.rational) return rebuild(Rationals{});
        return rebuild(PrimeField(field.modulus));
      },
      src);
}

}  // namespace detail

/// cyclic<n>, katsura<m>, or a path to an ideal file. A file may name its
/// conversion with orderings "start" and "target".
inline BenchSystem resolve_system(const std::string& name) {
  if (auto n = detail::numbered(name, "cyclic")) return BenchSystem{name, IdealFile{gen_cyclic(*n, Rationals{}), {}}};
  if (auto m = detail::numbered(name, "katsura")) return BenchSystem{name, IdealFile{gen_katsura(*m, Rationals{}), {}}};
  if (name.find('/') == std::string::npos && name.find(".json") == std::string::npos) {
    throw InvalidInput("unknown system '" + name + "'");
  }
  BenchSystem s{name, load_ideal(name)};
  if (auto it = s.file.orderings.find("start"); it != s.file.orderings.end()) s.start = it->second;
  if (auto it = s.file.orderings.find("target"); it != s.file.orderings.end()) s.target = it->second;
  return s;
}

template <class F>
BenchReport run_one(const std::string& name, const Ideal<F>& id, const TermOrdering& start, const TermOrdering& target,
                    BenchAlgorithm alg, std::optional<double> time_limit = std::nullopt) {
  BenchReport r;
  r.system = name;
  r.algorithm = algorithm_name(alg);
  const auto t0 = std::chrono::steady_clock::now();
  Deadline deadline;
  if (time_limit) {
    deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*time_limit));
  }
  WalkOptions wopt;
  wopt.deadline = deadline;
  try {
    switch (alg) {
      case BenchAlgorithm::Standard: {
        auto res = standard_walk(id, start, target, wopt);
        r.start_size = res.trace.basis_sizes.front();
        r.basis_size = res.basis.size();
        r.steps = res.trace.crossed.size();
        break;
      }
      case BenchAlgorithm::Generic: {
        auto res = generic_walk(id, start, target, wopt);
        r.start_size = res.trace.basis_sizes.front();
        r.basis_size = res.basis.size();
        r.steps = res.trace.steps;
        break;
      }
      case BenchAlgorithm::Buchberger:
        r.basis_size = buchberger(id, target, BuchbergerOptions{Selection::Auto, deadline}).size();
        break;
    }
  } catch (const Timeout&) {
    r.timed_out = true;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// One report per system x field x algorithm, in that nesting order. Runs
/// longer than `time_limit` seconds are abandoned and marked timed out.
inline std::vector<BenchReport> run_bench(const std::vector<std::string>& systems, const std::vector<FieldChoice>& fields,
                                          const std::vector<BenchAlgorithm>& algorithms,
                                          std::optional<double> time_limit = std::nullopt) {
  std::vector<BenchReport> out;
  for (const auto& name : systems) {
    const BenchSystem sys = resolve_system(name);
    const auto known = expected_sizes().find(name);
    const bool default_orders = sys.start == OrderingSpec::named("degrevlex") && sys.target == OrderingSpec::named("lex");
    for (const auto& field : fields) {
      const AnyIdeal id = detail::over_field(sys.file.ideal, field);
      const std::size_t n = nvars(id);
      const TermOrdering start = make_ordering(sys.start, n);
      const TermOrdering target = make_ordering(sys.target, n);
      for (const auto alg : algorithms) {
        BenchReport r = std::visit([&](const auto& i) { return run_one(name, i, start, target, alg, time_limit); }, id);
        r.field = field.rational ? "QQ" : "Fp";
        if (known != expected_sizes().end() && default_orders) {
          r.expected_start = known->second.start;
          r.expected = known->second.target;
        }
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

/// Runtime grid with a column per algorithm and field, plus a detail line per
/// run. Without times the grid shows basis sizes, so the text is reproducible.
inline std::string format_bench_report(const std::vector<BenchReport>& reports, bool with_time = true) {
  std::vector<std::string> systems;
  std::vector<std::string> algorithms;
  std::vector<std::string> fields;
  auto add_unique = [](std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  };
  for (const auto& r : reports) {
    add_unique(systems, r.system);
    add_unique(algorithms, r.algorithm);
    add_unique(fields, r.field);
  }
  auto cell = [&](const std::string& sys, const std::string& alg, const std::string& fld) -> std::string {
    for (const auto& r : reports) {
      if (r.system != sys || r.algorithm != alg || r.field != fld) continue;
      if (r.timed_out) return "-";
      if (!with_time) return "|G|=" + std::to_string(r.basis_size);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
      return buf;
    }
    return "-";
  };
  std::string out = with_time ? "Runtime\n" : "Basis size\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-12s", "System");
  out += line;
  for (const auto& a : algorithms) {
    for (const auto& f : fields) {
      std::snprintf(line, sizeof line, " %14s", (a + "/" + f).c_str());
      out += line;
    }
  }
  out += "\n";
  for (const auto& s : systems) {
    std::snprintf(line, sizeof line, "%-12s", s.c_str());
    out += line;
    for (const auto& a : algorithms) {
      for (const auto& f : fields) {
        std::snprintf(line, sizeof line, " %14s", cell(s, a, f).c_str());
        out += line;
      }
    }
    out += "\n";
  }
  out += "\n";
  for (const auto& r : reports) {
    if (r.timed_out) {
      std::snprintf(line, sizeof line, "%s %s %s: timed out\n", r.system.c_str(), r.field.c_str(), r.algorithm.c_str());
      out += line;
      continue;
    }
    std::snprintf(line, sizeof line, "%s %s %s: start %zu, target %zu, steps %zu, expected %s, %s\n", r.system.c_str(),
                  r.field.c_str(), r.algorithm.c_str(), r.start_size, r.basis_size, r.steps,
                  r.expected ? std::to_string(*r.expected).c_str() : "?", r.size_ok() ? "ok" : "MISMATCH");
    out += line;
  }
  return out;
}

}  // namespace gwalk
