// Acceptance gate: one PASS/FAIL line per criterion, exit status = number of
// failed criteria. Detail lines start with two spaces.

#include <chrono>
#include <compare>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gwalk/gwalk.hpp"
#include "oracle.hpp"
#include "random_polys.hpp"

using namespace gwalk;

namespace {

// Pinned limits.
constexpr double kExampleSeconds = 1.0;
constexpr double kSystemSeconds = 120.0;
constexpr int kOracleInstancesPerConfig = 60;  // 4 configs: 240 ideals
constexpr int kOrderingComparisons = 1000;
constexpr int kMembershipCases = 100;
constexpr std::uint64_t kSeed = 20250601;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void note(const char* fmt, const std::string& a = "", const std::string& b = "") {
  std::printf("  ");
  std::printf(fmt, a.c_str(), b.c_str());
  std::printf("\n");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Gate {
  int failed = 0;
  void report(int id, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
};

RingPtr<Rationals> qq_xy() { return make_ring<Rationals>({"x", "y"}, Rationals{}); }

Ideal<Rationals> running_ideal() {
  const auto r = qq_xy();
  return Ideal<Rationals>(r, {parse_polynomial("y^4 + x^3 - x^2 + x", r), parse_polynomial("x^4", r)});
}

MarkedBasis<Rationals> running_lex_basis() {
  const auto r = qq_xy();
  return MarkedBasis<Rationals>({MarkedPolynomial<Rationals>(parse_polynomial("x + y^12 - y^8 + y^4", r), Monomial{1, 0}),
                                 MarkedPolynomial<Rationals>(parse_polynomial("y^16", r), Monomial{0, 16})});
}

bool criterion1() {
  const auto t0 = Clock::now();
  const auto res = standard_walk(running_ideal(), TermOrdering::degrevlex(2), TermOrdering::lex(2));
  const double s = since(t0);
  const bool same = res.basis == running_lex_basis();
  note("basis %s, %s s", same ? "matches" : "DIFFERS", num(s));
  return same && s < kExampleSeconds;
}

bool criterion2() {
  const auto t0 = Clock::now();
  const auto res = standard_walk(running_ideal(), TermOrdering::degrevlex(2), TermOrdering::lex(2));
  const double s = since(t0);
  const std::vector<IntVector> expected = {{1, 1}, {4, 3}, {4, 1}, {12, 1}};
  std::string got;
  for (const auto& w : res.trace.crossed) got += format_vector(w) + " ";
  note("trace %s(%s s)", got, num(s));
  return res.trace.crossed == expected && s < kExampleSeconds;
}

bool criterion3() {
  const auto id = running_ideal();
  const auto& r = id.ring();
  const auto lead = leading_ideal(id, TermOrdering::lex(2));
  const bool lex_ok = lead == std::vector<Monomial>{Monomial{1, 0}, Monomial{0, 16}};
  note("leading ideal under lex: %s", lex_ok ? "<x, y^16>" : "WRONG");

  // in_w(I) at w = (4,3), from the degrevlex basis, compared as ideals
  const WeightVector w{4, 3};
  const auto g = buchberger(id, TermOrdering::degrevlex(2));
  const auto in = initial_forms(g, w);
  const auto refine = TermOrdering::weight_refinement(w, TermOrdering::lex(2));
  const auto from_walk = buchberger(Ideal<Rationals>(r, in.polynomials()), refine);
  const auto expected =
      buchberger(Ideal<Rationals>(r, {parse_polynomial("x^3 + y^4", r), parse_polynomial("x^4", r)}), refine);
  std::string forms;
  for (const auto& e : in) forms += format_polynomial(e.poly(), refine) + "; ";
  note("initial forms at (4,3): %s", forms);
  return lex_ok && from_walk == expected;
}

template <class F>
bool table_system(const std::string& name, const Ideal<F>& id, std::size_t want_start, std::size_t want_target) {
  bool ok = true;
  auto t0 = Clock::now();
  const auto start = buchberger(id, TermOrdering::degrevlex(id.nvars()));
  double s = since(t0);
  const bool start_ok = start.size() == want_start && s <= kSystemSeconds;
  std::printf("  %s degrevlex: |G| = %zu (expected %zu), %.3f s\n", name.c_str(), start.size(), want_start, s);
  ok = ok && start_ok;
  for (const char* alg : {"standard", "generic"}) {
    t0 = Clock::now();
    const auto res = std::string(alg) == "standard"
                         ? standard_walk(id, TermOrdering::degrevlex(id.nvars()), TermOrdering::lex(id.nvars()))
                         : generic_walk(id, TermOrdering::degrevlex(id.nvars()), TermOrdering::lex(id.nvars()));
    s = since(t0);
    std::printf("  %s lex via %s walk: |G| = %zu (expected %zu), %.3f s\n", name.c_str(), alg, res.basis.size(),
                want_target, s);
    ok = ok && res.basis.size() == want_target && s <= kSystemSeconds;
  }
  return ok;
}

bool criterion4() {
  const PrimeField fp(kBenchPrime);
  const bool c5 = table_system("cyclic5", gen_cyclic(5, fp), 20, 30);
  const bool k6 = table_system("katsura6", gen_katsura(6, fp), 41, 64);
  return c5 && k6;
}

struct OracleStats {
  int instances = 0;
  int mismatches = 0;
  int sign_discrepancies = 0;
};

template <class F>
void oracle_config(std::mt19937_64& rng, const RingPtr<F>& ring, OracleStats& st,
                   std::vector<std::pair<Ideal<F>, MarkedBasis<F>>>& keep) {
  const std::size_t n = ring->nvars();
  for (int k = 0; k < kOracleInstancesPerConfig; ++k) {
    const auto id = testkit::random_walk_ideal(rng, ring, 3, 3);
    const bool forward = k % 2 == 0;
    const auto start = forward ? TermOrdering::degrevlex(n) : TermOrdering::lex(n);
    const auto target = forward ? TermOrdering::lex(n) : TermOrdering::degrevlex(n);
    const auto direct = buchberger(id, target);
    const auto sw = standard_walk(id, start, target);
    const auto gw = generic_walk(id, start, target);
    ++st.instances;
    if (!(sw.basis == direct) || !(gw.basis == direct)) {
      ++st.mismatches;
      std::printf("  mismatch on instance %d over %zu variables\n", st.instances, n);
    }
    if (auto why = testkit::sign_oracle(sw.trace, gw.trace, start, target)) {
      ++st.sign_discrepancies;
      std::printf("  sign oracle, instance %d: %s\n", st.instances, why->c_str());
    }
    keep.emplace_back(id, direct);
  }
}

template <class F>
int spoly_failures(const MarkedBasis<F>& g, const TermOrdering& ord) {
  int bad = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), g, ord).is_zero()) ++bad;
    }
  }
  return bad;
}

struct OracleRun {
  OracleStats stats;
  std::vector<std::pair<Ideal<Rationals>, MarkedBasis<Rationals>>> qq;
  std::vector<std::pair<Ideal<PrimeField>, MarkedBasis<PrimeField>>> fp;
};

const OracleRun& oracle_run() {
  static const OracleRun run = [] {
    OracleRun r;
    std::mt19937_64 rng(kSeed);
    const PrimeField p(kBenchPrime);
    oracle_config(rng, make_ring<Rationals>({"x", "y"}, Rationals{}), r.stats, r.qq);
    oracle_config(rng, make_ring<Rationals>({"x", "y", "z"}, Rationals{}), r.stats, r.qq);
    oracle_config(rng, make_ring<PrimeField>({"x", "y"}, p), r.stats, r.fp);
    oracle_config(rng, make_ring<PrimeField>({"x", "y", "z"}, p), r.stats, r.fp);
    return r;
  }();
  return run;
}

bool criterion5() {
  const auto t0 = Clock::now();
  const auto& st = oracle_run().stats;
  std::printf("  %d instances (QQ and Fp, 2 and 3 variables), %d mismatches, %.3f s\n", st.instances, st.mismatches,
              since(t0));
  return st.instances >= 200 && st.mismatches == 0;
}

bool ordering_axioms(std::mt19937_64& rng, const TermOrdering& ord, int& checked) {
  const std::size_t n = ord.nvars();
  std::uniform_int_distribution<int> e(0, 6);
  auto mono = [&] {
    IntVector v(n);
    for (auto& x : v) x = Int(e(rng));
    return Monomial(std::move(v));
  };
  const Monomial one{IntVector(n)};
  for (int k = 0; k < kOrderingComparisons; ++k) {
    const Monomial a = mono(), b = mono(), c = mono();
    const auto ab = ord.compare(a, b);
    const auto ba = ord.compare(b, a);
    // totality and antisymmetry
    if ((ab == std::strong_ordering::equal) != (a == b)) return false;
    if (ab != (0 <=> ba)) return false;
    // multiplicativity
    if (ord.compare(a * c, b * c) != ab) return false;
    // transitivity
    const auto bc = ord.compare(b, c);
    if (ab < 0 && bc < 0 && ord.compare(a, c) >= 0) return false;
    // 1 is the minimum
    if (!a.is_one() && ord.compare(one, a) >= 0) return false;
    ++checked;
  }
  return true;
}

bool criterion6() {
  std::mt19937_64 rng(kSeed + 6);
  bool ok = true;

  int comparisons = 0;
  std::vector<TermOrdering> ords = {TermOrdering::lex(3), TermOrdering::degrevlex(3), TermOrdering::lex(5),
                                    TermOrdering::from_matrix(elimination_sigma_matrix()),
                                    TermOrdering::from_matrix(elimination_tau_matrix()),
                                    TermOrdering::weight_refinement(WeightVector{3, 0, 7}, TermOrdering::degrevlex(3))};
  for (const auto& o : ords) ok = ordering_axioms(rng, o, comparisons) && ok;
  std::printf("  ordering axioms: %d comparisons on %zu orderings%s\n", comparisons, ords.size(), ok ? "" : ", VIOLATED");

  const auto& run = oracle_run();
  int spoly = 0;
  int bases = 0;
  auto spolys = [&](const auto& list) {
    for (const auto& [id, g] : list) {
      const std::size_t n = id.nvars();
      spoly += spoly_failures(g, g.consistent_with(TermOrdering::lex(n)) ? TermOrdering::lex(n) : TermOrdering::degrevlex(n));
      ++bases;
    }
  };
  spolys(run.qq);
  spolys(run.fp);
  std::printf("  S-polynomials: %d bases, %d nonzero remainders\n", bases, spoly);
  ok = ok && spoly == 0;

  // f - nf(f) = sum q_i g_i, checked term by term
  int membership_bad = 0;
  for (int k = 0; k < kMembershipCases; ++k) {
    const auto& [id, g] = run.qq[static_cast<std::size_t>(k) % run.qq.size()];
    const std::size_t n = id.nvars();
    const auto ord = g.consistent_with(TermOrdering::lex(n)) ? TermOrdering::lex(n) : TermOrdering::degrevlex(n);
    const auto f = testkit::random_nonzero(rng, id.ring(), 5, 6);
    const auto div = divide(f, g.elements(), ord);
    Polynomial<Rationals> sum = div.remainder;
    for (std::size_t i = 0; i < g.size(); ++i) sum += div.quotients[i] * g[i].poly();
    bool reduced = true;
    for (const auto& t : div.remainder.terms()) {
      for (const auto& e : g) reduced = reduced && !e.mark().divides(t.exp);
    }
    if (!(sum == f) || !(div.remainder == normal_form(f, g, ord)) || !reduced) ++membership_bad;
  }
  std::printf("  membership identity: %d cases, %d failures\n", kMembershipCases, membership_bad);
  ok = ok && membership_bad == 0;

  // interreduce is idempotent, also after adding a redundant ideal member
  int idem_bad = 0;
  for (const auto& [id, g] : run.qq) {
    const std::size_t n = id.nvars();
    const auto ord = g.consistent_with(TermOrdering::lex(n)) ? TermOrdering::lex(n) : TermOrdering::degrevlex(n);
    auto extra = g.elements();
    const auto x0 = Polynomial<Rationals>::variable(id.ring(), 0);
    const auto redundant = x0 * g[0].poly() + (g.size() > 1 ? g[g.size() - 1].poly() : g[0].poly());
    if (!redundant.is_zero()) extra.push_back(MarkedPolynomial<Rationals>::leading(redundant, ord));
    const auto once = interreduce(extra, ord);
    if (!(interreduce(g.elements(), ord) == g) || !(once == g) || !(interreduce(once.elements(), ord) == once)) ++idem_bad;
  }
  std::printf("  interreduce idempotence: %zu bases, %d failures\n", run.qq.size(), idem_bad);
  return ok && idem_bad == 0;
}

bool criterion7() {
  const auto& st = oracle_run().stats;
  std::printf("  %d instances, %d discrepancies\n", st.instances, st.sign_discrepancies);
  return st.instances >= 200 && st.sign_discrepancies == 0;
}

bool criterion8() {
  const auto reports = run_bench({"cyclic5", "katsura6"}, {FieldChoice::prime()},
                                 {BenchAlgorithm::Standard, BenchAlgorithm::Generic}, kSystemSeconds);
  const std::string text = format_bench_report(reports);
  for (std::size_t a = 0, b; a < text.size(); a = b + 1) {
    b = text.find('\n', a);
    if (b == std::string::npos) b = text.size();
    std::printf("  | %s\n", text.substr(a, b - a).c_str());
  }
  bool shape = reports.size() == 4 && text.rfind("Runtime\nSystem", 0) == 0;
  for (const char* col : {"standard/Fp", "generic/Fp"}) shape = shape && text.find(col) != std::string::npos;
  for (const auto& r : reports) shape = shape && !r.timed_out && r.seconds >= 0 && r.basis_size > 0;
  return shape;
}

bool criterion9() {
  // Segment from (1,1,1) to a target weight near 2^40 and 2^70 in three
  // variables: crossing points of the walls are integer combinations of the
  // two endpoints, so their primitive forms inherit the magnitude.
  const auto r = make_ring<Rationals>({"x", "y", "z"}, Rationals{});
  const Ideal<Rationals> id(r, {parse_polynomial("x^3 - y^2*z + 2", r), parse_polynomial("y^3 - x*z^2 + x*y", r),
                                parse_polynomial("z^3 - x^2 + y", r)});
  bool ok = true;
  for (int bits : {40, 70}) {
    const Int big(mpz_class(1) << bits);
    const WeightVector tau(IntVector{big, big - Int(3), Int(1)});
    const auto target = TermOrdering::weight_refinement(tau, TermOrdering::lex(3));
    const auto t0 = Clock::now();
    try {
      const auto sw = standard_walk(id, TermOrdering::degrevlex(3), target);
      const auto gw = generic_walk(id, TermOrdering::degrevlex(3), target);
      const auto direct = buchberger(id, target);
      mpz_class largest = 0;
      for (const auto& w : sw.trace.crossed) {
        for (const auto& x : w) largest = std::max<mpz_class>(largest, abs(x.to_mpz()));
      }
      const mpz_class limit = (mpz_class(1) << 31) - 1;
      std::printf("  target weight 2^%d: %zu crossings, largest entry %zu bits, %.3f s\n", bits, sw.trace.crossed.size(),
                  mpz_sizeinbase(largest.get_mpz_t(), 2), since(t0));
      std::size_t past = 0;
      for (std::size_t k = 1; k + 1 < sw.trace.crossed.size(); ++k) {
        for (const auto& x : sw.trace.crossed[k]) past += abs(x.to_mpz()) > limit ? 1 : 0;
      }
      ok = ok && largest > limit && past > 0 && sw.basis == direct && gw.basis == direct;
    } catch (const Error& e) {
      std::printf("  target weight 2^%d: error %s\n", bits, e.what());
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  Gate gate;
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"running example converts to the lex basis", criterion1},
      {"running example crosses (1,1) (4,3) (4,1) (12,1)", criterion2},
      {"leading ideal and initial forms of the running example", criterion3},
      {"cyclic5 and katsura6 basis sizes over Fp", criterion4},
      {"buchberger = standard walk = generic walk on random ideals", criterion5},
      {"ordering axioms, S-pairs, membership, interreduce", criterion6},
      {"generic facet order follows standard crossing parameters", criterion7},
      {"bench report", criterion8},
      {"intermediate weights beyond 2^31", criterion9},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::printf("  exception: %s\n", e.what());
    }
    gate.report(static_cast<int>(i + 1), ok, criteria[i].first);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - gate.failed, criteria.size());
  return gate.failed;
}
