#include <gtest/gtest.h>

#include <random>

#include "gwalk/groebner.hpp"
#include "gwalk/parse.hpp"
#include "random_polys.hpp"

using namespace gwalk;

namespace {

RingPtr<Rationals> qq_xy() { return make_ring<Rationals>({"x", "y"}, Rationals{}); }

template <class F>
MarkedPolynomial<F> mp(const RingPtr<F>& r, const char* text, Monomial mark) {
  return MarkedPolynomial<F>(parse_polynomial(text, r), std::move(mark));
}

template <class F>
Ideal<F> ideal(const RingPtr<F>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal<F>(r, std::move(ps));
}

MarkedBasis<Rationals> degrevlex_running_basis(const RingPtr<Rationals>& r) {
  return MarkedBasis<Rationals>({mp(r, "y^4 + x^3 - x^2 + x", Monomial{0, 4}), mp(r, "x^4", Monomial{4, 0})});
}

template <class F>
void expect_s_polys_reduce(const MarkedBasis<F>& g, const TermOrdering& ord) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      ASSERT_TRUE(normal_form(s_polynomial(g[i], g[j]), g, ord).is_zero());
    }
  }
}

template <class F>
void property_run(const RingPtr<F>& ring, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<TermOrdering> ords = {TermOrdering::lex(ring->nvars()), TermOrdering::degrevlex(ring->nvars())};
  for (int round = 0; round < 50; ++round) {
    const auto id = testkit::random_ideal(rng, ring, 3, 3, 3);
    const auto& ord = ords[static_cast<std::size_t>(round) % ords.size()];
    const auto g = buchberger(id, ord);
    ASSERT_TRUE(g.consistent_with(ord));
    expect_s_polys_reduce(g, ord);
    EXPECT_EQ(interreduce(g.elements(), ord), g);
    EXPECT_EQ(interreduce(g.elements()), g);
    for (const auto& gen : id.generators()) ASSERT_TRUE(normal_form(gen, g, ord).is_zero());

    // Random combination of the generators lies in the ideal.
    auto comb = Polynomial<F>(ring, {});
    for (const auto& gen : id.generators()) comb += testkit::random_polynomial(rng, ring, 2, 3) * gen;
    ASSERT_TRUE(normal_form(comb, g, ord).is_zero());

    // Cofactor identity f = sum q_i g_i + r with exact arithmetic.
    const auto f = testkit::random_nonzero(rng, ring, 5, 5);
    const auto div = divide(f, g.elements(), ord);
    auto rebuilt = div.remainder;
    for (std::size_t i = 0; i < g.size(); ++i) rebuilt += div.quotients[i] * g[i].poly();
    ASSERT_EQ(rebuilt, f);
    ASSERT_EQ(div.remainder, normal_form(f, g, ord));
    for (const auto& t : div.remainder.terms()) {
      for (const auto& e : g) ASSERT_FALSE(e.mark().divides(t.exp));
    }
    // Marked division agrees with ordered division.
    ASSERT_EQ(marked_division(f, g.elements()), div.remainder);
  }
}

}  // namespace

TEST(NormalForm, Examples) {
  const auto r = qq_xy();
  const auto lex = TermOrdering::lex(2);
  EXPECT_TRUE(normal_form(parse_polynomial("x^2", r), {mp(r, "x", Monomial{1, 0})}, lex).is_zero());
  EXPECT_EQ(normal_form(parse_polynomial("x^2 + y", r), {mp(r, "x - y^2", Monomial{1, 0})}, lex),
            parse_polynomial("y^4 + y", r));
  EXPECT_EQ(normal_form(parse_polynomial("x*y^4", r), degrevlex_running_basis(r), TermOrdering::degrevlex(2)),
            parse_polynomial("x^3 - x^2", r));
}

TEST(NormalForm, RejectsInconsistentMarkings) {
  const auto r = qq_xy();
  EXPECT_THROW((void)normal_form(parse_polynomial("x", r), {mp(r, "x - y^2", Monomial{0, 2})}, TermOrdering::lex(2)),
               MarkingError);
}

TEST(SPolynomial, Examples) {
  const auto r = qq_xy();
  const auto f = mp(r, "x^2 - y", Monomial{2, 0});
  EXPECT_EQ(s_polynomial(f, mp(r, "y^2 - x", Monomial{0, 2})), parse_polynomial("x^3 - y^3", r));
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  EXPECT_EQ(s_polynomial(mp(r, "x^3 + y^4", Monomial{3, 0}), mp(r, "y^8", Monomial{0, 8})), parse_polynomial("y^12", r));
}

TEST(Buchberger, Examples) {
  const auto r = qq_xy();
  const auto g = buchberger(ideal(r, {"x^2 - y", "y^2 - x"}), TermOrdering::lex(2));
  EXPECT_EQ(g, MarkedBasis<Rationals>({mp(r, "x - y^2", Monomial{1, 0}), mp(r, "y^4 - y", Monomial{0, 4})}));
  EXPECT_EQ(buchberger(ideal(r, {"y^4 + x^3 - x^2 + x", "x^4"}), TermOrdering::degrevlex(2)), degrevlex_running_basis(r));
  const auto lexg = buchberger(ideal(r, {"y^4 + x^3 - x^2 + x", "x^4"}), TermOrdering::lex(2));
  EXPECT_EQ(lexg, MarkedBasis<Rationals>({mp(r, "x + y^12 - y^8 + y^4", Monomial{1, 0}), mp(r, "y^16", Monomial{0, 16})}));
}

TEST(Buchberger, UnitIdealAndMonic) {
  const auto r = qq_xy();
  const auto g = buchberger(ideal(r, {"2*x + 1", "3*y", "x*y - 1"}), TermOrdering::degrevlex(2));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].poly(), parse_polynomial("1", r));
  const auto h = buchberger(ideal(r, {"4*x^2 + 2*y"}), TermOrdering::lex(2));
  EXPECT_EQ(h[0].poly(), parse_polynomial("x^2 + 1/2*y", r));
}

TEST(Buchberger, UniquenessUnderRepresentingWeights) {
  const auto r = qq_xy();
  std::mt19937_64 rng(21);
  for (int round = 0; round < 30; ++round) {
    const auto id = testkit::random_ideal(rng, r, 3, 3, 3);
    const auto ord = round % 2 == 0 ? TermOrdering::degrevlex(2) : TermOrdering::lex(2);
    const auto g = buchberger(id, ord);
    // Search a few small weights that represent the basis.
    for (long a = 1; a <= 6; ++a) {
      for (long b = 1; b <= 6; ++b) {
        const WeightVector w({Int(a), Int(b)});
        if (!represents(w, g)) continue;
        ASSERT_EQ(buchberger(id, TermOrdering::weight_refinement(w, ord)), g);
      }
    }
  }
}

TEST(Interreduce, Examples) {
  const auto r = qq_xy();
  const std::vector<MarkedPolynomial<Rationals>> redundant = {
      mp(r, "x^3 + y^4", Monomial{3, 0}), mp(r, "x^4", Monomial{4, 0}), mp(r, "x*y^4", Monomial{1, 4}),
      mp(r, "y^8", Monomial{0, 8})};
  const auto w = TermOrdering::weight_refinement(WeightVector({Int(4), Int(3)}), TermOrdering::lex(2));
  const auto out = interreduce(redundant, w);
  EXPECT_EQ(out.size(), 3u);
  for (const auto& e : out) EXPECT_NE(e.mark(), (Monomial{4, 0}));
  EXPECT_EQ(interreduce(redundant), out);
  const auto g = degrevlex_running_basis(r);
  EXPECT_EQ(interreduce(g.elements(), TermOrdering::degrevlex(2)), g);
  const auto monic = interreduce(std::vector{MarkedPolynomial<Rationals>(parse_polynomial("2*x", r), Monomial{1, 0})});
  EXPECT_EQ(monic[0].poly(), parse_polynomial("x", r));
}

TEST(LeadingIdeal, Examples) {
  const auto r = qq_xy();
  const auto id = ideal(r, {"y^4 + x^3 - x^2 + x", "x^4"});
  EXPECT_EQ(leading_ideal(id, TermOrdering::lex(2)), (std::vector<Monomial>{Monomial{1, 0}, Monomial{0, 16}}));
  EXPECT_EQ(leading_ideal(id, TermOrdering::degrevlex(2)), (std::vector<Monomial>{Monomial{4, 0}, Monomial{0, 4}}));
  EXPECT_EQ(leading_ideal(ideal(r, {"x*y + y^3"}), TermOrdering::lex(2)), (std::vector<Monomial>{Monomial{1, 1}}));
}

TEST(MarkedDivision, Examples) {
  const auto r = qq_xy();
  EXPECT_EQ(marked_division(parse_polynomial("x^2*y", r), {mp(r, "x - y", Monomial{1, 0})}), parse_polynomial("y^3", r));
  EXPECT_EQ(marked_division(parse_polynomial("y + 1", r), {mp(r, "x - y", Monomial{1, 0})}), parse_polynomial("y + 1", r));
  EXPECT_TRUE(marked_division(parse_polynomial("x^4", r), degrevlex_running_basis(r).elements()).is_zero());
}

TEST(MarkedDivision, CycleGuard) {
  const auto r = qq_xy();
  // Markings x (from x - y) and y (from y - x) cannot come from one ordering.
  EXPECT_THROW((void)marked_division(parse_polynomial("x", r), {mp(r, "x - y", Monomial{1, 0}), mp(r, "y - x", Monomial{0, 1})}),
               MarkingError);
}

TEST(MarkedBasis, InvariantChecks) {
  const auto r = qq_xy();
  EXPECT_THROW(MarkedBasis<Rationals>({mp(r, "x", Monomial{1, 0}), mp(r, "x^2 + y", Monomial{2, 0})}), MarkingError);
  EXPECT_THROW(MarkedBasis<Rationals>({mp(r, "x + y", Monomial{1, 0}), mp(r, "y^2", Monomial{0, 2}), mp(r, "y", Monomial{0, 1})}),
               MarkingError);
  EXPECT_THROW(MarkedPolynomial<Rationals>(parse_polynomial("x + y", r), Monomial{2, 0}), MarkingError);
}

TEST(Ideal, Errors) {
  const auto r = qq_xy();
  EXPECT_THROW(Ideal<Rationals>(r, {}), InvalidInput);
  EXPECT_THROW(Ideal<Rationals>(r, {parse_polynomial("x - x", r)}), InvalidInput);
  const auto other = make_ring<Rationals>({"a", "b"}, Rationals{});
  EXPECT_THROW(Ideal<Rationals>(r, {parse_polynomial("a", other)}), RingMismatch);
}

TEST(Properties, RationalsTwoVars) { property_run(qq_xy(), 31); }
TEST(Properties, RationalsThreeVars) { property_run(make_ring<Rationals>({"x", "y", "z"}, Rationals{}), 32); }
TEST(Properties, PrimeFieldThreeVars) { property_run(make_ring<PrimeField>({"x", "y", "z"}, PrimeField(kBenchPrime)), 33); }
TEST(Properties, SmallPrimeTwoVars) { property_run(make_ring<PrimeField>({"x", "y"}, PrimeField(7)), 34); }
