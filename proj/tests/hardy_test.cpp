#include "rieszkit/hardy.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rieszkit/corpus.hpp"

namespace rieszkit {
namespace {

TrigPoly poly(std::size_t dim, std::vector<std::pair<Frequency, Complex>> terms) {
  TrigPoly f(dim);
  for (const auto& [chi, c] : terms) f.add(chi, c);
  return f;
}

const OrderChain& lex1() {
  static const OrderChain c = lexicographic_order(1);
  return c;
}

const OrderChain& lex2() {
  static const OrderChain c = lexicographic_order(2);
  return c;
}

const OrderChain& tilted2() {
  static const OrderChain c = order_from_functionals(
      2, {LinearFunctional({Rational(1), Rational(1)}), LinearFunctional({Rational(1), Rational(0)})});
  return c;
}

std::vector<TrigPoly> analytic_polys(const OrderChain& chain, std::uint64_t seed, std::size_t n,
                                     std::int64_t degree = 4, std::size_t terms = 6) {
  PolyCorpusOptions o;
  o.degree = degree;
  o.max_terms = terms;
  return poly_corpus(chain, seed, n, o);
}

// Brute-force mean of |g(x)|^p over the midpoint grid of T^d, evaluated term by term.
double brute_power_mean(const TrigPoly& f, double p, std::size_t n) {
  double s = 0.0;
  std::size_t count = 0;
  std::vector<double> x(f.dim());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == f.dim()) {
      s += std::pow(std::abs(oracle::eval(f, x)), p);
      ++count;
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      x[i] = (a + 0.5) / static_cast<double>(n);
      rec(i + 1);
    }
  };
  rec(0);
  return s / static_cast<double>(count);
}

TEST(CondExp, Examples) {
  const TrigPoly f = poly(2, {{{1, 0}, 1.0}, {{0, 3}, {0, 2}}, {{0, 0}, 0.5}});
  EXPECT_EQ(cond_exp(f, Lattice::full(2)), f);
  EXPECT_EQ(cond_exp(f, Lattice::zero(2)), poly(2, {{{0, 0}, 0.5}}));
  EXPECT_EQ(cond_exp(f, lex2().subgroup(2)), poly(2, {{{0, 3}, {0, 2}}, {{0, 0}, 0.5}}));
}

TEST(CondExp, ProjectionAndTower) {
  PolyCorpusOptions any;
  any.analytic = false;
  for (const auto& chain : {lex2(), tilted2(), lexicographic_order(3)}) {
    for (const auto& f : poly_corpus(chain, 3, 20, any)) {
      for (std::size_t i = 1; i <= chain.length() + 1; ++i) {
        const TrigPoly ei = cond_exp(f, chain.subgroup(i));
        EXPECT_EQ(cond_exp(ei, chain.subgroup(i)), ei);
        for (std::size_t j = i; j <= chain.length() + 1; ++j) {
          EXPECT_EQ(cond_exp(ei, chain.subgroup(j)), cond_exp(f, chain.subgroup(j)));
        }
      }
    }
  }
}

TEST(CondExp, ContractiveInL1) {
  QuadratureOptions q;
  for (const auto& f : analytic_polys(tilted2(), 4, 10)) {
    const double nf = abs_integral(TorusSeries::from(f), q).value;
    for (std::size_t j = 1; j <= 3; ++j) {
      const double ne = abs_integral(TorusSeries::from(cond_exp(f, tilted2().subgroup(j))), q).value;
      EXPECT_LE(ne, nf * (1 + 1e-5));
    }
  }
}

TEST(MartingaleBlocks, ReconstructAndMatchMasks) {
  const TrigPoly f = poly(2, {{{1, 0}, 1.0}, {{0, 1}, -2.0}, {{0, 0}, 0.75}, {{2, -3}, {0, 1}}});
  const auto b = martingale_blocks(f, lex2());
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], poly(2, {{{1, 0}, 1.0}, {{2, -3}, {0, 1}}}));
  EXPECT_EQ(b[1], poly(2, {{{0, 1}, -2.0}}));
  for (const auto& x : martingale_blocks(TrigPoly::constant(2, 1.0), lex2())) EXPECT_TRUE(x.empty());

  PolyCorpusOptions any;
  any.analytic = false;
  for (const auto& chain : {lex2(), tilted2(), lexicographic_order(3)}) {
    for (const auto& g : poly_corpus(chain, 9, 30, any)) {
      TrigPoly sum = TrigPoly::constant(g.dim(), g.coeff(Frequency(g.dim(), 0)));
      for (const auto& x : martingale_blocks(g, chain)) sum = sum + x;
      EXPECT_EQ(sum, g);
    }
  }
}

TEST(PowerIntegral, MatchesBruteForce) {
  const TrigPoly f = poly(1, {{{0}, 1.0}, {{1}, 0.5}, {{3}, {0, 0.25}}});
  for (double p : {0.5, 1.0, 2.0}) {
    const auto r = power_integral(TorusSeries::from(f), p, {});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, brute_power_mean(f, p, 20000), 1e-6);
  }
  // Parseval for p = 2.
  EXPECT_NEAR(power_integral(TorusSeries::from(f), 2.0, {}).value, 1 + 0.25 + 0.0625, 1e-12);
}

TEST(GridOrbits, CountsAndConstancy) {
  const std::size_t n = 16;
  EXPECT_EQ(grid_orbits(2, n, annihilator(Lattice::full(2))).representative.size(), n * n);
  EXPECT_EQ(grid_orbits(2, n, annihilator(Lattice::zero(2))).representative.size(), 1u);
  const auto rows = grid_orbits(2, n, annihilator(lex2().subgroup(2)));
  ASSERT_EQ(rows.representative.size(), n);
  // The annihilator of {0} x Z is T x {0}: orbits are the sets of fixed second index.
  for (std::size_t i = 0; i < n * n; ++i) EXPECT_EQ(rows.label[i], rows.label[i % n]);

  // Annihilator of the span of (1,1) is the line through (1,-1); orbits are anti-diagonals.
  const Lattice diag = hnf(2, {from_int64(std::vector<std::int64_t>{1, 1})});
  const auto anti = grid_orbits(2, n, annihilator(diag));
  ASSERT_EQ(anti.representative.size(), n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      EXPECT_EQ(anti.label[a * n + b], anti.label[((a + b) % n) * n]);
    }
  }
}

TEST(Jensen, OuterFunctionFixtures) {
  const auto two = jensen_check(poly(1, {{{0}, 2.0}, {{1}, 1.0}}), lex1());
  EXPECT_NEAR(two.lhs, 2.0, 1e-15);
  EXPECT_NEAR(two.rhs, 2.0, 1e-3);
  EXPECT_EQ(two.outcome, Outcome::kPass);
  // Oracle: mean of log|2 + e^{2 pi i x}| on a fine independent grid.
  EXPECT_NEAR(two.log_integral,
              oracle::midpoint_mean(
                  [](double x) { return std::log(std::abs(2.0 + std::polar(1.0, kTwoPi * x))); },
                  1 << 16),
              1e-6);

  const auto mono = jensen_check(poly(1, {{{1}, 1.0}}), lex1());
  EXPECT_EQ(mono.lhs, 0.0);
  EXPECT_NEAR(mono.rhs, 1.0, 1e-15);
  EXPECT_EQ(mono.outcome, Outcome::kPass);

  const auto edge = jensen_check(poly(1, {{{0}, 1.0}, {{1}, 1.0}}), lex1());
  EXPECT_NEAR(edge.lhs, 1.0, 1e-15);
  EXPECT_NEAR(edge.rhs, 1.0, 1e-3);
  EXPECT_TRUE(edge.converged);
  EXPECT_EQ(edge.outcome, Outcome::kPass);
}

TEST(Jensen, RejectsNonAnalyticAndZero) {
  EXPECT_THROW(jensen_check(poly(1, {{{-1}, 1.0}}), lex1()), InvalidArgument);
  EXPECT_THROW(jensen_check(TrigPoly(1), lex1()), InvalidArgument);
}

TEST(Jensen, HoldsOnRandomAnalyticPolys) {
  std::size_t inconclusive = 0;
  for (const auto& chain : {lex1(), lex2(), tilted2()}) {
    for (const auto& f : analytic_polys(chain, 17, 30, 6, 6)) {
      const auto r = jensen_check(f, chain);
      EXPECT_NE(r.outcome, Outcome::kFail) << r.lhs << " " << r.rhs;
      if (r.outcome == Outcome::kInconclusive) ++inconclusive;
    }
  }
  EXPECT_LE(inconclusive, 2u);
}

TEST(ConditionalPower, Examples) {
  const TrigPoly c = TrigPoly::constant(2, {0.6, 0.8});
  for (double p : {0.5, 1.0, 2.0}) {
    const auto r = conditional_power_check(c, lex2(), 2, p, {32, {}});
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(r.max_excess, 0.0, 1e-12);
  }

  const TrigPoly f = poly(2, {{{0, 0}, 1.0}, {{1, 0}, 0.7}, {{1, 2}, {0, 0.5}}, {{0, 1}, -0.4}});
  for (double p : {0.5, 1.0, 2.0}) {
    const auto r = conditional_power_check(f, lex2(), 3, p, {16, {}});
    EXPECT_TRUE(r.passed());
    // Lambda = {0}: both sides are constants; lhs = |f^(0)|^p and rhs = mean |f|^p.
    EXPECT_NEAR(r.max_excess, std::pow(1.0, p) - brute_power_mean(f, p, 400), 1e-4);
  }

  const TrigPoly g = poly(2, {{{1, 0}, 1.0}, {{1, 2}, 1.0}, {{0, 1}, 1.0}});
  const auto r = conditional_power_check(g, lex2(), 2, 0.5, {64, {}});
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(conditional_power_check(g, lex2(), 2, 3.0, {8, {}}), InvalidArgument);
}

TEST(ConditionalPower, RowAveragesMatchBruteForce) {
  // For lex Z^2 and C_2, the right side at (x, y) is the mean over x' of |f(x', y)|^p.
  const TrigPoly g = poly(2, {{{1, 0}, 1.0}, {{1, 2}, 1.0}, {{0, 1}, 1.0}});
  const std::size_t n = 8;
  const auto avg = subtorus_averages(g, lex2().subgroup(2), 0.5, n, {});
  for (std::size_t b = 0; b < n; ++b) {
    const double y = (b + 0.5) / n;
    const double direct = oracle::midpoint_mean(
        [&](double x) { return std::sqrt(std::abs(oracle::eval(g, {x, y}))); }, 1 << 14);
    EXPECT_NEAR(avg.values[avg.orbits.label[b]], direct, 1e-6);
  }
}

TEST(ConditionalPower, HoldsOnCorpus) {
  for (const auto& chain : {lex2(), tilted2()}) {
    for (const auto& f : analytic_polys(chain, 21, 6)) {
      for (std::size_t j = 1; j <= chain.length() + 1; ++j) {
        for (double p : {0.5, 1.0, 2.0}) {
          EXPECT_TRUE(conditional_power_check(f, chain, j, p, {32, {}}).passed());
        }
      }
    }
  }
}

TEST(Doob, Examples) {
  const auto c = doob_check(TrigPoly::constant(2, {0, 3.0}), lex2(), {16, {}});
  EXPECT_NEAR(c.lhs, 3.0, 1e-12);
  EXPECT_NEAR(c.rhs, 12.0, 1e-12);
  EXPECT_TRUE(c.passed());

  const TrigPoly f = poly(1, {{{0}, 1.0}, {{2}, 0.8}, {{5}, {0, -0.3}}});
  const auto one = doob_check(f, lex1(), {1024, {}});
  EXPECT_TRUE(one.passed());
  // With one stage the maximal function is max(|f|^{1/2}, mean |f|^{1/2}).
  const double mean_root = brute_power_mean(f, 0.5, 1 << 14);
  const double direct = oracle::midpoint_mean(
      [&](double x) {
        const double r = std::max(std::sqrt(std::abs(oracle::eval(f, {x}))), mean_root);
        return r * r;
      },
      1024);
  EXPECT_NEAR(one.lhs, direct, 1e-6);
  EXPECT_NEAR(one.norm, brute_power_mean(f, 1.0, 1 << 14), 1e-6);

  for (const auto& g : analytic_polys(lex2(), 27, 5)) {
    EXPECT_TRUE(doob_check(g, lex2(), {32, {}}).passed());
  }
}

TEST(Burkholder, Examples) {
  const TrigPoly single = poly(2, {{{1, 0}, 1.0}, {{2, 1}, 0.5}});
  const auto s = burkholder_scan(single, lex2(), 1.0, {16, {}});
  ASSERT_EQ(s.ratios.size(), 2u);
  EXPECT_NEAR(s.ratios[0], 1.0, 1e-15);
  EXPECT_NEAR(s.ratios[1], 1.0, 1e-12);
  EXPECT_EQ(s.patterns[1], (std::vector<int>{-1, 0}));

  // Two blocks: X = d_1 f = e^{2 pi i x}, Y = d_2 f = e^{2 pi i y}. Martingale
  // order puts Y first: max(|Y|, |Y + eps X|) = max(1, |1 + eps e^{2 pi i (x - y)}|).
  const TrigPoly two = poly(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
  const auto t = burkholder_scan(two, lex2(), 0.5, {64, {}});
  ASSERT_EQ(t.ratios.size(), 4u);
  EXPECT_NEAR(t.ratios[0], 1.0, 1e-15);
  auto direct = [](double eps) {
    return oracle::midpoint_mean(
        [&](double u) {
          return std::sqrt(std::max(1.0, std::abs(1.0 + eps * std::polar(1.0, kTwoPi * u))));
        },
        64);
  };
  EXPECT_NEAR(t.ratios[1], std::pow(direct(-1) / direct(1), 2.0), 1e-9);
  EXPECT_NEAR(t.ratios[3], 1.0, 1e-9);
  EXPECT_GT(t.max_ratio, 0.0);
  EXPECT_TRUE(std::isfinite(t.max_ratio));
}

TEST(Unconditionality, Examples) {
  const TrigPoly single = poly(2, {{{1, 0}, 1.0}, {{2, 1}, 0.5}});
  const auto s = h1_unconditionality_scan(single, lex2());
  ASSERT_EQ(s.ratios.size(), 3u);
  EXPECT_EQ(s.ratios[0], 0.0);
  EXPECT_NEAR(s.ratios[1], 1.0, 1e-9);
  EXPECT_NEAR(s.ratios[2], 1.0, 1e-9);
  EXPECT_NEAR(s.max_ratio, 1.0, 1e-9);

  for (const auto& f : analytic_polys(lex2(), 33, 5, 8, 10)) {
    const auto r = h1_unconditionality_scan(f, lex2());
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(std::isfinite(r.max_ratio));
    EXPECT_EQ(r.ratios[0], 0.0);
  }
}

}  // namespace
}  // namespace rieszkit
