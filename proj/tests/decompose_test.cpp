#include "rieszkit/decompose.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rieszkit/corpus.hpp"

namespace rieszkit {
namespace {

IntVec V(std::vector<std::int64_t> v) { return from_int64(v); }

const OrderChain& lex2() {
  static const OrderChain c = lexicographic_order(2);
  return c;
}

const OrderChain& positive_line() {
  static const OrderChain c = lexicographic_order(1);
  return c;
}

TrigPoly poly(std::size_t dim, std::vector<std::pair<Frequency, Complex>> terms) {
  TrigPoly f(dim);
  for (const auto& [chi, c] : terms) f.add(chi, c);
  return f;
}

Measure four_frequency() {
  return density(poly(2, {{{1, 0}, {1.0, 0.5}}, {{0, 1}, -2.0}, {{0, 0}, 0.75}, {{2, -3}, {0, 1}}}));
}

Measure line_character() {
  return atom_measure(hnf(2, {V({0, 1})}), V({1, 0}), rational_zeros(2), 1.0);
}

// Which stage owns chi under lex Z^2, computed from coordinates: 1 if x != 0,
// 2 if x == 0 and y != 0, 0 for the origin.
int lex_stage(const oracle::Point& p) {
  if (p[0] != 0) return 1;
  if (p[1] != 0) return 2;
  return 0;
}

std::vector<OrderChain> small_chains() {
  std::vector<OrderChain> out{lexicographic_order(1), lexicographic_order(2),
                              lexicographic_order(3)};
  out.push_back(order_from_functionals(
      2, {LinearFunctional({Rational(1), Rational(1)}), LinearFunctional({Rational(1), Rational(0)})}));
  out.push_back(order_from_functionals(
      3, {LinearFunctional({Rational(2), Rational(-1), Rational(0)}),
          LinearFunctional({Rational(1), Rational(2), Rational(1)}),
          LinearFunctional({Rational(0), Rational(1), Rational(3)})}));
  return out;
}

TEST(MaskBlock, FourFrequencyMatchesCoordinateMasks) {
  const Measure mu = four_frequency();
  const Measure b1 = mask_block(mu, lex2(), 1);
  const Measure b2 = mask_block(mu, lex2(), 2);
  oracle::for_each_in_box(2, 6, [&](const oracle::Point& p) {
    const IntVec chi = from_int64(p);
    const Complex full = fourier_at(mu, chi);
    const int s = lex_stage(p);
    EXPECT_EQ(fourier_at(b1, chi), s == 1 ? full : Complex(0.0));
    EXPECT_EQ(fourier_at(b2, chi), s == 2 ? full : Complex(0.0));
  });
  EXPECT_EQ(b1, density(poly(2, {{{1, 0}, {1.0, 0.5}}, {{2, -3}, {0, 1}}})));
  EXPECT_EQ(b2, density(poly(2, {{{0, 1}, -2.0}})));
}

TEST(MaskBlock, HaarAndLineCharacter) {
  for (std::size_t j : {1u, 2u}) EXPECT_TRUE(mask_block(haar(2), lex2(), j).empty());
  EXPECT_EQ(mask_block(line_character(), lex2(), 1), line_character());
  EXPECT_TRUE(mask_block(line_character(), lex2(), 2).empty());
  EXPECT_THROW(mask_block(haar(2), lex2(), 3), InvalidArgument);
}

TEST(Decompose, DiracOnCircle) {
  const Measure d = dirac(rational_zeros(1));
  const auto dec = decompose(d, positive_line());
  EXPECT_EQ(dec.base, haar(1));
  ASSERT_EQ(dec.blocks.size(), 1u);
  EXPECT_EQ(dec.blocks[0].part, d - haar(1));
  EXPECT_EQ(dec.reconstruct(), d);
}

TEST(Decompose, HaarAndFourFrequency) {
  const auto h = decompose(haar(2), lex2());
  EXPECT_EQ(h.base, haar(2));
  for (const auto& b : h.blocks) EXPECT_TRUE(b.part.empty());

  const Measure mu = four_frequency();
  const auto dec = decompose(mu, lex2());
  EXPECT_EQ(dec.base, haar(2) * 0.75);
  EXPECT_EQ(dec.reconstruct(), mu);
}

TEST(Decompose, ReconstructionOnCorpus) {
  std::size_t seed = 0;
  for (const auto& chain : small_chains()) {
    for (const auto& mu : measure_corpus(chain, 100 + seed++, 40)) {
      const auto dec = decompose(mu, chain);
      EXPECT_TRUE(equivalent(dec.reconstruct(), mu));
    }
  }
}

TEST(Decompose, MasksAreOrthogonalIdempotents) {
  for (const auto& chain : small_chains()) {
    for (const auto& mu : measure_corpus(chain, 7, 15)) {
      for (std::size_t i = 1; i <= chain.length(); ++i) {
        const Measure bi = mask_block(mu, chain, i);
        for (std::size_t j = 1; j <= chain.length(); ++j) {
          const Measure bij = mask_block(bi, chain, j);
          if (i == j) {
            EXPECT_TRUE(equivalent(bij, bi));
          } else {
            EXPECT_TRUE(bij.empty());
          }
        }
      }
    }
  }
}

TEST(Decompose, BlocksOfAnalyticMeasuresAreAnalytic) {
  MeasureCorpusOptions opts;
  opts.analytic = true;
  for (const auto& chain : small_chains()) {
    for (const auto& mu : measure_corpus(chain, 11, 25, opts)) {
      ASSERT_EQ(is_analytic(mu, chain).verdict, Verdict::kYes);
      for (const auto& b : decompose(mu, chain).blocks) {
        EXPECT_EQ(is_analytic(b.part, chain).verdict, Verdict::kYes);
        for (const auto& c : support(b.part)) {
          EXPECT_TRUE(chain.subgroup(b.stage).contains(c.offset));
          EXPECT_TRUE(c.lattice.subset_of(chain.subgroup(b.stage)));
          EXPECT_EQ(classify_coset(chain, c), CosetSign::kInsideP);
        }
      }
    }
  }
}

TEST(SignScan, TrivialCases) {
  const auto empty = sign_scan(decompose(haar(2), lex2()));
  EXPECT_EQ(empty.max_ratio, 0.0);
  EXPECT_TRUE(empty.patterns.empty());

  const auto single = sign_scan(decompose(line_character(), lex2()));
  ASSERT_EQ(single.patterns.size(), 2u);
  EXPECT_NEAR(single.max_ratio, 1.0, 1e-9);
  EXPECT_EQ(single.argmax_signs, (std::vector<int>{1, 1}));
}

TEST(SignScan, TwoBlocksMatchDirectQuadrature) {
  // mu = (1 + e^{2 pi i x} + e^{2 pi i y}) dx dy: blocks {(1,0)} and {(0,1)}.
  const Measure mu = density(poly(2, {{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}}));
  const auto r = sign_scan(decompose(mu, lex2()));
  ASSERT_EQ(r.patterns.size(), 4u);
  ASSERT_TRUE(r.converged);
  const double n = 256;
  auto direct = [&](int e1, int e2) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const double x = (i + 0.5) / n, y = (k + 0.5) / n;
        s += std::abs(Complex(e1) * std::polar(1.0, kTwoPi * x) +
                      Complex(e2) * std::polar(1.0, kTwoPi * y));
      }
    }
    return s / (n * n);
  };
  double tv_mu = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double x = (i + 0.5) / n, y = (k + 0.5) / n;
      tv_mu += std::abs(1.0 + std::polar(1.0, kTwoPi * x) + std::polar(1.0, kTwoPi * y));
    }
  }
  tv_mu /= n * n;
  EXPECT_NEAR(r.input_norm, tv_mu, 1e-5);
  EXPECT_NEAR(r.ratios[0], direct(1, 1) / tv_mu, 1e-5);
  EXPECT_NEAR(r.ratios[3], direct(-1, -1) / tv_mu, 1e-5);
  EXPECT_NEAR(r.ratios[1], r.ratios[2], 1e-9);
}

TEST(SignScan, TranslationInvariant) {
  const RatVec t{Rational(3, 11), Rational(-2, 5)};
  for (const auto& mu : measure_corpus(lex2(), 23, 10)) {
    const auto a = sign_scan(decompose(mu, lex2()));
    const auto b = sign_scan(decompose(translate(mu, t), lex2()));
    EXPECT_NEAR(a.max_ratio, b.max_ratio, 1e-5 * std::max(1.0, a.max_ratio));
  }
}

TEST(IsAnalytic, Examples) {
  EXPECT_EQ(is_analytic(line_character(), lex2()).verdict, Verdict::kYes);

  const auto d = is_analytic(dirac(rational_zeros(1)), positive_line());
  ASSERT_EQ(d.verdict, Verdict::kNo);
  EXPECT_EQ(*d.witness, V({-1}));
  EXPECT_EQ(d.witness_value, Complex(1.0));

  const Measure ac = density(poly(2, {{{0, 0}, 1.0}, {{1, 1}, 1.0}}));
  EXPECT_EQ(is_analytic(ac, lex2()).verdict, Verdict::kYes);
  EXPECT_EQ(is_analytic(Measure(2), lex2()).verdict, Verdict::kYes);
}

TEST(IsAnalytic, WitnessesAgreeWithBruteForce) {
  for (const auto& mu : measure_corpus(lex2(), 31, 60)) {
    const auto r = is_analytic(mu, lex2());
    bool outside = false;
    oracle::for_each_in_box(2, 6, [&](const oracle::Point& p) {
      const bool neg = p[0] < 0 || (p[0] == 0 && p[1] < 0);
      if (neg && std::abs(fourier_at(mu, from_int64(p))) > kCompareTolerance) outside = true;
    });
    if (r.verdict == Verdict::kYes) EXPECT_FALSE(outside);
    if (r.verdict == Verdict::kNo) {
      EXPECT_FALSE(in_P(lex2(), *r.witness));
      EXPECT_GT(std::abs(fourier_at(mu, *r.witness)), kCompareTolerance);
    }
    if (outside) EXPECT_EQ(r.verdict, Verdict::kNo);
  }
}

TEST(Idempotent, Examples) {
  for (std::size_t j = 1; j <= 3; ++j) {
    const auto r = check_idempotent(haar(2), lex2(), j);
    EXPECT_TRUE(r.spectrum_inside && r.fixed && r.holds());
  }
  const auto d = check_idempotent(dirac({Rational(1, 3)}), positive_line(), 2);
  EXPECT_FALSE(d.spectrum_inside);
  EXPECT_FALSE(d.fixed);
  EXPECT_TRUE(d.holds());

  const auto l = check_idempotent(line_character(), lex2(), 1);
  EXPECT_TRUE(l.spectrum_inside && l.fixed && l.holds());
  const auto l2 = check_idempotent(line_character(), lex2(), 2);
  EXPECT_TRUE(l2.spectrum_disjoint && l2.annihilated && l2.holds());
}

TEST(Idempotent, EquivalencesHoldOnCorpus) {
  for (const auto& chain : small_chains()) {
    for (const auto& mu : measure_corpus(chain, 41, 20)) {
      for (std::size_t j = 1; j <= chain.length() + 1; ++j) {
        const Measure block = restrict_spectrum(mu, {zeros(chain.dim()), chain.subgroup(j)});
        EXPECT_TRUE(check_idempotent(block, chain, j).holds());
        EXPECT_TRUE(check_idempotent(mu - block, chain, j).holds());
      }
    }
  }
}

TEST(Invariance, Examples) {
  // spec inside C_2 = {0} x Z.
  const Measure mu = density(poly(2, {{{0, 1}, 1.0}, {{0, -2}, {0, 2}}}));
  const RatVec y{Rational(1, 7), Rational(0)};
  EXPECT_TRUE(check_invariance(mu, lex2(), 2, y));
  EXPECT_FALSE(check_invariance(four_frequency(), lex2(), 2, y));
  EXPECT_TRUE(check_invariance(haar(2), lex2(), 3, {Rational(2, 9), Rational(5, 13)}));
  EXPECT_TRUE(check_invariance(dirac(rational_zeros(2)), lex2(), 1, rational_zeros(2)));
  EXPECT_THROW(check_invariance(mu, lex2(), 2, {Rational(0), Rational(1, 3)}), InvalidArgument);
}

TEST(WeakAnalyticity, Examples) {
  const TrigPoly g = poly(1, {{{1}, 1.0}});
  const TrigPoly h = poly(1, {{{1}, 1.0}});
  const Complex r = weak_analyticity_residual(dirac(rational_zeros(1)), positive_line(), g, h);
  EXPECT_NEAR(std::abs(r - Complex(1.0)), 0.0, 1e-15);
  EXPECT_EQ(weak_analyticity_residual(Measure(1), positive_line(), g, h), Complex(0.0));
  EXPECT_THROW(weak_analyticity_residual(Measure(1), positive_line(), poly(1, {{{0}, 1.0}}), h),
               InvalidArgument);
  EXPECT_THROW(weak_analyticity_residual(Measure(1), positive_line(), poly(1, {{{-1}, 1.0}}), h),
               InvalidArgument);
}

TEST(WeakAnalyticity, VanishesForAnalyticCorpus) {
  MeasureCorpusOptions mopts;
  mopts.analytic = true;
  PolyCorpusOptions popts;
  PolyCorpusOptions any;
  any.analytic = false;
  for (const auto& chain : small_chains()) {
    const auto mus = measure_corpus(chain, 5, 10, mopts);
    const auto gs = poly_corpus(chain, 6, 10, popts);
    const auto hs = poly_corpus(chain, 7, 10, any);
    for (std::size_t i = 0; i < mus.size(); ++i) {
      TrigPoly g = gs[i].filter([](const Frequency& chi) {
        for (auto x : chi) if (x != 0) return true;
        return false;
      });
      if (g.empty()) continue;
      EXPECT_LE(std::abs(weak_analyticity_residual(mus[i], chain, g, hs[i])), 1e-12);
    }
  }
}

TEST(FmRiesz, Examples) {
  const Measure mu = line_character() + density(poly(2, {{{0, 0}, 1.0}, {{1, 1}, 1.0}}));
  const auto r = fm_riesz_check(mu, lex2());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.translations_checked, 20u);

  const auto h = fm_riesz_check(haar(2), lex2());
  EXPECT_TRUE(h.passed());
  EXPECT_TRUE(lebesgue_decompose(haar(2)).singular.empty());
}

TEST(FmRiesz, AnalyticCorpusPartsStayAnalytic) {
  MeasureCorpusOptions opts;
  opts.analytic = true;
  for (const auto& chain : small_chains()) {
    for (const auto& mu : measure_corpus(chain, 13, 15, opts)) {
      const auto r = fm_riesz_check(mu, chain, 1, 5);
      EXPECT_TRUE(r.passed());
    }
  }
}

}  // namespace
}  // namespace rieszkit
