#include "entcat/transform.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

namespace entcat {
namespace {

const SchmidtSpectrum kAlpha = make_spectrum({0.31, 0.31, 0.30, 0.04, 0.04});
const SchmidtSpectrum kBeta = make_spectrum({0.48, 0.24, 0.14, 0.14, 0.0});
const SchmidtSpectrum kFourSource = make_spectrum({0.4, 0.4, 0.1, 0.1});
const SchmidtSpectrum kFourTarget = make_spectrum({0.5, 0.25, 0.25, 0.0});

TEST(MonotoneTails, Examples) {
  EXPECT_EQ(monotone_tails(make_spectrum({0.5, 0.5})), (std::vector<double>{1.0, 0.5}));
  const auto t = monotone_tails(kAlpha);
  const std::vector<double> want{1.0, 0.69, 0.38, 0.08, 0.04};
  ASSERT_EQ(t.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(t[i], want[i], 1e-15);
  EXPECT_EQ(monotone_tails(make_spectrum({1.0})), (std::vector<double>{1.0}));
}

TEST(Nielsen, Examples) {
  EXPECT_TRUE(nielsen_transformable(make_spectrum({0.5, 0.5}), make_spectrum({1.0, 0.0})));
  EXPECT_FALSE(nielsen_transformable(kAlpha, kBeta));
  EXPECT_FALSE(nielsen_transformable(kFourSource, kFourTarget));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(kAlpha, kBeta), TransformClassification::Incomparable);
  EXPECT_EQ(classify(kFourSource, kFourTarget), TransformClassification::Incomparable);
  EXPECT_EQ(classify(make_spectrum({0.5, 0.5}), make_spectrum({1.0, 0.0})),
            TransformClassification::SourceToTargetDeterministic);
  EXPECT_EQ(classify(make_spectrum({1.0, 0.0}), make_spectrum({0.5, 0.5})),
            TransformClassification::TargetToSourceDeterministic);
  EXPECT_EQ(classify(kAlpha, kAlpha), TransformClassification::EquivalentSpectra);
  // Zero padding does not change the class.
  EXPECT_EQ(classify(make_spectrum({0.5, 0.5}), make_spectrum({0.5, 0.5, 0.0})),
            TransformClassification::EquivalentSpectra);
}

TEST(Pmax, Examples) {
  const auto r = pmax_with_witness(kAlpha, kBeta);
  EXPECT_NEAR(r.value, 4.0 / 7.0, 1e-12);
  EXPECT_EQ(r.witness, 4u);
  const auto q = pmax_with_witness(make_spectrum({0.8, 0.2}), make_spectrum({0.5, 0.5}));
  EXPECT_NEAR(q.value, 0.4, 1e-15);
  EXPECT_EQ(q.witness, 2u);
  EXPECT_EQ(pmax(make_spectrum({0.5, 0.5}), make_spectrum({1.0, 0.0})), 1.0);
  EXPECT_NEAR(pmax(kFourSource, kFourTarget), 0.8, 1e-12);
}

TEST(Pmax, HigherTargetRankGivesZero) {
  EXPECT_EQ(pmax(make_spectrum({1.0}), make_spectrum({0.5, 0.5})), 0.0);
}

TEST(Pmax, AgreesWithOracleAndNielsen) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto s = oracle::random_spectrum(rng, oracle::random_dim(rng, 2, 6));
    const auto t = oracle::random_spectrum(rng, oracle::random_dim(rng, 2, 6));
    const double p = pmax(s, t);
    EXPECT_NEAR(p, static_cast<double>(oracle::pmax(s.coefficients(), t.coefficients())), 1e-12);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    EXPECT_EQ(std::abs(p - 1.0) <= 1e-9, nielsen_transformable(s, t));
    EXPECT_EQ(pmax(s, s), 1.0);
    if (classify(s, t) == TransformClassification::Incomparable) {
      EXPECT_LT(p, 1.0);
      EXPECT_LT(pmax(t, s), 1.0);
    }
    if (nielsen_transformable(s, t)) EXPECT_GE(entropy(s), entropy(t) - 1e-9);
  }
}

TEST(Pmax, UniformAncillaIsNeutral) {
  std::mt19937_64 rng(22);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const auto s = oracle::random_spectrum(rng, oracle::random_dim(rng, 2, 6));
    const auto t = oracle::random_spectrum(rng, oracle::random_dim(rng, 2, 6));
    for (std::size_t p : {2, 3, 4}) {
      const auto u = uniform_spectrum(p);
      worst = std::max(worst, std::abs(pmax(tensor(s, u), tensor(t, u)) - pmax(s, t)));
    }
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(Pmax, DilutionToUniformEqualsScaledSmallest) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t p = oracle::random_dim(rng, 1, 6);
    const auto c = oracle::random_spectrum(rng, p);
    EXPECT_NEAR(pmax(c, uniform_spectrum(p)), static_cast<double>(p) * c.smallest(), 1e-9);
  }
}

TEST(PmaxMulticopy, Examples) {
  EXPECT_EQ(pmax_multicopy(kAlpha, kBeta, 1).value, pmax(kAlpha, kBeta));
  // Tail ratios over the 16-entry squares; minimum 24/25 at l = 5.
  const auto four = pmax_multicopy(kFourSource, kFourTarget, 2);
  EXPECT_NEAR(four.value, 0.96, 1e-12);
  EXPECT_GE(four.value, 0.8);
  EXPECT_EQ(pmax_multicopy(make_spectrum({0.5, 0.5}), make_spectrum({1.0, 0.0}), 3).value, 1.0);
}

TEST(PmaxMulticopy, SizeCap) {
  NumericConfig cfg;
  cfg.size_cap = 1000;
  EXPECT_THROW(pmax_multicopy(kAlpha, kBeta, 5, cfg), Error);
}

TEST(UniformSpectrum, Examples) {
  EXPECT_EQ(uniform_spectrum(1).dim(), 1u);
  EXPECT_EQ(uniform_spectrum(2)[1], 0.5);
  const auto u = uniform_spectrum(4);
  EXPECT_EQ(u.dim(), 4u);
  EXPECT_EQ(u.rank(), 4u);
  for (double c : u.coefficients()) EXPECT_EQ(c, 0.25);
  EXPECT_THROW(uniform_spectrum(0), Error);
}

TEST(Analyze, FiveLevelPairReport) {
  const auto r = analyze(kAlpha, kBeta);
  EXPECT_EQ(r.classification, TransformClassification::Incomparable);
  EXPECT_NEAR(r.pmax_forward, 4.0 / 7.0, 1e-12);
  EXPECT_LT(r.pmax_backward, 1.0);
  EXPECT_NEAR(r.entropy_source, 1.9401872986523063, 1e-12);
  EXPECT_NEAR(r.entropy_target, 1.796623811079363, 1e-12);
  ASSERT_EQ(r.monotones_target.size(), 5u);
  EXPECT_NEAR(r.monotones_target.front(), 1.0, 1e-15);
  for (std::size_t l = 1; l < 5; ++l) EXPECT_LE(r.monotones_source[l], r.monotones_source[l - 1]);
}

}  // namespace
}  // namespace entcat
