#include "entcat/spectrum.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

namespace entcat {
namespace {

std::vector<double> coeffs(const SchmidtSpectrum& s) {
  return {s.coefficients().begin(), s.coefficients().end()};
}

void expect_coeffs_near(const SchmidtSpectrum& s, const std::vector<double>& want,
                        double tol = 1e-15) {
  ASSERT_EQ(s.dim(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(s[i], want[i], tol) << "index " << i;
}

TEST(MakeSpectrum, SortsDescending) {
  const auto s = make_spectrum({0.04, 0.31, 0.30, 0.31, 0.04});
  EXPECT_EQ(coeffs(s), (std::vector<double>{0.31, 0.31, 0.30, 0.04, 0.04}));
  EXPECT_EQ(s.rank(), 5u);
}

TEST(MakeSpectrum, ProductState) {
  const auto s = make_spectrum({1.0});
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.rank(), 1u);
}

TEST(MakeSpectrum, TrailingZeroKeptOutOfRank) {
  const auto s = make_spectrum({0.5, 0.5, 0.0});
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(s.rank(), 2u);
}

TEST(MakeSpectrum, TinyNegativeClamped) {
  const auto s = make_spectrum({0.5, 0.5, -1e-12});
  EXPECT_EQ(s[2], 0.0);
}

TEST(MakeSpectrum, Errors) {
  auto kind_of = [](std::vector<double> raw) {
    try {
      make_spectrum(std::move(raw));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind_of({}), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of({0.5, 0.6}), ErrorKind::NotNormalized);
  EXPECT_EQ(kind_of({1.1, -0.1}), ErrorKind::NegativeEntry);
}

TEST(MakeSpectrum, RenormalizeDividesBySum) {
  const auto s = make_spectrum({1.0, 3.0}, {}, true);
  expect_coeffs_near(s, {0.75, 0.25});
}

TEST(MakeSpectrum, SortingIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto s = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 8));
    EXPECT_EQ(make_spectrum(coeffs(s)), s);
  }
}

TEST(PadTo, AppendsZeros) {
  const auto s = pad_to(make_spectrum({0.48, 0.24, 0.14, 0.14}), 5);
  EXPECT_EQ(coeffs(s), (std::vector<double>{0.48, 0.24, 0.14, 0.14, 0.0}));
  EXPECT_EQ(s.rank(), 4u);
  EXPECT_EQ(pad_to(make_spectrum({1.0}), 1), make_spectrum({1.0}));
  EXPECT_EQ(coeffs(pad_to(make_spectrum({0.5, 0.5}), 4)), (std::vector<double>{0.5, 0.5, 0, 0}));
}

TEST(PadTo, RejectsShrinking) {
  try {
    pad_to(make_spectrum({0.5, 0.5}), 1);
    FAIL() << "expected DimTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimTooSmall);
  }
}

TEST(Tensor, Examples) {
  expect_coeffs_near(tensor(make_spectrum({0.6, 0.4}), make_spectrum({0.5, 0.5})),
                     {0.3, 0.3, 0.2, 0.2});
  const auto s = make_spectrum({0.31, 0.31, 0.30, 0.04, 0.04});
  EXPECT_EQ(coeffs(tensor(s, make_spectrum({1.0}))), coeffs(s));
  // Eight products enumerated by hand.
  expect_coeffs_near(tensor(make_spectrum({0.4, 0.4, 0.1, 0.1}), make_spectrum({0.6, 0.4})),
                     {0.24, 0.24, 0.16, 0.16, 0.06, 0.06, 0.04, 0.04});
}

TEST(Tensor, RankIsMultiplicative) {
  const auto t = tensor(make_spectrum({0.5, 0.5, 0.0}), make_spectrum({0.6, 0.4}));
  EXPECT_EQ(t.dim(), 6u);
  EXPECT_EQ(t.rank(), 4u);
}

TEST(Tensor, CommutativeAndNormalized) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 6));
    const auto b = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 6));
    const auto ab = tensor(a, b);
    const auto ba = tensor(b, a);
    ASSERT_EQ(ab.dim(), ba.dim());
    for (std::size_t k = 0; k < ab.dim(); ++k) EXPECT_DOUBLE_EQ(ab[k], ba[k]);
    double sum = 0;
    for (double c : ab.coefficients()) sum += c;
    EXPECT_LE(std::abs(sum - 1.0), 2e-9);
  }
}

TEST(TensorPower, Examples) {
  expect_coeffs_near(tensor_power(make_spectrum({0.5, 0.5}), 2), {0.25, 0.25, 0.25, 0.25});
  const auto s = make_spectrum({0.7, 0.2, 0.1});
  EXPECT_EQ(tensor_power(s, 1), s);
  expect_coeffs_near(tensor_power(make_spectrum({0.6, 0.4}), 2), {0.36, 0.24, 0.24, 0.16});
}

TEST(TensorPower, SizeCap) {
  NumericConfig cfg;
  cfg.size_cap = 100;
  const auto s = make_spectrum({0.2, 0.2, 0.2, 0.2, 0.2});
  EXPECT_EQ(tensor_power(s, 2, cfg).dim(), 25u);
  try {
    tensor_power(s, 3, cfg);
    FAIL() << "expected SizeCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
  }
}

TEST(Entropy, Examples) {
  EXPECT_DOUBLE_EQ(entropy(make_spectrum({0.5, 0.5})), 1.0);
  EXPECT_EQ(entropy(make_spectrum({1.0})), 0.0);
  // Direct base-2 summation: 1.9401872986523063.
  EXPECT_NEAR(entropy(make_spectrum({0.31, 0.31, 0.30, 0.04, 0.04})), 1.9401872986523063, 1e-12);
  EXPECT_EQ(entropy(make_spectrum({0.5, 0.5, 0.0})), 1.0);
}

TEST(Entropy, AdditiveAndBounded) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 6));
    const auto b = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 6));
    EXPECT_NEAR(entropy(tensor(a, b)), entropy(a) + entropy(b), 1e-6);
    EXPECT_LE(entropy(a), std::log2(static_cast<double>(a.dim())) + 1e-12);
    EXPECT_NEAR(entropy(a), static_cast<double>(oracle::entropy_bits(a.coefficients())), 1e-12);
  }
}

TEST(Majorizes, Examples) {
  EXPECT_TRUE(majorizes(make_spectrum({1.0, 0.0}), make_spectrum({0.5, 0.5})));
  const auto beta = make_spectrum({0.48, 0.24, 0.14, 0.14, 0.0});
  const auto alpha = make_spectrum({0.31, 0.31, 0.30, 0.04, 0.04});
  const auto r = majorizes(beta, alpha);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(*r.first_violation, 3u);
  EXPECT_TRUE(majorizes(alpha, alpha));
}

TEST(Majorizes, PadsShorterSpectrum) {
  EXPECT_TRUE(majorizes(make_spectrum({1.0}), make_spectrum({0.5, 0.5})));
  EXPECT_FALSE(majorizes(make_spectrum({0.5, 0.5}), make_spectrum({1.0})));
}

TEST(Majorizes, AgreesWithOracle) {
  std::mt19937_64 rng(14);
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 6));
    const auto b = oracle::random_spectrum(rng, oracle::random_dim(rng, 1, 6));
    if (majorizes(a, b).holds != oracle::majorized_by(b.coefficients(), a.coefficients()))
      ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Majorizes, PartialOrder) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = oracle::random_dim(rng, 2, 5);
    const auto a = oracle::random_spectrum(rng, n);
    const auto b = oracle::random_spectrum(rng, n);
    const auto c = oracle::random_spectrum(rng, n);
    EXPECT_TRUE(majorizes(a, a));
    if (majorizes(a, b) && majorizes(b, c)) {
      NumericConfig loose;
      loose.epsilon = 2e-9;
      EXPECT_TRUE(majorizes(a, c, loose));
    }
    if (majorizes(a, b) && majorizes(b, a)) {
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(a[k], b[k], 2e-9);
    }
  }
}

}  // namespace
}  // namespace entcat
