#include "entcat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace entcat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DimTooSmall: return "DimTooSmall";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::NotIncomparable: return "NotIncomparable";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::size_t count_rank(std::span<const double> sorted, double epsilon) {
  return static_cast<std::size_t>(
      std::count_if(sorted.begin(), sorted.end(), [=](double c) { return c > epsilon; }));
}

double sum_of(std::span<const double> v) {
  CompensatedSum acc;
  // Ascending order keeps small terms from being swamped.
  for (auto it = v.rbegin(); it != v.rend(); ++it) acc.add(*it);
  return acc.value();
}

}  // namespace

SchmidtSpectrum detail::from_sorted(std::vector<double> sorted, std::size_t rank) {
  SchmidtSpectrum s;
  s.rank_ = rank;
  s.coeffs_ = std::move(sorted);
  return s;
}

SchmidtSpectrum make_spectrum(std::vector<double> raw, const NumericConfig& cfg,
                              bool renormalize) {
  if (raw.empty()) throw Error(ErrorKind::EmptyInput, "spectrum has no coefficients");
  const double eps = cfg.epsilon;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    double& c = raw[i];
    if (!std::isfinite(c)) {
      std::ostringstream os;
      os << "coefficient " << i + 1 << " is not finite";
      throw Error(ErrorKind::NotNormalized, os.str());
    }
    if (c < -eps) {
      std::ostringstream os;
      os << "coefficient " << i + 1 << " = " << c << " is negative";
      throw Error(ErrorKind::NegativeEntry, os.str());
    }
    if (c < 0.0) c = 0.0;
  }
  std::stable_sort(raw.begin(), raw.end(), std::greater<>{});

  const double total = sum_of(raw);
  if (renormalize) {
    if (!(total > 0.0)) throw Error(ErrorKind::NotNormalized, "coefficients sum to zero");
    for (double& c : raw) c /= total;
  } else if (std::abs(total - 1.0) > eps) {
    std::ostringstream os;
    os.precision(12);
    os << "coefficients sum to " << total << ", expected 1";
    throw Error(ErrorKind::NotNormalized, os.str());
  }
  if (raw.front() > 1.0 + eps) {
    std::ostringstream os;
    os << "coefficient " << raw.front() << " exceeds 1";
    throw Error(ErrorKind::NotNormalized, os.str());
  }
  const std::size_t rank = count_rank(raw, eps);
  return detail::from_sorted(std::move(raw), rank);
}

SchmidtSpectrum pad_to(const SchmidtSpectrum& s, std::size_t dim) {
  if (dim < s.dim()) {
    std::ostringstream os;
    os << "cannot pad dimension " << s.dim() << " down to " << dim;
    throw Error(ErrorKind::DimTooSmall, os.str());
  }
  std::vector<double> out(s.coefficients().begin(), s.coefficients().end());
  out.resize(dim, 0.0);
  return detail::from_sorted(std::move(out), s.rank());
}

SchmidtSpectrum tensor(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  std::vector<double> out;
  out.reserve(a.dim() * b.dim());
  for (double x : a.coefficients())
    for (double y : b.coefficients()) out.push_back(x * y);
  std::sort(out.begin(), out.end(), std::greater<>{});
  // Schmidt rank is multiplicative under tensor products.
  return detail::from_sorted(std::move(out), a.rank() * b.rank());
}

SchmidtSpectrum tensor_power(const SchmidtSpectrum& s, std::size_t n, const NumericConfig& cfg) {
  if (n == 0) throw Error(ErrorKind::InvalidDimension, "tensor power needs n >= 1");
  std::size_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (s.dim() != 0 && size > cfg.size_cap / s.dim()) {
      std::ostringstream os;
      os << "dimension " << s.dim() << "^" << n << " exceeds cap of " << cfg.size_cap;
      throw Error(ErrorKind::SizeCapExceeded, os.str());
    }
    size *= s.dim();
  }
  SchmidtSpectrum out = s;
  for (std::size_t k = 1; k < n; ++k) out = tensor(out, s);
  return out;
}

double entropy(const SchmidtSpectrum& s) {
  CompensatedSum acc;
  for (double c : s.coefficients())
    if (c > 0.0) acc.add(-c * std::log2(c));
  return std::max(0.0, acc.value());
}

std::vector<double> prefix_sums(std::span<const double> coeffs) {
  std::vector<double> out;
  out.reserve(coeffs.size());
  CompensatedSum acc;
  for (double c : coeffs) {
    acc.add(c);
    out.push_back(acc.value());
  }
  return out;
}

MajorizationResult majorizes(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                             const NumericConfig& cfg) {
  const std::size_t n = std::max(a.dim(), b.dim());
  CompensatedSum pa, pb;
  for (std::size_t l = 0; l < n; ++l) {
    pa.add(l < a.dim() ? a[l] : 0.0);
    pb.add(l < b.dim() ? b[l] : 0.0);
    if (pb.value() > pa.value() + cfg.epsilon) return {false, l + 1};
  }
  return {};
}

}  // namespace entcat
