#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "entcat/numeric.hpp"

namespace entcat {

class SchmidtSpectrum;

namespace detail {
// Wraps data that is already sorted descending and normalized.
SchmidtSpectrum from_sorted(std::vector<double> sorted, std::size_t rank);
}  // namespace detail

/// Ordered Schmidt coefficients of a pure bipartite state.
///
/// Coefficients are kept in descending order and sum to one within the
/// construction tolerance. Trailing zeros are legal; `rank()` counts the
/// entries above tolerance and so gives the Schmidt rank.
class SchmidtSpectrum {
 public:
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::size_t rank() const noexcept { return rank_; }

  double operator[](std::size_t i) const { return coeffs_[i]; }
  double largest() const { return coeffs_.front(); }
  double smallest() const { return coeffs_.back(); }

  friend bool operator==(const SchmidtSpectrum&, const SchmidtSpectrum&) = default;

 private:
  friend SchmidtSpectrum detail::from_sorted(std::vector<double> sorted, std::size_t rank);

  std::vector<double> coeffs_;
  std::size_t rank_ = 0;
};

/// Validates, sorts descending and counts rank. Entries in [-eps, 0) are
/// clamped to zero. With `renormalize` the entries are divided by their
/// sum instead of rejecting an unnormalized input.
SchmidtSpectrum make_spectrum(std::vector<double> raw, const NumericConfig& cfg = {},
                              bool renormalize = false);

SchmidtSpectrum pad_to(const SchmidtSpectrum& s, std::size_t dim);

SchmidtSpectrum tensor(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

/// n-fold tensor power; throws SizeCapExceeded when dim^n > cfg.size_cap.
SchmidtSpectrum tensor_power(const SchmidtSpectrum& s, std::size_t n,
                             const NumericConfig& cfg = {});

/// Shannon entropy of the spectrum in bits (marginal von Neumann entropy).
double entropy(const SchmidtSpectrum& s);

/// Prefix sums l = 1..dim, compensated.
std::vector<double> prefix_sums(std::span<const double> coeffs);

struct MajorizationResult {
  bool holds = true;
  /// 1-based smallest l with prefix_b(l) > prefix_a(l) + eps.
  std::optional<std::size_t> first_violation;

  explicit operator bool() const noexcept { return holds; }
};

/// True when every prefix sum of `b` is at most the matching prefix sum of
/// `a` (plus eps), i.e. `b` is majorized by `a`. The shorter spectrum is
/// zero-padded.
MajorizationResult majorizes(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                             const NumericConfig& cfg = {});

}  // namespace entcat
