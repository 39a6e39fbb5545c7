#pragma once

#include <cstddef>
#include <optional>

#include "entcat/numeric.hpp"
#include "entcat/spectrum.hpp"
#include "entcat/transform.hpp"

namespace entcat {

/// Screening flags a pair must pass before any catalyst can exist.
struct NecessaryConditionsReport {
  bool largest_coeff_ok = false;   // alpha_1 <= beta_1
  bool smallest_coeff_ok = false;  // alpha_n >= beta_n, padded to common n
  bool entropy_ok = false;         // S(src) >= S(tgt) - eps
  bool incomparable = false;
  bool passes = false;
  /// |S(src) - S(tgt)| <= eps; such pairs are either equivalent or incomparable.
  bool marginally_isentropic = false;
};

NecessaryConditionsReport necessary_conditions(const SchmidtSpectrum& src,
                                               const SchmidtSpectrum& tgt,
                                               const NumericConfig& cfg = {});

/// Largest admissible smallest coefficient gamma_p of a p-level catalyst:
/// p * gamma_p <= pmax_pair. Throws InvalidProbability unless 0 < pmax_pair <= 1.
double theorem1_bound(double pmax_pair, std::size_t p);

/// Largest admissible p * gamma_p when the catalyst must lift the
/// conversion probability to `p_prime`; capped at 1.
double corollary2_bound(double pmax_pair, double p_prime, std::size_t p);

struct CatalystVerdict {
  bool is_catalyst = false;
  /// 1-based prefix index violated in the combined spectra, when not a catalyst.
  std::optional<std::size_t> first_violation;
  double bound_value = 0.0;  // p * gamma_p
  double pmax_pair = 0.0;
  bool saturated = false;    // |bound_value - pmax_pair| <= eps
};

CatalystVerdict is_catalyst(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                            const SchmidtSpectrum& cand, const NumericConfig& cfg = {});

/// Conversion probability with the candidate attached on both sides.
double quasi_pmax(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                  const SchmidtSpectrum& cand, const NumericConfig& cfg = {});

/// False disproves the existence of a saturated catalyst for the pair.
bool corollary1_check(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt, std::size_t n,
                      const NumericConfig& cfg = {});

/// Upper limit on p * gamma_p a candidate may have and still reach
/// `target_probability`; the shared pruning rule for catalyst search.
double admissible_bound(double pmax_pair, double target_probability);

}  // namespace entcat
