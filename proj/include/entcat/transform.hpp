#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "entcat/numeric.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

enum class TransformClassification {
  EquivalentSpectra,
  SourceToTargetDeterministic,
  TargetToSourceDeterministic,
  Incomparable,
};

std::string_view to_string(TransformClassification c);

/// Tail sums E_l = sum_{i >= l} s_i for l = 1..dim (E_1 is the total).
std::vector<double> monotone_tails(const SchmidtSpectrum& s);

/// Deterministic LOCC conversion src -> tgt exists iff src is majorized by tgt.
bool nielsen_transformable(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                           const NumericConfig& cfg = {});

TransformClassification classify(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                                 const NumericConfig& cfg = {});

struct PmaxResult {
  double value = 1.0;
  /// 1-based index l attaining the minimum ratio (smallest such l).
  std::size_t witness = 1;
};

/// Optimal single-copy conversion probability, min over l of E_l(src)/E_l(tgt).
/// Indices where E_l(tgt) <= eps impose no constraint.
PmaxResult pmax_with_witness(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                             const NumericConfig& cfg = {});

inline double pmax(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                   const NumericConfig& cfg = {}) {
  return pmax_with_witness(src, tgt, cfg).value;
}

/// pmax between n-fold tensor powers; throws SizeCapExceeded.
PmaxResult pmax_multicopy(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt, std::size_t n,
                          const NumericConfig& cfg = {});

/// Maximally entangled p x p spectrum.
SchmidtSpectrum uniform_spectrum(std::size_t p);

struct TransformReport {
  TransformClassification classification = TransformClassification::EquivalentSpectra;
  double pmax_forward = 1.0;
  double pmax_backward = 1.0;
  double entropy_source = 0.0;
  double entropy_target = 0.0;
  std::vector<double> monotones_source;
  std::vector<double> monotones_target;
};

TransformReport analyze(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                        const NumericConfig& cfg = {});

}  // namespace entcat
