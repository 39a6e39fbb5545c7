#include "entcat/transform.hpp"

#include <algorithm>
#include <limits>

namespace entcat {

std::string_view to_string(TransformClassification c) {
  switch (c) {
    case TransformClassification::EquivalentSpectra: return "equivalent_spectra";
    case TransformClassification::SourceToTargetDeterministic: return "source_to_target_deterministic";
    case TransformClassification::TargetToSourceDeterministic: return "target_to_source_deterministic";
    case TransformClassification::Incomparable: return "incomparable";
  }
  return "unknown";
}

std::vector<double> monotone_tails(const SchmidtSpectrum& s) {
  std::vector<double> tails(s.dim());
  CompensatedSum acc;
  for (std::size_t i = s.dim(); i-- > 0;) {
    acc.add(s[i]);
    tails[i] = acc.value();
  }
  return tails;
}

bool nielsen_transformable(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                           const NumericConfig& cfg) {
  return majorizes(tgt, src, cfg).holds;
}

TransformClassification classify(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                                 const NumericConfig& cfg) {
  const bool forward = nielsen_transformable(src, tgt, cfg);
  const bool backward = nielsen_transformable(tgt, src, cfg);
  if (forward && backward) return TransformClassification::EquivalentSpectra;
  if (forward) return TransformClassification::SourceToTargetDeterministic;
  if (backward) return TransformClassification::TargetToSourceDeterministic;
  return TransformClassification::Incomparable;
}

PmaxResult pmax_with_witness(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                             const NumericConfig& cfg) {
  const std::size_t n = std::max(src.dim(), tgt.dim());
  const auto es = monotone_tails(pad_to(src, n));
  const auto et = monotone_tails(pad_to(tgt, n));

  PmaxResult best{std::numeric_limits<double>::infinity(), 1};
  for (std::size_t l = 0; l < n; ++l) {
    if (et[l] <= cfg.epsilon) continue;
    const double ratio = es[l] / et[l];
    if (ratio < best.value) best = {ratio, l + 1};
  }
  if (best.value == std::numeric_limits<double>::infinity())
    throw Error(ErrorKind::InvalidProbability, "target spectrum has no weight above tolerance");
  // l = 1 compares the two totals; rounding may put the ratio a hair above 1.
  best.value = std::clamp(best.value, 0.0, 1.0);
  return best;
}

PmaxResult pmax_multicopy(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt, std::size_t n,
                          const NumericConfig& cfg) {
  return pmax_with_witness(tensor_power(src, n, cfg), tensor_power(tgt, n, cfg), cfg);
}

SchmidtSpectrum uniform_spectrum(std::size_t p) {
  if (p == 0) throw Error(ErrorKind::InvalidDimension, "uniform spectrum needs p >= 1");
  return detail::from_sorted(std::vector<double>(p, 1.0 / static_cast<double>(p)), p);
}

TransformReport analyze(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                        const NumericConfig& cfg) {
  const std::size_t n = std::max(src.dim(), tgt.dim());
  const auto s = pad_to(src, n);
  const auto t = pad_to(tgt, n);
  TransformReport r;
  r.classification = classify(s, t, cfg);
  r.pmax_forward = pmax(s, t, cfg);
  r.pmax_backward = pmax(t, s, cfg);
  r.entropy_source = entropy(s);
  r.entropy_target = entropy(t);
  r.monotones_source = monotone_tails(s);
  r.monotones_target = monotone_tails(t);
  return r;
}

}  // namespace entcat
