#include "entcat/catalyst.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entcat {

namespace {

void require_probability(double v, const char* name) {
  if (!(v > 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os.precision(12);
    os << name << " = " << v << " is outside (0, 1]";
    throw Error(ErrorKind::InvalidProbability, os.str());
  }
}

void require_dimension(std::size_t p) {
  if (p == 0) throw Error(ErrorKind::InvalidDimension, "catalyst dimension must be >= 1");
}

}  // namespace

NecessaryConditionsReport necessary_conditions(const SchmidtSpectrum& src,
                                               const SchmidtSpectrum& tgt,
                                               const NumericConfig& cfg) {
  const std::size_t n = std::max(src.dim(), tgt.dim());
  const auto s = pad_to(src, n);
  const auto t = pad_to(tgt, n);
  const double eps = cfg.epsilon;
  const double hs = entropy(s);
  const double ht = entropy(t);

  NecessaryConditionsReport r;
  r.largest_coeff_ok = s.largest() <= t.largest() + eps;
  r.smallest_coeff_ok = s.smallest() >= t.smallest() - eps;
  r.entropy_ok = hs >= ht - eps;
  r.marginally_isentropic = std::abs(hs - ht) <= eps;
  r.incomparable = classify(s, t, cfg) == TransformClassification::Incomparable;
  r.passes = r.largest_coeff_ok && r.smallest_coeff_ok && r.entropy_ok && r.incomparable;
  return r;
}

double theorem1_bound(double pmax_pair, std::size_t p) {
  require_probability(pmax_pair, "pmax");
  require_dimension(p);
  return pmax_pair / static_cast<double>(p);
}

double corollary2_bound(double pmax_pair, double p_prime, std::size_t p) {
  require_probability(pmax_pair, "pmax");
  require_probability(p_prime, "target probability");
  require_dimension(p);
  return std::min(1.0, pmax_pair / p_prime);
}

double admissible_bound(double pmax_pair, double target_probability) {
  return std::min(1.0, pmax_pair / target_probability);
}

CatalystVerdict is_catalyst(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                            const SchmidtSpectrum& cand, const NumericConfig& cfg) {
  CatalystVerdict v;
  const auto m = majorizes(tensor(tgt, cand), tensor(src, cand), cfg);
  v.is_catalyst = m.holds;
  v.first_violation = m.first_violation;
  v.bound_value = static_cast<double>(cand.dim()) * cand.smallest();
  v.pmax_pair = pmax(src, tgt, cfg);
  v.saturated = std::abs(v.bound_value - v.pmax_pair) <= cfg.epsilon;
  return v;
}

double quasi_pmax(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                  const SchmidtSpectrum& cand, const NumericConfig& cfg) {
  return pmax(tensor(src, cand), tensor(tgt, cand), cfg);
}

bool corollary1_check(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt, std::size_t n,
                      const NumericConfig& cfg) {
  return pmax_multicopy(src, tgt, n, cfg).value >= pmax(src, tgt, cfg) - cfg.epsilon;
}

}  // namespace entcat
