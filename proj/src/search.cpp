#include "entcat/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "entcat/transform.hpp"

namespace entcat {

namespace {

// One entry of a spectrum tensored with (x, 1-x): value = offset + slope * x.
struct LinearTerm {
  double offset;
  double slope;
  double at(double x) const { return offset + slope * x; }
};

std::vector<LinearTerm> combined_terms(const SchmidtSpectrum& s) {
  std::vector<LinearTerm> terms;
  terms.reserve(2 * s.dim());
  for (double a : s.coefficients()) {
    terms.push_back({0.0, a});  // a * x
    terms.push_back({a, -a});   // a * (1 - x)
  }
  return terms;
}

// Prefix sums of the terms sorted at `probe`; valid on the whole piece that
// contains `probe` because no two terms cross inside it.
std::vector<LinearTerm> prefix_lines(std::vector<LinearTerm> terms, double probe) {
  std::stable_sort(terms.begin(), terms.end(), [probe](const LinearTerm& l, const LinearTerm& r) {
    return l.at(probe) > r.at(probe);
  });
  std::vector<LinearTerm> prefix;
  prefix.reserve(terms.size());
  CompensatedSum c, d;
  for (const auto& t : terms) {
    c.add(t.offset);
    d.add(t.slope);
    prefix.push_back({c.value(), d.value()});
  }
  return prefix;
}

void collect_breakpoints(const SchmidtSpectrum& s, double lo, double hi,
                         std::vector<double>& out) {
  for (double ai : s.coefficients())
    for (double aj : s.coefficients()) {
      const double denom = ai + aj;
      if (denom <= 0.0) continue;
      const double x = aj / denom;
      if (x > lo && x < hi) out.push_back(x);
    }
}

std::vector<Interval> merge_intervals(std::vector<Interval> in, double tol) {
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& iv : in) {
    if (!out.empty() && iv.lo <= out.back().hi + tol)
      out.back().hi = std::max(out.back().hi, iv.hi);
    else
      out.push_back(iv);
  }
  return out;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2 * threads) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i);
    });
}

double unit_uniform(std::mt19937_64& rng) {
  // 53 random bits; fixed across standard library implementations.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string screen_reason(const NecessaryConditionsReport& nc) {
  std::vector<std::string> failed;
  if (!nc.incomparable) failed.emplace_back("pair is not incomparable");
  if (!nc.largest_coeff_ok) failed.emplace_back("largest coefficient condition failed");
  if (!nc.smallest_coeff_ok) failed.emplace_back("smallest coefficient condition failed");
  if (!nc.entropy_ok) failed.emplace_back("entropy condition failed");
  std::string out;
  for (const auto& f : failed) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

}  // namespace

SearchOutcome search_exact_p2(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                              const NumericConfig& cfg) {
  const std::size_t n = std::max(src.dim(), tgt.dim());
  const auto s = pad_to(src, n);
  const auto t = pad_to(tgt, n);
  switch (classify(s, t, cfg)) {
    case TransformClassification::EquivalentSpectra:
    case TransformClassification::SourceToTargetDeterministic:
      return outcome::TrivialAlreadyTransformable{};
    case TransformClassification::TargetToSourceDeterministic:
      throw Error(ErrorKind::NotIncomparable,
                  "target converts deterministically to source; no catalyst can reverse it");
    case TransformClassification::Incomparable:
      break;
  }

  const double eps = cfg.epsilon;
  // Catalyst bound 2 (1 - x) <= pmax restricts the larger coefficient.
  const double pm = pmax(s, t, cfg);
  const double lo = std::clamp(1.0 - (pm + eps) / 2.0, 0.5, 1.0);
  const double hi = 1.0;

  std::vector<double> breaks{lo, hi};
  collect_breakpoints(s, lo, hi, breaks);
  collect_breakpoints(t, lo, hi, breaks);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [eps](double a, double b) { return b - a <= eps; }),
               breaks.end());
  if (breaks.back() < hi) breaks.back() = hi;

  const auto src_terms = combined_terms(s);
  const auto tgt_terms = combined_terms(t);
  // Half the comparison slack keeps interval endpoints strictly inside the
  // tolerance used by is_catalyst.
  const double slack = eps / 2.0;

  std::vector<Interval> feasible;
  const std::size_t pieces = breaks.size() > 1 ? breaks.size() - 1 : 1;
  for (std::size_t k = 0; k < pieces; ++k) {
    double left = breaks[k];
    double right = breaks.size() > 1 ? breaks[k + 1] : breaks[k];
    const double probe = 0.5 * (left + right);
    const auto ps = prefix_lines(src_terms, probe);
    const auto pt = prefix_lines(tgt_terms, probe);
    for (std::size_t l = 0; l < ps.size() && left <= right; ++l) {
      // Need ps[l](x) - pt[l](x) <= slack.
      const double c = ps[l].offset - pt[l].offset;
      const double d = ps[l].slope - pt[l].slope;
      if (d > 0.0)
        right = std::min(right, (slack - c) / d);
      else if (d < 0.0)
        left = std::max(left, (slack - c) / d);
      else if (c > slack)
        right = left - 1.0;
    }
    if (left <= right) feasible.push_back({left, right});
  }

  if (feasible.empty()) return outcome::NonExistence{breaks.size(), {}};
  return outcome::FoundInterval{merge_intervals(std::move(feasible), eps), breaks.size()};
}

std::vector<SchmidtSpectrum> sample_simplex(std::size_t p, std::size_t count, std::uint64_t seed) {
  if (p == 0) throw Error(ErrorKind::InvalidDimension, "simplex dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<SchmidtSpectrum> out;
  out.reserve(count);
  std::vector<double> cuts(p + 1);
  std::vector<double> point(p);
  for (std::size_t k = 0; k < count; ++k) {
    cuts.front() = 0.0;
    cuts.back() = 1.0;
    for (std::size_t i = 1; i < p; ++i) cuts[i] = unit_uniform(rng);
    std::sort(cuts.begin() + 1, cuts.end() - 1);
    for (std::size_t i = 0; i < p; ++i) point[i] = cuts[i + 1] - cuts[i];
    out.push_back(make_spectrum(point));
  }
  return out;
}

SearchOutcome search_random(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                            const SearchConfig& sc) {
  if (sc.p < 2) throw Error(ErrorKind::InvalidDimension, "catalyst search needs p >= 2");
  if (!(sc.target_probability > 0.0 && sc.target_probability <= 1.0))
    throw Error(ErrorKind::InvalidProbability, "target probability must lie in (0, 1]");
  const NumericConfig& cfg = sc.numeric;
  const double eps = cfg.epsilon;
  const bool full = sc.target_probability >= 1.0;

  const double pm = pmax(src, tgt, cfg);
  if (full ? nielsen_transformable(src, tgt, cfg) : pm >= sc.target_probability - eps)
    return outcome::TrivialAlreadyTransformable{};
  if (full) {
    const auto nc = necessary_conditions(src, tgt, cfg);
    if (!nc.passes) return outcome::NotFound{0, 0, screen_reason(nc)};
  }

  auto samples = sample_simplex(sc.p, sc.sample_count, cfg.seed);

  // Most uniform candidates first: they are the least constrained by the bound.
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].smallest() > samples[b].smallest();
  });

  const double bound = admissible_bound(pm, sc.target_probability);
  std::vector<std::size_t> survivors;
  survivors.reserve(order.size());
  std::size_t pruned = 0;
  for (std::size_t idx : order) {
    const double scaled = static_cast<double>(sc.p) * samples[idx].smallest();
    if (sc.prune && scaled > bound + eps)
      ++pruned;
    else
      survivors.push_back(idx);
  }

  const unsigned threads =
      sc.threads != 0 ? sc.threads : std::max(1u, std::thread::hardware_concurrency());
  auto passes = [&](const SchmidtSpectrum& cand) {
    if (full) return is_catalyst(src, tgt, cand, cfg).is_catalyst;
    return quasi_pmax(src, tgt, cand, cfg) >= sc.target_probability - eps;
  };

  constexpr std::size_t kBlock = 4096;
  std::vector<char> hit;
  for (std::size_t start = 0; start < survivors.size(); start += kBlock) {
    const std::size_t len = std::min(kBlock, survivors.size() - start);
    hit.assign(len, 0);
    parallel_for(len, threads,
                 [&](std::size_t i) { hit[i] = passes(samples[survivors[start + i]]) ? 1 : 0; });
    // Lowest index wins, whatever order the workers finished in.
    const auto it = std::find(hit.begin(), hit.end(), 1);
    if (it == hit.end()) continue;
    const std::size_t pos = start + static_cast<std::size_t>(it - hit.begin());
    const auto& cand = samples[survivors[pos]];
    outcome::Found found{cand, is_catalyst(src, tgt, cand, cfg), quasi_pmax(src, tgt, cand, cfg),
                         pos + 1, pruned};
    if (full && !found.verdict.is_catalyst)
      throw std::logic_error("search_random: candidate failed re-verification");
    return found;
  }
  return outcome::NotFound{survivors.size(), pruned, {}};
}

SearchOutcome search(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                     const SearchConfig& sc) {
  if (sc.mode == SearchMode::Exact2) {
    if (sc.p != 2) {
      std::ostringstream os;
      os << "exact mode only decides p = 2, got p = " << sc.p;
      throw Error(ErrorKind::Usage, os.str());
    }
    if (sc.target_probability < 1.0)
      throw Error(ErrorKind::Usage, "exact mode only decides full catalysis");
    return search_exact_p2(src, tgt, sc.numeric);
  }
  return search_random(src, tgt, sc);
}

}  // namespace entcat
