#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "entcat/catalyst.hpp"
#include "entcat/numeric.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

enum class SearchMode { Exact2, Random };

struct SearchConfig {
  std::size_t p = 2;
  SearchMode mode = SearchMode::Random;
  std::size_t sample_count = 100'000;
  /// 1 asks for a full catalyst; below 1 asks for a quasi-catalyst lifting
  /// the conversion probability to at least this value.
  double target_probability = 1.0;
  NumericConfig numeric;
  /// Worker threads for candidate testing; 0 uses hardware concurrency.
  /// Results never depend on this value.
  unsigned threads = 0;
  /// Discard candidates that cannot satisfy the catalyst bound before testing.
  bool prune = true;
};

/// Closed interval of the larger catalyst coefficient x in (x, 1-x).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

namespace outcome {

struct Found {
  SchmidtSpectrum catalyst;
  CatalystVerdict verdict;
  /// Conversion probability with the catalyst attached.
  double achieved_probability = 1.0;
  std::size_t samples_tested = 0;
  std::size_t samples_pruned_by_theorem1 = 0;
};

/// Certificate that no 2 x 2 catalyst exists.
struct NonExistence {
  std::size_t breakpoints_examined = 0;
  std::vector<Interval> feasible_intervals;  // always empty
};

struct FoundInterval {
  std::vector<Interval> feasible_x_intervals;
  std::size_t breakpoints_examined = 0;
};

struct NotFound {
  std::size_t samples_tested = 0;
  std::size_t samples_pruned_by_theorem1 = 0;
  /// Non-empty when the pair was rejected by the necessary-condition screen.
  std::string reason;
};

struct TrivialAlreadyTransformable {};

}  // namespace outcome

using SearchOutcome = std::variant<outcome::Found, outcome::NonExistence, outcome::FoundInterval,
                                   outcome::NotFound, outcome::TrivialAlreadyTransformable>;

/// Exact decision for 2 x 2 catalysts (x, 1-x).
///
/// Every product a_i x and a_j (1-x) swaps order only at x = a_j / (a_i + a_j),
/// so between consecutive breakpoints each top-l prefix sum of the combined
/// spectra is linear in x and every majorization constraint is a linear
/// inequality. Solving them piece by piece yields the exact feasible set.
///
/// Returns TrivialAlreadyTransformable when src -> tgt is already
/// deterministic; throws NotIncomparable when only tgt -> src is.
SearchOutcome search_exact_p2(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                              const NumericConfig& cfg = {});

/// Uniform simplex sampling with catalyst-bound pruning. Deterministic in
/// (inputs, seed, sample_count) for any thread count.
SearchOutcome search_random(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                            const SearchConfig& sc);

/// Dispatches on sc.mode; Exact2 demands p == 2 and target_probability == 1
/// and throws Usage otherwise.
SearchOutcome search(const SchmidtSpectrum& src, const SchmidtSpectrum& tgt,
                     const SearchConfig& sc);

/// Uniform points on the probability simplex of dimension p, each sorted
/// descending. Built from spacings of sorted uniforms drawn from a
/// mt19937_64 stream seeded with `seed`.
std::vector<SchmidtSpectrum> sample_simplex(std::size_t p, std::size_t count, std::uint64_t seed);

}  // namespace entcat
