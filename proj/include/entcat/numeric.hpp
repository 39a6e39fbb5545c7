#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entcat {

/// Tolerance and seed policy shared by every comparison and sampler.
struct NumericConfig {
  double epsilon = 1e-9;
  std::uint64_t seed = 0;
  /// Largest spectrum a tensor power may produce.
  std::size_t size_cap = 1'000'000;
};

enum class ErrorKind {
  EmptyInput,
  NotNormalized,
  NegativeEntry,
  DimTooSmall,
  SizeCapExceeded,
  InvalidProbability,
  InvalidDimension,
  NotIncomparable,
  Usage,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace entcat
