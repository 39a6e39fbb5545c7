#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace entcat {

using ReportValue = std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;

/// Ordered key/value document emitted by every CLI command.
///
/// Line format, one entry per line: `key: value\n`. Reals print with 12
/// significant digits (`%.12g`), lists of reals are comma-joined without
/// spaces, booleans are `true`/`false`, integers are plain decimal.
class ReportDocument {
 public:
  template <class T>
  void add(std::string key, T&& value) {
    using V = std::decay_t<T>;
    if constexpr (std::is_integral_v<V> && !std::is_same_v<V, bool>)
      entries_.emplace_back(std::move(key), static_cast<std::int64_t>(value));
    else if constexpr (std::is_convertible_v<V, std::string_view> && !std::is_same_v<V, std::string>)
      entries_.emplace_back(std::move(key), std::string(value));
    else
      entries_.emplace_back(std::move(key), ReportValue(std::forward<T>(value)));
  }

  const std::vector<std::pair<std::string, ReportValue>>& entries() const noexcept {
    return entries_;
  }
  const ReportValue* find(std::string_view key) const;

 private:
  std::vector<std::pair<std::string, ReportValue>> entries_;
};

std::string format_real(double v);

std::string render_kv(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);

/// Parses `key: value` lines, inferring each value's type from its text.
/// Throws Error(Parse) on a line without a `: ` separator.
ReportDocument parse_kv(std::string_view text);

}  // namespace entcat
