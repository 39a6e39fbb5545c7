#include "entcat/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "entcat/numeric.hpp"

namespace entcat {

namespace {

std::string join_reals(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_real(v[i]);
  }
  return out;
}

std::string render_value(const ReportValue& v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<double>& l) const { return join_reals(l); }
  };
  return std::visit(Visitor{}, v);
}

bool parse_int(std::string_view s, std::int64_t& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

ReportValue infer(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  if (std::int64_t n; parse_int(text, n)) return n;
  if (double d; parse_real(text, d)) return d;
  if (text.find(',') != std::string_view::npos) {
    std::vector<double> list;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      double d;
      if (!parse_real(text.substr(start, comma - start), d)) return std::string(text);
      list.push_back(d);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return list;
  }
  return std::string(text);
}

double round_to_printed(double d) { return std::strtod(format_real(d).c_str(), nullptr); }

}  // namespace

const ReportValue* ReportDocument::find(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return &v;
  return nullptr;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string render_kv(const ReportDocument& doc) {
  std::string out;
  for (const auto& [k, v] : doc.entries()) {
    out += k;
    out += ": ";
    out += render_value(v);
    out += '\n';
  }
  return out;
}

std::string render_json(const ReportDocument& doc) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.entries()) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, double>) {
            j[k] = round_to_printed(x);
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            auto arr = nlohmann::ordered_json::array();
            for (double d : x) arr.push_back(round_to_printed(d));
            j[k] = std::move(arr);
          } else {
            j[k] = x;
          }
        },
        v);
  }
  return j.dump(2) + "\n";
}

ReportDocument parse_kv(std::string_view text) {
  ReportDocument doc;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    const auto sep = line.find(": ");
    if (sep == std::string_view::npos) {
      // Empty values render as "key: " and may lose the trailing space.
      if (!line.empty() && line.back() == ':') {
        doc.add(std::string(line.substr(0, line.size() - 1)), std::string{});
        continue;
      }
      std::ostringstream os;
      os << "line " << line_no << " has no 'key: value' separator";
      throw Error(ErrorKind::Parse, os.str());
    }
    doc.add(std::string(line.substr(0, sep)), infer(line.substr(sep + 2)));
  }
  return doc;
}

}  // namespace entcat
