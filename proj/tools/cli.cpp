#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "entcat/catalyst.hpp"
#include "entcat/report.hpp"
#include "entcat/search.hpp"
#include "entcat/spectrum.hpp"
#include "entcat/transform.hpp"

namespace entcat::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_decimal(std::string_view token, const std::string& where) {
  double v = 0.0;
  const auto t = trim(token);
  const auto* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc{} || ptr != end)
    throw Error(ErrorKind::Parse, "cannot read '" + std::string(t) + "' as a decimal" + where);
  return v;
}

struct GlobalOptions {
  double epsilon = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "kv";
  bool renormalize = false;

  NumericConfig numeric() const {
    NumericConfig c;
    c.epsilon = epsilon;
    c.seed = seed;
    return c;
  }
};

SchmidtSpectrum load(const std::string& role, const std::string& arg, const GlobalOptions& g) {
  try {
    return make_spectrum(read_spectrum_input(arg), g.numeric(), g.renormalize);
  } catch (const Error& e) {
    throw Error(e.kind(), role + " '" + arg + "': " + e.detail());
  }
}

std::vector<double> as_vector(const SchmidtSpectrum& s) {
  return {s.coefficients().begin(), s.coefficients().end()};
}

void add_pair(ReportDocument& doc, const SchmidtSpectrum& src, const SchmidtSpectrum& tgt) {
  doc.add("source", as_vector(src));
  doc.add("target", as_vector(tgt));
}

void emit(const ReportDocument& doc, const GlobalOptions& g, std::ostream& out) {
  out << (g.format == "json" ? render_json(doc) : render_kv(doc));
}

int cmd_check(const std::string& a, const std::string& b, const GlobalOptions& g,
              std::ostream& out) {
  const auto cfg = g.numeric();
  const auto src = load("source", a, g);
  const auto tgt = load("target", b, g);
  const auto rep = analyze(src, tgt, cfg);
  const auto nc = necessary_conditions(src, tgt, cfg);

  ReportDocument doc;
  doc.add("command", "check");
  add_pair(doc, src, tgt);
  doc.add("source_rank", src.rank());
  doc.add("target_rank", tgt.rank());
  doc.add("classification", std::string(to_string(rep.classification)));
  doc.add("pmax_forward", rep.pmax_forward);
  doc.add("pmax_backward", rep.pmax_backward);
  doc.add("entropy_source", rep.entropy_source);
  doc.add("entropy_target", rep.entropy_target);
  doc.add("monotones_source", rep.monotones_source);
  doc.add("monotones_target", rep.monotones_target);
  doc.add("largest_coeff_ok", nc.largest_coeff_ok);
  doc.add("smallest_coeff_ok", nc.smallest_coeff_ok);
  doc.add("entropy_ok", nc.entropy_ok);
  doc.add("marginally_isentropic", nc.marginally_isentropic);
  doc.add("incomparable", nc.incomparable);
  doc.add("passes", nc.passes);
  emit(doc, g, out);
  return kSuccess;
}

int cmd_pmax(const std::string& a, const std::string& b, std::size_t copies,
             const GlobalOptions& g, std::ostream& out) {
  const auto cfg = g.numeric();
  const auto src = load("source", a, g);
  const auto tgt = load("target", b, g);
  ReportDocument doc;
  doc.add("command", "pmax");
  add_pair(doc, src, tgt);
  doc.add("copies", copies);
  const auto single = pmax_with_witness(src, tgt, cfg);
  if (copies <= 1) {
    doc.add("pmax", single.value);
    doc.add("witness_l", single.witness);
  } else {
    const auto multi = pmax_multicopy(src, tgt, copies, cfg);
    doc.add("pmax", multi.value);
    doc.add("witness_l", multi.witness);
    doc.add("pmax_single", single.value);
    doc.add("multicopy_not_below_single", multi.value >= single.value - cfg.epsilon);
  }
  emit(doc, g, out);
  return kSuccess;
}

int cmd_catalyze(const std::string& a, const std::string& b, const std::string& c,
                 const GlobalOptions& g, std::ostream& out) {
  const auto cfg = g.numeric();
  const auto src = load("source", a, g);
  const auto tgt = load("target", b, g);
  const auto cand = load("catalyst", c, g);
  const auto v = is_catalyst(src, tgt, cand, cfg);

  ReportDocument doc;
  doc.add("command", "catalyze");
  add_pair(doc, src, tgt);
  doc.add("catalyst", as_vector(cand));
  doc.add("catalyst_dim", cand.dim());
  doc.add("is_catalyst", v.is_catalyst);
  if (v.first_violation) doc.add("first_violation", *v.first_violation);
  doc.add("bound_value", v.bound_value);
  doc.add("pmax_pair", v.pmax_pair);
  doc.add("saturated", v.saturated);
  doc.add("bound_respected", v.bound_value <= v.pmax_pair + cfg.epsilon);
  doc.add("quasi_pmax", quasi_pmax(src, tgt, cand, cfg));
  emit(doc, g, out);
  return v.is_catalyst ? kSuccess : kNegative;
}

struct SearchFlags {
  std::size_t dim = 2;
  std::string mode = "random";
  std::size_t samples = 100'000;
  double target_prob = 1.0;
  unsigned threads = 0;
};

int cmd_search(const std::string& a, const std::string& b, const SearchFlags& f,
               const GlobalOptions& g, std::ostream& out) {
  SearchConfig sc;
  sc.p = f.dim;
  sc.mode = f.mode == "exact2" ? SearchMode::Exact2 : SearchMode::Random;
  sc.sample_count = f.samples;
  sc.target_probability = f.target_prob;
  sc.numeric = g.numeric();
  sc.threads = f.threads;
  if (sc.mode == SearchMode::Exact2 && (sc.p != 2 || sc.target_probability < 1.0))
    throw Error(ErrorKind::Usage, "--mode exact2 requires --dim 2 and --target-prob 1");

  const auto src = load("source", a, g);
  const auto tgt = load("target", b, g);

  ReportDocument doc;
  doc.add("command", "search");
  add_pair(doc, src, tgt);
  doc.add("mode", f.mode);
  doc.add("dim", f.dim);
  if (sc.mode == SearchMode::Random) {
    doc.add("samples", f.samples);
    doc.add("seed", static_cast<std::int64_t>(g.seed));
    doc.add("target_probability", f.target_prob);
  }

  SearchOutcome result;
  try {
    result = search(src, tgt, sc);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotIncomparable) throw;
    doc.add("outcome", "not_incomparable");
    doc.add("reason", e.detail());
    emit(doc, g, out);
    return kNegative;
  }

  int code = kSuccess;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, outcome::Found>) {
          doc.add("outcome", "found");
          doc.add("catalyst", as_vector(r.catalyst));
          doc.add("is_catalyst", r.verdict.is_catalyst);
          doc.add("achieved_probability", r.achieved_probability);
          doc.add("bound_value", r.verdict.bound_value);
          doc.add("pmax_pair", r.verdict.pmax_pair);
          doc.add("saturated", r.verdict.saturated);
          doc.add("samples_tested", r.samples_tested);
          doc.add("samples_pruned_by_theorem1", r.samples_pruned_by_theorem1);
        } else if constexpr (std::is_same_v<T, outcome::NonExistence>) {
          doc.add("outcome", "non_existence");
          doc.add("certified", true);
          doc.add("breakpoints_examined", r.breakpoints_examined);
          doc.add("interval_count", r.feasible_intervals.size());
          code = kNegative;
        } else if constexpr (std::is_same_v<T, outcome::FoundInterval>) {
          doc.add("outcome", "found_interval");
          doc.add("breakpoints_examined", r.breakpoints_examined);
          doc.add("interval_count", r.feasible_x_intervals.size());
          for (std::size_t i = 0; i < r.feasible_x_intervals.size(); ++i) {
            const auto& iv = r.feasible_x_intervals[i];
            doc.add("interval_" + std::to_string(i + 1), std::vector<double>{iv.lo, iv.hi});
          }
        } else if constexpr (std::is_same_v<T, outcome::NotFound>) {
          doc.add("outcome", "not_found");
          doc.add("samples_tested", r.samples_tested);
          doc.add("samples_pruned_by_theorem1", r.samples_pruned_by_theorem1);
          if (!r.reason.empty()) doc.add("reason", r.reason);
          code = kNegative;
        } else {
          doc.add("outcome", "trivial_already_transformable");
        }
      },
      result);
  emit(doc, g, out);
  return code;
}

struct BoundFlags {
  std::optional<double> pmax;
  std::vector<std::string> pair;
  std::size_t dim = 2;
  double target_prob = 1.0;
};

int cmd_bound(const BoundFlags& f, const GlobalOptions& g, std::ostream& out) {
  if (f.pmax.has_value() == !f.pair.empty())
    throw Error(ErrorKind::Usage, "give exactly one of --pmax or --pair");
  ReportDocument doc;
  doc.add("command", "bound");
  double pm = 0.0;
  if (f.pmax) {
    pm = *f.pmax;
  } else {
    const auto src = load("source", f.pair[0], g);
    const auto tgt = load("target", f.pair[1], g);
    add_pair(doc, src, tgt);
    pm = pmax(src, tgt, g.numeric());
  }
  // With target probability 1 this reduces to the plain catalyst bound.
  const double scaled = corollary2_bound(pm, f.target_prob, f.dim);
  const double gamma = f.target_prob < 1.0 ? scaled / static_cast<double>(f.dim)
                                           : theorem1_bound(pm, f.dim);
  doc.add("pmax", pm);
  doc.add("dim", f.dim);
  doc.add("target_probability", f.target_prob);
  doc.add("max_scaled_smallest_coeff", scaled);
  doc.add("max_smallest_coeff", gamma);
  if (f.dim == 2) doc.add("min_largest_coeff", 1.0 - gamma);
  emit(doc, g, out);
  return kSuccess;
}

}  // namespace

std::vector<double> read_spectrum_input(const std::string& arg) {
  std::vector<double> values;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + arg + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view body = line;
      if (const auto hash = body.find('#'); hash != std::string_view::npos)
        body = body.substr(0, hash);
      body = trim(body);
      if (body.empty()) continue;
      values.push_back(parse_decimal(body, " on line " + std::to_string(line_no)));
    }
  } else {
    std::string_view rest = arg;
    std::size_t index = 0;
    while (true) {
      ++index;
      const auto comma = rest.find(',');
      values.push_back(
          parse_decimal(rest.substr(0, comma), " at position " + std::to_string(index)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "'" + arg + "' holds no coefficients");
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pure-state entanglement transformation and catalysis toolkit", "entcat"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--epsilon", g.epsilon, "Absolute comparison tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for randomized procedures");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"kv", "json"}));
  app.add_flag("--renormalize", g.renormalize, "Divide inputs by their sum");

  std::string a, b, c;
  std::size_t copies = 1;
  SearchFlags sf;
  BoundFlags bf;
  double bound_pmax = 0.0;

  auto* check = app.add_subcommand("check", "Classify a pair and screen it for catalysis");
  check->add_option("source", a)->required();
  check->add_option("target", b)->required();

  auto* pm = app.add_subcommand("pmax", "Optimal conversion probability");
  pm->add_option("source", a)->required();
  pm->add_option("target", b)->required();
  pm->add_option("--copies", copies, "Number of copies on each side")
      ->check(CLI::PositiveNumber);

  auto* cat = app.add_subcommand("catalyze", "Test a candidate catalyst");
  cat->add_option("source", a)->required();
  cat->add_option("target", b)->required();
  cat->add_option("catalyst", c)->required();

  auto* srch = app.add_subcommand("search", "Search for a catalyst");
  srch->add_option("source", a)->required();
  srch->add_option("target", b)->required();
  srch->add_option("--dim", sf.dim, "Catalyst dimension p")->check(CLI::Range(2, 1 << 20));
  srch->add_option("--mode", sf.mode, "exact2 or random")
      ->check(CLI::IsMember({"exact2", "random"}));
  srch->add_option("--samples", sf.samples, "Random samples")->check(CLI::PositiveNumber);
  srch->add_option("--target-prob", sf.target_prob, "Required conversion probability")
      ->check(CLI::Range(0.0, 1.0));
  srch->add_option("--threads", sf.threads, "Worker threads (0 = all cores)");

  auto* bnd = app.add_subcommand("bound", "Catalyst coefficient bounds");
  auto* pmax_opt = bnd->add_option("--pmax", bound_pmax, "Conversion probability of the pair");
  bnd->add_option("--pair", bf.pair, "Source and target spectra")->expected(2);
  bnd->add_option("--dim", bf.dim, "Catalyst dimension p")->check(CLI::PositiveNumber);
  bnd->add_option("--target-prob", bf.target_prob, "Required conversion probability");

  for (auto* sub : {check, pm, cat, srch, bnd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::RequiredError& e) {
    err << "error: " << e.what() << "\n";
    return app.get_subcommands().empty() ? kUsageError : kInputError;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(a, b, g, out);
    if (pm->parsed()) return cmd_pmax(a, b, copies, g, out);
    if (cat->parsed()) return cmd_catalyze(a, b, c, g, out);
    if (srch->parsed()) return cmd_search(a, b, sf, g, out);
    if (*pmax_opt) bf.pmax = bound_pmax;
    return cmd_bound(bf, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? kUsageError : kInputError;
  }
}

}  // namespace entcat::cli
