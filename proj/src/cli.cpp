#include "qdisc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "qdisc/analytic.hpp"
#include "qdisc/output.hpp"
#include "qdisc/verify.hpp"

namespace qdisc {

namespace {

// Thrown for bad flag values; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_decimal(const std::string& flag, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [end, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || end != last || first == last || !std::isfinite(value))
    throw UsageError(flag + ": expected a decimal number, got '" + text + "'");
  return value;
}

std::size_t parse_count(const std::string& flag, const std::string& text) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty() || value == 0)
    throw UsageError(flag + ": expected a positive integer, got '" + text + "'");
  return value;
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
    throw UsageError("--seed: expected a non-negative integer, got '" + text + "'");
  return value;
}

// Wraps the domain constructors so their messages name the flag.
template <class F>
auto checked(const std::string& flag, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// pi/4 written to ten decimals (0.7853981634) lies just above pi/4; inputs
// within this distance are read as pi/4. Anything further out is rejected.
constexpr double kQuarterPiInputSlack = 1e-9;

AccelerationParam parse_acceleration(const std::string& flag, const std::string& text) {
  double r = parse_decimal(flag, text);
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  if (r > quarter_pi && r <= quarter_pi + kQuarterPiInputSlack) r = quarter_pi;
  return checked(flag, [&] { return AccelerationParam::from_radians(r); });
}

std::vector<RegionPair> parse_pairs(const std::string& text) {
  std::vector<RegionPair> pairs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    pairs.push_back(checked("--pairs", [&] { return parse_region_pair(item); }));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

struct ComputeFlags {
  std::string p;
  std::string ra = "0";
  std::string rb = "0";
  std::string channel = "none";
  std::string k = "0";
  std::string pair = "I-I";
  std::string order = "before-unruh";
  std::string format = "json";
};

struct SweepFlags {
  std::string channel = "none";
  std::vector<std::string> p;
  std::string p_steps = "101";
  std::string k;
  std::string k_steps = "101";
  std::string r_steps = "101";
  std::string pairs = "I-I,I-II,II-I,II-II";
  std::string order = "before-unruh";
  std::string out;
};

struct VerifyFlags {
  std::string grid = "coarse";
  std::string seed = "42";
};

int cmd_compute(const ComputeFlags& f, std::ostream& out) {
  ScenarioParams params;
  params.p = checked("--p", [&] { return WernerParam(parse_decimal("--p", f.p)); });
  params.ra = parse_acceleration("--ra", f.ra);
  params.rb = parse_acceleration("--rb", f.rb);
  params.channel = checked("--channel", [&] { return parse_channel_kind(f.channel); });
  params.k = checked("--k", [&] { return DecayProbability(parse_decimal("--k", f.k)); });
  params.pair = checked("--pair", [&] { return parse_region_pair(f.pair); });
  params.order = checked("--noise-order", [&] { return parse_noise_order(f.order); });
  if (f.format != "json" && f.format != "csv")
    throw UsageError("--format: expected json or csv, got '" + f.format + "'");

  const ScenarioResult res = evaluate_scenario(params);
  DiscrepancyRecord record{params, res.d_closed, res.breakdown.value,
                           std::abs(res.d_closed - res.breakdown.value), res.branch.ok};
  const OutputRow row = to_output_row(record);
  const auto coeffs = res.reduced.coefficients();

  if (f.format == "csv") {
    out << sweep_csv_header() << ",x_norm_sq,t_norm_sq,lambda_max";
    for (const char* side : {"x", "y"})
      for (int i = 1; i <= 3; ++i) out << ',' << side << i;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) out << ",t" << i << j;
    out << '\n' << to_csv_line(row);
    for (double v : {res.breakdown.x_norm_sq, res.breakdown.t_norm_sq, res.breakdown.lambda_max})
      out << ',' << format_real(v);
    for (double v : coeffs) out << ',' << format_real(v);
    out << '\n';
    return kExitOk;
  }

  auto real = [](double v) { return round_to_output_precision(v); };
  auto slice = [&](std::size_t from, std::size_t count) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = from; i < from + count; ++i) arr.push_back(real(coeffs[i]));
    return arr;
  };
  nlohmann::ordered_json doc;
  doc["channel"] = row.channel;
  doc["p"] = real(row.p);
  doc["k"] = real(row.k);
  doc["r_a"] = real(row.r_a);
  doc["r_b"] = real(row.r_b);
  doc["pair"] = row.pair;
  doc["d_numeric"] = real(row.d_numeric);
  doc["d_closed_form"] = real(row.d_closed_form);
  doc["branch_ok"] = row.branch_ok ? 1 : 0;
  doc["x_norm_sq"] = real(res.breakdown.x_norm_sq);
  doc["t_norm_sq"] = real(res.breakdown.t_norm_sq);
  doc["lambda_max"] = real(res.breakdown.lambda_max);
  doc["bloch"] = {{"x", slice(0, 3)}, {"y", slice(3, 3)}, {"t", slice(6, 9)}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepFlags& f, bool k_given, bool k_steps_given, bool p_steps_given,
              std::ostream& out) {
  if (k_given && k_steps_given) throw UsageError("--k and --k-steps are mutually exclusive");
  if (!f.p.empty() && p_steps_given) throw UsageError("--p and --p-steps are mutually exclusive");

  GridValues grid;
  grid.channel = checked("--channel", [&] { return parse_channel_kind(f.channel); });
  grid.order = checked("--noise-order", [&] { return parse_noise_order(f.order); });
  grid.pairs = parse_pairs(f.pairs);

  GridSpec defaults;
  if (f.p.empty()) {
    defaults.p.steps = parse_count("--p-steps", f.p_steps);
    grid.p = defaults.p.values();
  } else {
    for (const auto& text : f.p) {
      const double p = parse_decimal("--p", text);
      checked("--p", [&] { return WernerParam(p); });
      grid.p.push_back(p);
    }
    std::sort(grid.p.begin(), grid.p.end());
    grid.p.erase(std::unique(grid.p.begin(), grid.p.end()), grid.p.end());
  }

  if (grid.channel == ChannelKind::kNone) {
    grid.k = {0.0};
  } else if (k_given) {
    const double k = parse_decimal("--k", f.k);
    checked("--k", [&] { return DecayProbability(k); });
    grid.k = {k};
  } else {
    defaults.k.steps = parse_count("--k-steps", f.k_steps);
    grid.k = defaults.k.values();
  }

  defaults.r.steps = parse_count("--r-steps", f.r_steps);
  grid.r = defaults.r.values();

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("--out: cannot open '" + f.out + "' for writing");
  }
  std::ostream& sink = f.out.empty() ? out : file;
  write_sweep_csv(discrepancy_map(grid), sink);
  sink.flush();
  if (!sink) throw UsageError("--out: write to '" + f.out + "' failed");
  return kExitOk;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  VerifyOptions options;
  options.grid = checked("--grid", [&] { return parse_grid_resolution(f.grid); });
  options.seed = parse_seed(f.seed);
  const VerifyReport report = run_verification(options);
  print_report(report, options, out);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric discord of Werner states under the Unruh effect and local noise", "qdisc"};
  app.require_subcommand(1);

  ComputeFlags compute;
  auto* c = app.add_subcommand("compute", "Discord of a single parameter point");
  c->add_option("--p", compute.p, "Werner parameter in [-1, 1]")->required();
  c->add_option("--ra", compute.ra, "Alice's acceleration parameter, radians in [0, pi/4]");
  c->add_option("--rb", compute.rb, "Bob's acceleration parameter, radians in [0, pi/4]");
  c->add_option("--channel", compute.channel, "none, phase-damping, phase-flip or bit-flip");
  c->add_option("--k", compute.k, "Decay probability in [0, 1]");
  c->add_option("--pair", compute.pair, "I-I, I-II, II-I or II-II");
  c->add_option("--noise-order", compute.order, "before-unruh or after-unruh");
  c->add_option("--format", compute.format, "json or csv");

  SweepFlags sweep;
  auto* s = app.add_subcommand("sweep", "CSV sweep over p, k and r (r_a = r_b = r)");
  s->add_option("--channel", sweep.channel, "none, phase-damping, phase-flip or bit-flip");
  s->add_option("--p", sweep.p, "Werner parameter (repeatable)")->take_all();
  auto* p_steps = s->add_option("--p-steps", sweep.p_steps, "p points in [1/2, 1] when --p is absent");
  auto* k_opt = s->add_option("--k", sweep.k, "Fixed decay probability");
  auto* k_steps = s->add_option("--k-steps", sweep.k_steps, "k points in [0, 1]");
  s->add_option("--r-steps", sweep.r_steps, "r points in [0, pi/4]");
  s->add_option("--pairs", sweep.pairs, "Comma-separated region pairs");
  s->add_option("--noise-order", sweep.order, "before-unruh or after-unruh");
  s->add_option("--out", sweep.out, "Output file (default stdout)");

  VerifyFlags verify;
  auto* v = app.add_subcommand("verify", "Run the property and acceptance suites");
  v->add_option("--grid", verify.grid, "coarse or fine");
  v->add_option("--seed", verify.seed, "Seed for the random-state suites");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "qdisc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*s) return cmd_sweep(sweep, k_opt->count() > 0, k_steps->count() > 0, p_steps->count() > 0, out);
    return cmd_verify(verify, out);
  } catch (const UsageError& e) {
    err << "qdisc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qdisc: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qdisc
