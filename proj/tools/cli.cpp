#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourier/continuous_fourier.hpp"

namespace fourier::cli {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) parts.push_back(current);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("invalid " + what + " '" + text + "'");
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> values;
  for (const std::string& part : split(text)) values.push_back(parse_number<T>(part, what));
  return values;
}

std::size_t workers_from_environment() {
  const char* raw = std::getenv("FOURIER_WORKERS");
  if (raw == nullptr) return 0;
  const long long n = parse_number<long long>(raw, "FOURIER_WORKERS value");
  if (n < 1) throw std::invalid_argument("FOURIER_WORKERS must be a positive integer");
  return static_cast<std::size_t>(n);
}

ordered_json optional_json(const auto& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

// Writes to --out when given, otherwise to the command's stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

struct VerifyArgs {
  std::string functions = "cos:1,trig:1,trig:3,expcos";
  std::string grid_sizes = "4,16,64,256";
  int mode_limit = 32;
  std::string epsilons = "0.1,0.01";
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  std::vector<std::string> tolerances;
};

struct ConvergeArgs {
  std::string function;
  std::string orders = "1,2,4,8,16,32";
  int samples = 2048;
  std::string out;
};

struct SpectrumArgs {
  std::string function;
  int n = 64;
  std::string out;
};

struct RescaleArgs {
  double a = 0.0;
  double b = 0.0;
  std::string function = "cos-period";
  int N = 16;
  std::string out;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.function_names = split(args.functions);
  cfg.grid_sizes = parse_list<int>(args.grid_sizes, "grid size");
  cfg.mode_limit = args.mode_limit;
  cfg.epsilons = parse_list<double>(args.epsilons, "epsilon");
  cfg.seed = args.seed;
  for (const std::string& entry : args.tolerances) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("tolerance override must be name=value, got '" + entry + "'");
    cfg.tolerance_overrides[entry.substr(0, eq)] =
        parse_number<double>(entry.substr(eq + 1), "tolerance");
  }
  cfg.workers = workers_from_environment();

  const std::vector<LemmaReport> reports = run_lemma_suite(cfg);
  emit(args.out, reports_to_json(reports), out);
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const LemmaReport& r) { return !r.passed; });
  if (failed > 0) {
    err << failed << " of " << reports.size() << " checks failed\n";
    return kCheckFailed;
  }
  return kSuccess;
}

int cmd_converge(const ConvergeArgs& args, std::ostream& out) {
  workers_from_environment();
  const auto rows =
      run_convergence(args.function, parse_list<int>(args.orders, "N"), args.samples);
  std::string csv = "N,sup_error,m_test_bound\n";
  for (const ConvergenceRow& r : rows)
    csv += std::to_string(r.N) + "," + format_double(r.sup_error) + "," +
           format_double(r.m_test_bound) + "\n";
  emit(args.out, csv, out);
  return kSuccess;
}

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  workers_from_environment();
  if (args.n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(args.n));
  std::string csv = "m,abs_coeff,decay_bound\n";
  for (const DecayRow& r : run_spectrum_decay(args.function, args.n))
    csv += std::to_string(r.m) + "," + format_double(r.abs_coeff) + "," +
           format_double(r.decay_bound) + "\n";
  emit(args.out, csv, out);
  return kSuccess;
}

int cmd_rescale_demo(const RescaleArgs& args, std::ostream& out) {
  workers_from_environment();
  if (!(args.b > args.a))
    throw std::invalid_argument("need b > a (got a=" + format_double(args.a) +
                                ", b=" + format_double(args.b) + ")");
  if (args.N < 0) throw std::invalid_argument("N must be >= 0");
  const IntervalFunction f = interval_function(args.function, args.a, args.b);
  const RescaledFunction r = rescale(f, args.a, args.b);
  constexpr int kIntervals = 256;
  std::string csv = "x,f,reconstruction,abs_error\n";
  for (int k = 0; k <= kIntervals; ++k) {
    const double x =
        k == kIntervals ? args.b : args.a + (args.b - args.a) * k / kIntervals;
    const Complex fx = f.eval(x);
    const Complex sx = r.reconstruct(args.N, x);
    csv += format_double(x) + "," + format_double(fx.real()) + "," +
           format_double(sx.real()) + "," + format_double(std::abs(fx - sx)) + "\n";
  }
  emit(args.out, csv, out);
  return kSuccess;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string reports_to_json(const std::vector<LemmaReport>& reports) {
  ordered_json list = ordered_json::array();
  for (const LemmaReport& r : reports) {
    ordered_json loc;
    loc["function"] = r.worst_location.function.empty()
                          ? ordered_json(nullptr)
                          : ordered_json(r.worst_location.function);
    loc["n"] = optional_json(r.worst_location.n);
    loc["m"] = optional_json(r.worst_location.m);
    loc["x"] = optional_json(r.worst_location.x);
    ordered_json entry;
    entry["check_name"] = r.check_name;
    entry["status"] = r.passed ? "pass" : "fail";
    // JSON has no infinity; an unreachable check reports its residual as text.
    entry["worst_residual"] = std::isfinite(r.worst_residual)
                                  ? ordered_json(r.worst_residual)
                                  : ordered_json(format_double(r.worst_residual));
    entry["worst_location"] = loc;
    entry["tolerance_used"] = r.tolerance_used;
    list.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["schema"] = 1;
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-grid Fourier analysis: verification suite and data tables", "fourier"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run every check and print a JSON report");
  v->add_option("--functions", verify.functions, "comma-separated function names");
  v->add_option("--grid-sizes", verify.grid_sizes, "comma-separated grid sizes n");
  v->add_option("--mode-limit", verify.mode_limit, "largest |m| for coefficient convergence");
  v->add_option("--epsilons", verify.epsilons, "comma-separated tail thresholds");
  v->add_option("--seed", verify.seed, "seed for random grid functions");
  v->add_option("--out", verify.out, "output path (default stdout)");
  v->add_option("--format", verify.format, "output format")->check(CLI::IsMember({"json"}));
  v->add_option("--tolerance", verify.tolerances, "override as name=value (repeatable)")
      ->allow_extra_args(false);

  ConvergeArgs converge;
  auto* c = app.add_subcommand("converge", "sup-norm truncation error against the M-test bound");
  c->add_option("--function", converge.function, "function name")->required();
  c->add_option("--N", converge.orders, "comma-separated truncation orders");
  c->add_option("--samples", converge.samples, "sample intervals on [-1, 1]");
  c->add_option("--out", converge.out, "output path (default stdout)");

  SpectrumArgs spectrum;
  auto* s = app.add_subcommand("spectrum", "coefficient magnitudes against H/m^2");
  s->add_option("--function", spectrum.function, "function name")->required();
  s->add_option("--n", spectrum.n, "grid size");
  s->add_option("--out", spectrum.out, "output path (default stdout)");

  RescaleArgs rescale_args;
  auto* r = app.add_subcommand("rescale-demo", "series reconstruction on a general interval");
  r->add_option("--a", rescale_args.a, "left end")->required();
  r->add_option("--b", rescale_args.b, "right end")->required();
  r->add_option("--function", rescale_args.function, "cos-period or exp-cos-period");
  r->add_option("--N", rescale_args.N, "truncation order");
  r->add_option("--out", rescale_args.out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (c->parsed()) return cmd_converge(converge, out);
    if (s->parsed()) return cmd_spectrum(spectrum, out);
    return cmd_rescale_demo(rescale_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace fourier::cli
