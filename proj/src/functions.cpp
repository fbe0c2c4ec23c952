#include "fourier/functions.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace fourier {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kMaxMode = 1'000'000;

// Samples used for the sup norms; Simpson panels for the L1 norm.
constexpr int kNormPanels = 4096;

double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("invalid integer '" + std::string(text) +
                                "' in " + std::string(what));
  return value;
}

Complex parse_coefficient(std::string_view text) {
  bool imaginary = false;
  if (!text.empty() && text.back() == 'i') {
    imaginary = true;
    text.remove_suffix(1);
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("invalid combo coefficient '" +
                                std::string(text) + "'");
  return imaginary ? Complex(0.0, value) : Complex(value, 0.0);
}

}  // namespace

SmoothPeriodicFunction trig_monomial(int k) {
  if (k > kMaxMode || k < -kMaxMode)
    throw std::invalid_argument("trig_monomial: |k| must be <= 10^6");
  const double kd = k;
  SmoothPeriodicFunction f;
  f.name = "trig:" + std::to_string(k);
  f.eval = [kd](double x) { return unit_phase(kd * x); };
  f.d1 = [kd](double x) { return Complex(0.0, pi * kd) * unit_phase(kd * x); };
  f.d2 = [kd](double x) { return -(pi * kd) * (pi * kd) * unit_phase(kd * x); };
  f.exact_coefficient = [k](int m) { return m == k ? Complex(2.0) : Complex(0.0); };
  f.endpoint_value = parity(k);
  f.degree = k < 0 ? -k : k;
  return f;
}

SmoothPeriodicFunction cosine(int k) {
  if (k < 1 || k > kMaxMode)
    throw std::invalid_argument("cosine: k must be in 1 .. 10^6");
  const double kd = k;
  SmoothPeriodicFunction f;
  f.name = "cos:" + std::to_string(k);
  f.eval = [kd](double x) { return Complex(cospi(kd * x)); };
  f.d1 = [kd](double x) { return Complex(-pi * kd * sinpi(kd * x)); };
  f.d2 = [kd](double x) { return Complex(-(pi * kd) * (pi * kd) * cospi(kd * x)); };
  f.exact_coefficient = [k](int m) {
    return (m == k || m == -k) ? Complex(1.0) : Complex(0.0);
  };
  f.endpoint_value = parity(k);
  f.degree = k;
  return f;
}

SmoothPeriodicFunction exp_cos() {
  SmoothPeriodicFunction f;
  f.name = "expcos";
  f.eval = [](double x) { return Complex(std::exp(cospi(x))); };
  f.d1 = [](double x) {
    return Complex(-pi * sinpi(x) * std::exp(cospi(x)));
  };
  f.d2 = [](double x) {
    const double s = sinpi(x), c = cospi(x);
    return Complex(pi * pi * (s * s - c) * std::exp(c));
  };
  f.exact_coefficient = [](int m) { return Complex(2.0 * bessel_i_series(m, 1.0)); };
  f.endpoint_value = std::exp(-1.0);
  return f;
}

SmoothPeriodicFunction constant(Complex c) {
  SmoothPeriodicFunction f;
  f.name = "constant";
  f.eval = [c](double) { return c; };
  f.d1 = [](double) { return Complex(0.0); };
  f.d2 = [](double) { return Complex(0.0); };
  f.exact_coefficient = [c](int m) { return m == 0 ? 2.0 * c : Complex(0.0); };
  f.endpoint_value = c;
  f.degree = 0;
  return f;
}

SmoothPeriodicFunction combine(
    const std::vector<std::pair<Complex, SmoothPeriodicFunction>>& terms) {
  if (terms.empty())
    throw std::invalid_argument("combine: empty list of terms");

  using Terms = std::vector<std::pair<Complex, SmoothPeriodicFunction>>;
  auto parts = std::make_shared<const Terms>(terms);

  auto lift = [parts](auto member) {
    return [parts, member](double x) {
      Complex acc = 0.0;
      for (const auto& [c, g] : *parts) acc += c * (g.*member)(x);
      return acc;
    };
  };

  SmoothPeriodicFunction f;
  f.eval = lift(&SmoothPeriodicFunction::eval);
  f.d1 = lift(&SmoothPeriodicFunction::d1);
  f.d2 = lift(&SmoothPeriodicFunction::d2);

  bool all_exact = true;
  std::optional<int> degree = 0;
  for (const auto& [c, g] : terms) {
    if (!f.name.empty()) f.name += "+";
    f.name += (c.imag() == 0.0 ? std::to_string(c.real())
                               : "(" + std::to_string(c.real()) + "," +
                                     std::to_string(c.imag()) + ")") +
              "*" + g.name;
    f.endpoint_value += c * g.endpoint_value;
    all_exact = all_exact && g.has_exact_coefficient();
    if (degree && g.degree)
      degree = std::max(*degree, *g.degree);
    else
      degree.reset();
  }
  if (all_exact) {
    f.exact_coefficient = [parts](int m) {
      Complex acc = 0.0;
      for (const auto& [c, g] : *parts) acc += c * g.exact_coefficient(m);
      return acc;
    };
  }
  f.degree = degree;
  return f;
}

double bessel_i_series(int order, double x) {
  const int k = order < 0 ? -order : order;
  double term = 1.0;
  for (int j = 1; j <= k; ++j) term *= 0.5 * x / j;
  const double quarter_x2 = 0.25 * x * x;
  double sum = term;
  for (int j = 0;; ++j) {
    term *= quarter_x2 / ((j + 1.0) * (j + 1.0 + k));
    if (term < 1e-18) break;
    sum += term;
  }
  return sum;
}

BoundConstants bound_constants(const SmoothPeriodicFunction& f) {
  return bound_constants(f, f.endpoint_value);
}

BoundConstants bound_constants(const SmoothPeriodicFunction& f, Complex offset) {
  BoundConstants bc;
  const double step = 2.0 / kNormPanels;
  double simpson = 0.0;
  for (int k = 0; k <= kNormPanels; ++k) {
    const double x = static_cast<double>(2 * k - kNormPanels) / kNormPanels;
    bc.B = std::max(bc.B, std::abs(f.eval(x) - offset));
    bc.D = std::max(bc.D, std::abs(f.d1(x)));
    const double weight = (k == 0 || k == kNormPanels) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    simpson += weight * std::abs(f.d2(x));
  }
  bc.M = simpson * step / 3.0;
  if (!std::isfinite(bc.B) || !std::isfinite(bc.D) || !std::isfinite(bc.M))
    throw std::domain_error("bound_constants: non-finite norm for '" + f.name + "'");
  bc.W = bc.M + 2.0 * bc.B + 5.0 * bc.D;
  bc.H = bc.W / 4.0;
  return bc;
}

SmoothPeriodicFunction parse_function(std::string_view name) {
  if (name == "expcos") return exp_cos();
  if (name.starts_with("trig:")) return trig_monomial(parse_int(name.substr(5), name));
  if (name.starts_with("cos:")) return cosine(parse_int(name.substr(4), name));
  if (name.starts_with("combo:")) {
    std::string_view rest = name.substr(6);
    std::vector<std::pair<Complex, SmoothPeriodicFunction>> terms;
    for (bool more = true; more;) {
      const auto plus = rest.find('+');
      const std::string_view term = rest.substr(0, plus);
      more = plus != std::string_view::npos;
      if (more) rest = rest.substr(plus + 1);
      const auto star = term.find('*');
      if (star == std::string_view::npos)
        throw std::invalid_argument("combo term '" + std::string(term) +
                                    "' must look like <coef>*<name>");
      const std::string_view inner = term.substr(star + 1);
      if (inner.starts_with("combo:"))
        throw std::invalid_argument("combo terms cannot nest");
      terms.emplace_back(parse_coefficient(term.substr(0, star)), parse_function(inner));
    }
    auto f = combine(terms);
    f.name = std::string(name);
    return f;
  }
  throw std::invalid_argument("unknown function '" + std::string(name) + "'");
}

const std::vector<std::string>& standard_catalog() {
  static const std::vector<std::string> names = {
      "trig:0", "trig:1", "trig:-2", "trig:3", "cos:1", "cos:2", "expcos",
      "combo:1*cos:1+1*trig:0",
      "combo:0.5*trig:0+-0.5*cos:2",
      "combo:1*expcos+-0.36787944117144233*trig:0",
  };
  return names;
}

const std::vector<std::string>& zero_endpoint_catalog() {
  static const std::vector<std::string> names = {
      "combo:1*cos:1+1*trig:0",
      "combo:0.5*trig:0+-0.5*cos:2",
      "combo:1*expcos+-0.36787944117144233*trig:0",
  };
  return names;
}

}  // namespace fourier
