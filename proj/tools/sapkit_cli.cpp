// sapkit: spectra, approximation, and verification for semi-almost periodic
// boundary models. See README for the file formats.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sapkit/bochner_fejer.hpp"
#include "sapkit/errors.hpp"
#include "sapkit/holo_sap.hpp"
#include "sapkit/parallel.hpp"
#include "sapkit/serialization.hpp"
#include "sapkit/svg.hpp"

namespace {

using namespace sapkit;

constexpr double kPi = std::numbers::pi;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_candidates(const std::string& spec) {
  if (spec.rfind("lattice:", 0) == 0) {
    double start = 0.0, step = 0.0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec.substr(8));
    if (!(in >> start >> c1 >> step >> c2 >> count) || c1 != ':' || c2 != ':' || count <= 0)
      throw UsageError("bad lattice spec, expected lattice:start:step:count");
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = start + step * i;
    return out;
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open candidates file " + spec);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (out.empty()) throw UsageError("empty candidates file " + spec);
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

bool wants_csv(const std::string& out_path) {
  return out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv";
}

SAPModel load_model(const std::string& path) { return model_from_json(load_json_file(path)); }

// Shared per-command inputs.
struct CommonOpts {
  std::string model_path, samples_path, out_path, plot_path;
  double point = 0.0;
  int side = 1;
  double window_T = -1.0, window_offset = -1.0;
  double threshold = 1e-2;
  double epsilon = 1e-3;

  OneSidedConfig one_sided() const {
    OneSidedConfig cfg;
    if (window_T > 0.0) cfg.window = window_T;
    if (window_offset > 0.0) cfg.offset = window_offset;
    cfg.validate();
    return cfg;
  }
};

int cmd_spectrum(const CommonOpts& o, const std::string& candidates_spec) {
  std::vector<double> candidates = parse_candidates(candidates_spec);
  std::unique_ptr<CircleFunction> fn;
  if (!o.model_path.empty()) {
    fn = std::make_unique<SAPModel>(load_model(o.model_path));
  } else if (!o.samples_path.empty()) {
    ContinuousPart cont;
    cont.samples = load_boundary_csv(o.samples_path);
    fn = std::make_unique<CallableCircleFunction>(
        [cont](double angle) { return cont.eval(angle); });
  } else {
    throw UsageError("spectrum needs --model or --samples");
  }

  const BoundaryPoint s = BoundaryPoint::from_angle(o.point);
  auto lines = spectrum_scan(*fn, s, o.side, candidates, o.one_sided(), o.threshold);

  if (wants_csv(o.out_path)) {
    std::ostringstream csv;
    csv.precision(12);
    csv << "lambda,abs,re,im\n";
    for (const auto& l : lines)
      csv << l.lambda << "," << std::abs(l.coeff) << "," << l.coeff.real() << ","
          << l.coeff.imag() << "\n";
    emit(o.out_path, csv.str());
  } else {
    Json j;
    j["point"] = s.angle;
    j["side"] = o.side;
    j["lines"] = Json::array();
    for (const auto& l : lines)
      j["lines"].push_back(Json{{"lambda", l.lambda},
                                {"abs", std::abs(l.coeff)},
                                {"re", l.coeff.real()},
                                {"im", l.coeff.imag()}});
    emit(o.out_path, canonical_dump(j));
  }
  return kExitPass;
}

int cmd_approx(const CommonOpts& o) {
  if (o.model_path.empty()) throw UsageError("approx needs --model (exponential sum file)");
  ExponentialSum f = exp_sum_from_json(load_json_file(o.model_path));

  std::vector<ApproxStep> trace;
  auto [spec, tf] = bf_approximate(f, o.epsilon, &trace);

  std::ostringstream csv;
  csv.precision(12);
  csv << "m,orders,sup_error\n";
  for (const auto& step : trace) {
    csv << step.m << ",";
    for (std::size_t j = 0; j < step.orders.size(); ++j)
      csv << (j ? " " : "") << step.orders[j];
    csv << "," << step.sup_error << "\n";
  }
  emit(o.out_path, csv.str());

  if (!o.plot_path.empty()) {
    PlotSpec plot;
    plot.title = "Bochner-Fejer approximation error";
    plot.x_label = "kernel scale m";
    plot.y_label = "sup |Tf - f|";
    plot.log_y = true;
    PlotSeries series;
    series.label = "grid sup";
    for (const auto& step : trace)
      series.points.emplace_back(static_cast<double>(step.m), step.sup_error);
    plot.series.push_back(series);
    write_text_file(o.plot_path, render_svg(plot));
  }
  return kExitPass;
}

int cmd_profile(const CommonOpts& o) {
  if (o.model_path.empty()) throw UsageError("profile needs --model");
  SAPModel m = load_model(o.model_path);
  const BoundaryPoint s = BoundaryPoint::from_angle(o.point);
  SingularProfile p = m.extract_profile(s);

  Json j;
  j["point"] = s.angle;
  j["holomorphic"] = p.holomorphic;
  if (p.holomorphic) j["strip_terms"] = terms_to_json(p.strip_sum);
  j["side_plus"] = terms_to_json(p.side(+1));
  j["side_minus"] = terms_to_json(p.side(-1));
  emit(o.out_path, canonical_dump(j));
  return kExitPass;
}

int cmd_construct(const CommonOpts& o, double lambda, int count) {
  if (count <= 0) throw UsageError("construct needs a positive --count");
  const BoundaryPoint s = BoundaryPoint::from_angle(o.point);
  GeneratorFunction g(s, lambda);

  std::vector<std::pair<double, Complex>> samples(count);
  for (int i = 0; i < count; ++i) {
    double angle = 2.0 * kPi * i / count;
    samples[i] = {angle, std::abs(angle - s.angle) < 1e-12 ? Complex(0.0)
                                                           : g.eval(angle)};
  }
  emit(o.out_path, boundary_csv(samples));

  if (!o.plot_path.empty()) {
    PlotSpec plot;
    plot.title = "generator boundary values";
    plot.x_label = "angle";
    plot.y_label = "value";
    PlotSeries re{"Re", "#1f6fb2", {}}, im{"Im", "#b23a1f", {}};
    for (const auto& [angle, v] : samples) {
      re.points.emplace_back(angle, v.real());
      im.points.emplace_back(angle, v.imag());
    }
    plot.series = {re, im};
    write_text_file(o.plot_path, render_svg(plot));
  }
  return kExitPass;
}

int cmd_extend(const CommonOpts& o, double radius) {
  if (o.model_path.empty()) throw UsageError("extend needs --model");
  if (!(radius >= 0.0 && radius < 1.0)) throw UsageError("--radius must lie in [0, 1)");
  SAPModel m = load_model(o.model_path);
  const Complex z = std::polar(radius, o.point);
  const Complex v = m.eval_interior(z);

  Json j;
  j["z"] = Json{{"re", z.real()}, {"im", z.imag()}};
  j["value"] = Json{{"re", v.real()}, {"im", v.imag()}};
  if (radius <= 0.95) {
    const std::size_t n = 8192;
    std::vector<Complex> trace(n);
    for (std::size_t i = 0; i < n; ++i) {
      double angle = 2.0 * kPi * static_cast<double>(i) / n;
      try {
        trace[i] = m.eval(angle);
      } catch (const singular_point&) {
        trace[i] = m.eval(angle + 1e-7);
      }
    }
    Complex p = poisson_extend(trace, z);
    j["poisson"] = Json{{"re", p.real()}, {"im", p.imag()},
                        {"difference", std::abs(p - v)}};
  }
  emit(o.out_path, canonical_dump(j));
  return kExitPass;
}

// -------- verify --------

Json residuals_placeholder() { return Json::object(); }

int cmd_verify(const CommonOpts& o, const std::string& check, double lambda,
               const std::string& c_text) {
  Json report;
  report["check"] = check;
  Json inputs;
  Json residuals = residuals_placeholder();
  bool pass = false;

  if (check == "prop34" || check == "half_shift" || check == "tangential" ||
      check == "sigma") {
    if (o.model_path.empty()) throw UsageError("verify --check " + check + " needs --model");
  }

  if (check == "prop34") {
    SAPModel m = load_model(o.model_path);
    const BoundaryPoint s = BoundaryPoint::from_angle(o.point);
    SingularProfile p = m.extract_profile(s);
    if (!p.holomorphic) throw UsageError("prop34 needs a holomorphic profile at --point");
    inputs = Json{{"model", o.model_path}, {"point", s.angle}};
    double tol = o.threshold > 0.0 ? o.threshold : 5e-2;
    Prop34Report r = prop34_check(p.strip_sum, s, o.one_sided(), tol);
    residuals["max_relative_residual"] = r.max_relative_residual;
    residuals["exact_identity_residual"] = r.exact_identity_residual;
    pass = r.pass;
  } else if (check == "half_shift") {
    SAPModel m = load_model(o.model_path);
    const BoundaryPoint s = BoundaryPoint::from_angle(o.point);
    SingularProfile p = m.extract_profile(s);
    if (!p.holomorphic) throw UsageError("half_shift needs a holomorphic profile at --point");
    inputs = Json{{"model", o.model_path}, {"point", s.angle}};
    HalfShiftReport r = half_shift_check(p.strip_sum, s, {1e-1, 1e-2, 1e-3});
    Json devs = Json::array();
    for (const auto& l : r.lines) devs.push_back(l.deviation);
    residuals["deviations"] = devs;
    pass = r.strictly_decreasing && r.last_deviation < o.threshold;
  } else if (check == "tangential") {
    SAPModel m = load_model(o.model_path);
    const BoundaryPoint s0 = BoundaryPoint::from_angle(o.point);
    inputs = Json{{"model", o.model_path}, {"point", s0.angle}};
    // |z_n - s_n| / |s0 - s_n| ~ 1/n while s_n -> s0: the tangential condition
    std::vector<std::pair<Complex, double>> seq;
    for (int n = 1; n <= 1000; n *= 2) {
      const double d = 0.5 / n;
      const double angle = s0.angle + d;
      seq.emplace_back((1.0 - d / n) * std::polar(1.0, angle), angle);
    }
    {
      const double d = 0.5 / 1000.0;
      const double angle = s0.angle + d;
      seq.emplace_back((1.0 - d / 1000.0) * std::polar(1.0, angle), angle);
    }
    TangentialReport r = tangential_check(m, s0, seq, o.threshold);
    residuals["last_difference"] = r.last_difference;
    residuals["condition_satisfied"] = r.condition_satisfied;
    pass = r.pass;
  } else if (check == "binomial") {
    if (c_text.empty()) throw UsageError("verify --check binomial needs --c re,im");
    double cre = 0.0, cim = 0.0;
    char comma = 0;
    std::istringstream in(c_text);
    if (!(in >> cre >> comma >> cim) || comma != ',')
      throw UsageError("--c must be re,im");
    ExpBinomial b{lambda, Complex(cre, cim)};
    b.validate();
    inputs = Json{{"lambda", lambda}, {"c_re", cre}, {"c_im", cim}};
    InvertibilityVerdict v = binomial_invertible(b);
    double inf = binomial_strip_infimum(b, 600, 300);
    residuals["strip_infimum"] = inf;
    residuals["analytic_invertible"] = v.analytic_invertible;
    pass = v.analytic_invertible;
  } else if (check == "sigma") {
    SAPModel m = load_model(o.model_path);
    inputs = Json{{"model", o.model_path}};
    SigmaReport r = validate_sigma(m);
    Json entries = Json::array();
    for (const auto& e : r.entries)
      entries.push_back(Json{{"singularity", e.singularity_index},
                             {"side", e.k},
                             {"lambda", e.lambda.value()},
                             {"verdict", to_string(e.verdict)}});
    residuals["entries"] = entries;
    pass = r.pass;
  } else {
    throw UsageError("unknown check: " + check);
  }

  report["inputs"] = inputs;
  report["residuals"] = residuals;
  report["pass"] = pass;
  emit(o.out_path, canonical_dump(report));
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  sapkit::apply_thread_cap();

  CLI::App app{"sapkit: semi-almost periodic boundary analysis"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string candidates_spec, check_name, c_text;
  double lambda = 0.0, radius = 0.9;
  int count = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", o.model_path, "model or exponential-sum JSON file");
    sub->add_option("--samples", o.samples_path, "boundary sample CSV file");
    sub->add_option("--point", o.point, "boundary angle of s");
    sub->add_option("--side", o.side, "arc side, +1 or -1")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--window-T", o.window_T, "one-sided window length");
    sub->add_option("--window-offset", o.window_offset, "one-sided window offset");
    sub->add_option("--threshold", o.threshold, "detection / pass threshold");
    sub->add_option("--epsilon", o.epsilon, "approximation target");
    sub->add_option("--out", o.out_path, "output file (stdout if omitted)");
    sub->add_option("--plot", o.plot_path, "SVG plot output file");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "one-sided spectrum scan");
  add_common(spectrum);
  spectrum->add_option("--candidates", candidates_spec,
                       "file of frequencies, or lattice:start:step:count")
      ->required();

  CLI::App* approx = app.add_subcommand("approx", "finite-rank approximation trace");
  add_common(approx);

  CLI::App* profile = app.add_subcommand("profile", "extract the profile at a point");
  add_common(profile);

  CLI::App* construct = app.add_subcommand("construct", "sample a generator on the circle");
  add_common(construct);
  construct->add_option("--lambda", lambda, "generator exponent");
  construct->add_option("--count", count, "number of boundary samples")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a named check, exit 0/1");
  add_common(verify);
  verify->add_option("--check", check_name,
                     "prop34 | half_shift | tangential | binomial | sigma")
      ->required();
  verify->add_option("--lambda", lambda, "binomial exponent");
  verify->add_option("--c", c_text, "binomial constant, re,im");

  CLI::App* extend = app.add_subcommand("extend", "evaluate the harmonic extension");
  add_common(extend);
  extend->add_option("--radius", radius, "|z| of the evaluation point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, candidates_spec);
    if (approx->parsed()) return cmd_approx(o);
    if (profile->parsed()) return cmd_profile(o);
    if (construct->parsed()) return cmd_construct(o, lambda, count);
    if (verify->parsed()) return cmd_verify(o, check_name, lambda, c_text);
    if (extend->parsed()) return cmd_extend(o, radius);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sapkit::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitParse;
}
