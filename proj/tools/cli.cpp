#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mcmullen/error.hpp"
#include "mcmullen/render.hpp"
#include "mcmullen/solvers.hpp"
#include "mcmullen/spine.hpp"
#include "mcmullen/verify.hpp"

namespace mcmullen::cli {

namespace {

// Bad flag values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError(flag + ": expected a decimal number, got '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag, std::size_t count) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_real(part, flag));
  if (out.size() != count || (!text.empty() && text.back() == ',')) {
    throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated numbers");
  }
  return out;
}

Complex parse_complex(const std::string& text, const std::string& flag) {
  auto v = parse_list(text, flag, 2);
  return {v[0], v[1]};
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Flags shared by all subcommands, stored as raw text until needed.
struct Flags {
  std::optional<int> n;
  std::string c, a, t, slice, view, size, out, check, eps;
  std::optional<int> samples, max_iter, threads, k;
  CLI::App* app = nullptr;

  bool has(const std::string& name) const { return app->count("--" + name) > 0; }
  int need_n() const {
    if (!n) throw UsageError("--n is required");
    return *n;
  }
  Complex need_complex(const std::string& name, const std::string& value) const {
    if (!has(name)) throw UsageError("--" + name + " is required");
    return parse_complex(value, "--" + name);
  }
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "map degree");
  sub->add_option("--out", f.out, "output path (stdout if omitted, except render)");
  sub->add_option("--threads", f.threads, "worker threads (0 = all)");
}

// Opens --out or falls back to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw IoError("failed writing output file");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_render(const Flags& f, std::ostream& out) {
  const int n = f.need_n();
  if (!f.has("slice")) throw UsageError("--slice is required");
  if (!f.has("view")) throw UsageError("--view is required");
  if (!f.has("size")) throw UsageError("--size is required");
  if (!f.has("out")) throw UsageError("--out is required");

  SliceSpec slice = FixedC{0.0};
  if (f.slice == "fixed-c") {
    slice = FixedC{f.need_complex("c", f.c)};
  } else if (f.slice == "fixed-a") {
    slice = FixedA{f.need_complex("a", f.a)};
  } else if (f.slice == "diagonal") {
    slice = Diagonal{f.need_complex("t", f.t)};
  } else if (f.slice == "dynamical") {
    slice = Dynamical{MapParams(n, f.need_complex("a", f.a), f.need_complex("c", f.c))};
  } else {
    throw UsageError("--slice must be fixed-c, fixed-a, diagonal or dynamical");
  }

  const auto v = parse_list(f.view, "--view", 4);
  const auto x = f.size.find('x');
  if (x == std::string::npos) throw UsageError("--size must look like WxH");
  const double w = parse_real(f.size.substr(0, x), "--size");
  const double h = parse_real(f.size.substr(x + 1), "--size");
  if (w != std::floor(w) || h != std::floor(h) || w < 1 || h < 1 || w > 1e5 || h > 1e5)
    throw UsageError("--size must hold positive integers");
  const Viewport vp(v[0], v[1], v[2], v[3], static_cast<int>(w), static_cast<int>(h));

  RenderConfig cfg;
  if (f.max_iter) cfg.max_iter = *f.max_iter;
  if (f.threads) cfg.threads = *f.threads;

  const auto start = std::chrono::steady_clock::now();
  const Image img = render_slice(n, slice, vp, cfg);
  write_ppm(f.out, img);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto bounded = std::count(img.pixels.begin(), img.pixels.end(), cfg.bounded_color);
  char line[160];
  std::snprintf(line, sizeof line, "pixels=%zu bounded=%ld elapsed=%.3fs", img.pixels.size(),
                static_cast<long>(bounded), elapsed);
  out << line << "\n";
  return kExitOk;
}

bool is_real(Complex z) { return z.imag() == 0.0; }

// Main Theorem 1 hypotheses on (n, c).
bool large_c_ok(int n, Complex c) {
  return std::abs(c) >= 6.0 && 4.0 * std::abs(c) + 8.0 <= std::ldexp(1.0, n + 1);
}

// Refuses containment parameters outside every statement that asserts it.
void gate_containment(int n, Complex a, Complex c, int k, double eps) {
  const MapParams p(n, a, c);
  const double s = escape_radius(p);
  if (is_real(c) && c.real() > 0 && n % 2 == 1 && k == n && std::abs(a) <= 4.0 &&
      c.real() < std::pow(std::abs(a), 1.0 / n) / s) {
    return;
  }
  if (is_real(c) && c.real() < -1.0 - eps && k == 0 && 6.0 * std::abs(c) + 4.0 < std::ldexp(1.0, n + 1) &&
      polar_contains(l_c_rect(c, eps), a)) {
    return;
  }
  if (large_c_ok(n, c)) {
    for (const auto& w : fixed_critical_params(n, c)) {
      if (w_region_contains(w, a) && principal_index(w, a) == k) return;
    }
  }
  throw HypothesisError("containment is only asserted for the small-c odd case (k = n), "
                        "the c < -1 case (k = 0, a in L_c) or a in W_{c,j} with |c| >= 6");
}

int cmd_verify(const Flags& f, std::ostream& out) {
  if (!f.has("check")) throw UsageError("--check is required");
  std::vector<VerificationReport> reports;
  const int threads = f.threads.value_or(0);
  const double eps = f.has("eps") ? parse_real(f.eps, "--eps") : -1.0;

  if (f.check == "image-ellipse" || f.check == "containment" || f.check == "annulus") {
    const MapParams p(f.need_n(), f.need_complex("a", f.a), f.need_complex("c", f.c));
    if (f.check == "annulus") {
      reports.push_back(verify_annulus_escape(p, f.samples.value_or(64), f.max_iter.value_or(100), threads));
    } else {
      if (!f.k) throw UsageError("--k is required");
      const int samples = f.samples.value_or(2000);
      if (f.check == "image-ellipse") {
        reports.push_back(verify_image_ellipse(p, *f.k, samples));
      } else {
        const double e = eps > 0 ? eps : 0.5;
        gate_containment(p.n(), p.a(), p.c(), *f.k, e);
        reports.push_back(verify_containment(p, *f.k, samples));
      }
    }
  } else if (f.check == "winding") {
    const int n = f.need_n();
    const Complex c = f.need_complex("c", f.c);
    if (!large_c_ok(n, c)) throw HypothesisError("winding needs |c| >= 6 and 4|c| + 8 <= 2^(n+1)");
    for (const auto& w : fixed_critical_params(n, c)) {
      auto r = verify_winding(w, f.samples.value_or(4096));
      r.params += ";winding=" + std::to_string(r.winding.value_or(0));
      reports.push_back(std::move(r));
    }
  } else if (f.check == "spine-locus") {
    const double e = eps > 0 ? eps : (f.has("eps") ? throw UsageError("--eps must be positive") : 0.25);
    reports.push_back(verify_spine_locus(f.need_n(), f.need_complex("t", f.t), e, f.samples.value_or(200),
                                         f.max_iter.value_or(200), threads));
  } else if (f.check == "vminus-sign") {
    const Complex a = f.need_complex("a", f.a);
    const Complex c = f.need_complex("c", f.c);
    if (!is_real(a) || !is_real(c)) throw HypothesisError("vminus-sign needs real a and c");
    reports.push_back(verify_vminus_sign(f.need_n(), a.real(), c.real()));
  } else {
    throw UsageError("--check must be image-ellipse, containment, winding, annulus, spine-locus or vminus-sign");
  }

  Sink sink(f.out, out);
  sink.stream() << kReportCsvHeader << "\n";
  bool pass = true;
  for (const auto& r : reports) {
    sink.stream() << report_csv_row(r) << "\n";
    pass = pass && r.pass;
  }
  sink.close();
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_centers(const Flags& f, std::ostream& out) {
  const int n = f.need_n();
  if (f.has("c") == f.has("t")) throw UsageError("give exactly one of --c or --t");
  std::vector<std::string> rows;
  if (f.has("c")) {
    const Complex c = parse_complex(f.c, "--c");
    for (const auto& w : fixed_critical_params(n, c)) {
      const double res = fixed_point_residual(MapParams(n, w.a_j, c), w.w);
      rows.push_back(std::to_string(w.j) + "," + std::to_string(w.k) + "," + fmt(w.w.real()) + "," +
                     fmt(w.w.imag()) + "," + fmt(w.a_j.real()) + "," + fmt(w.a_j.imag()) + "," + fmt(res));
    }
  } else {
    const Complex t = parse_complex(f.t, "--t");
    int j = 0;
    for (const auto& d : diagonal_fixed_params(n, t)) {
      const WRegionSpec spec{t * d.a, n, ++j, d.w, d.a, 0};
      const double res = fixed_point_residual(MapParams(n, d.a, t * d.a), d.w);
      rows.push_back(std::to_string(j) + "," + std::to_string(k_of_j(spec)) + "," + fmt(d.w.real()) + "," +
                     fmt(d.w.imag()) + "," + fmt(d.a.real()) + "," + fmt(d.a.imag()) + "," + fmt(res));
    }
  }
  Sink sink(f.out, out);
  sink.stream() << "j,k,re_w,im_w,re_a,im_a,residual\n";
  for (const auto& r : rows) sink.stream() << r << "\n";
  sink.close();
  return kExitOk;
}

int cmd_spine(const Flags& f, std::ostream& out) {
  const SpineSpec spec(f.need_complex("t", f.t), f.samples.value_or(kDefaultSpineSamples));
  Sink sink(f.out, out);
  sink.stream() << "theta,branch,re,im\n";
  for (int branch : {1, -1}) {
    for (int i = 0; i < spec.samples; ++i) {
      const double theta = kTwoPi * i / spec.samples;
      const Complex a = spine_point(spec, theta, branch);
      sink.stream() << fmt(theta) << "," << branch << "," << fmt(a.real()) << "," << fmt(a.imag()) << "\n";
    }
  }
  sink.close();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized McMullen maps z^n + a/z^n + c: render, verify, centers, spine", "mcmullen"};
  app.require_subcommand(1);
  Flags f;

  auto* render = app.add_subcommand("render", "escape-time picture of a slice, written as PPM");
  add_common(render, f);
  render->add_option("--slice", f.slice, "fixed-c | fixed-a | diagonal | dynamical");
  render->add_option("--c", f.c, "translation re,im");
  render->add_option("--a", f.a, "pole coefficient re,im");
  render->add_option("--t", f.t, "diagonal slope re,im");
  render->add_option("--view", f.view, "re_min,re_max,im_min,im_max");
  render->add_option("--size", f.size, "WxH");
  render->add_option("--max-iter", f.max_iter, "iteration cap");

  auto* verify = app.add_subcommand("verify", "run one hypothesis check and print a CSV report");
  add_common(verify, f);
  verify->add_option("--check", f.check,
                     "image-ellipse | containment | winding | annulus | spine-locus | vminus-sign");
  verify->add_option("--c", f.c, "translation re,im");
  verify->add_option("--a", f.a, "pole coefficient re,im");
  verify->add_option("--t", f.t, "diagonal slope re,im");
  verify->add_option("--k", f.k, "index of U'_{a,k}");
  verify->add_option("--samples", f.samples, "samples (boundary points or grid size)");
  verify->add_option("--max-iter", f.max_iter, "iteration cap");
  verify->add_option("--eps", f.eps, "neighbourhood width");

  auto* centers = app.add_subcommand("centers", "parameters with a fixed critical point, as CSV");
  add_common(centers, f);
  centers->add_option("--c", f.c, "translation re,im");
  centers->add_option("--t", f.t, "diagonal slope re,im");

  auto* spine = app.add_subcommand("spine", "sampled spine of the diagonal slice, as CSV");
  spine->add_option("--out", f.out, "output path");
  spine->add_option("--t", f.t, "diagonal slope re,im");
  spine->add_option("--samples", f.samples, "theta samples per branch");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (render->parsed()) {
      f.app = render;
      return cmd_render(f, out);
    }
    if (verify->parsed()) {
      f.app = verify;
      return cmd_verify(f, out);
    }
    if (centers->parsed()) {
      f.app = centers;
      return cmd_centers(f, out);
    }
    f.app = spine;
    return cmd_spine(f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace mcmullen::cli
