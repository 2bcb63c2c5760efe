// Command-line driver: reproduces the error-curve, ratio-study, solver
// and c0-decay experiments as machine-readable CSV/JSON tables.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "rieszspec/errors.hpp"
#include "rieszspec/fde_solver.hpp"
#include "rieszspec/fracderiv.hpp"
#include "rieszspec/interp.hpp"
#include "rieszspec/orthopoly.hpp"
#include "rieszspec/specialfn.hpp"
#include "rieszspec/superconv.hpp"

using nlohmann::json;
using namespace rieszspec;

namespace {

constexpr int kTruthModes = 40;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stod(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << content;
}

std::string points_path(const std::string& out) {
  const std::size_t dot = out.rfind('.');
  if (dot == std::string::npos) return out + ".points";
  return out.substr(0, dot) + ".points" + out.substr(dot);
}

// ---------------------------------------------------------------------------
// Built-in test functions
// ---------------------------------------------------------------------------

// (1+x)^9 (1-x)^9 and its (1+x)-power expansion (even function).
double poly9(double x) { return std::pow(1.0 + x, 9) * std::pow(1.0 - x, 9); }

std::vector<PowerTerm> poly9_powers() {
  std::vector<PowerTerm> t;
  for (int j = 0; j <= 9; ++j) {
    const double c = binom_real(9, j) * std::pow(2.0, 9 - j) * ((j % 2 == 0) ? 1.0 : -1.0);
    t.push_back({9.0 + j, c});
  }
  return t;
}

long double runge_shift_v(long double x) { return 1.0L / (1.0L + (x + 3.0L) * (x + 3.0L)); }
long double fde_true_v(long double x) { return 1.0L / (1.0L + 0.5L * x * x); }

std::function<long double(long double)> gjf_v_of(const std::string& fn) {
  if (fn == "runge-shift") return runge_shift_v;
  if (fn == "fde-true") return fde_true_v;
  throw Usage("function '" + fn + "' is not a GJF-flavor test function");
}

// ---------------------------------------------------------------------------
// Experiment pipelines
// ---------------------------------------------------------------------------

struct CurveData {
  std::vector<std::pair<double, double>> curve;
  NodeSet points;
  std::vector<double> point_errors;
  RatioReport report;
};

CurveData lobatto_curve(double alpha, int N, int grid_size) {
  const RieszOrder order = make_riesz_order(alpha);
  if (order.k != 1) throw Usage("lobatto flavor requires 0 < alpha < 1");
  const Interpolant interp = lobatto_interpolate(poly9, N);
  const std::vector<PowerTerm> powers = poly9_powers();
  auto truth = [&](double x) { return riesz_power_oracle(order, powers, x); };
  CurveData d;
  d.curve = riesz_error_curve(interp, order, truth, default_grid(grid_size));
  d.points = lobatto_superconv_points(order, N);
  for (double xi : d.points.points) {
    d.point_errors.push_back(truth(xi) -
                             riesz_of_legendre_expansion(interp.legendre(), order, xi));
  }
  d.report = compute_ratio(d.curve, d.points, d.point_errors);
  d.report.alpha = alpha;
  d.report.N = N;
  d.report.flavor = InterpFlavor::LobattoPoly;
  return d;
}

CurveData gjf_curve(const std::string& fn, double alpha, int N, int grid_size) {
  const RieszOrder order = make_riesz_order(alpha);
  const auto v = gjf_v_of(fn);
  const GjfExpansion truth = gjf_project_x(v, order, kTruthModes);
  const long double a = order.alpha_star / 2.0L;
  const Interpolant interp = gjf_interpolate_x(
      [&](long double x) { return powl(1.0L - x * x, a) * v(x); }, order, N);
  const GjfExpansion diff = gjf_error_expansion(interp, truth);
  CurveData d;
  d.curve = riesz_error_curve(interp, truth, default_grid(grid_size));
  d.points = gjf_superconv_points(order, N);
  for (double xi : d.points.points) {
    d.point_errors.push_back(riesz_of_gjf_expansion(diff, xi));
  }
  d.report = compute_ratio(d.curve, d.points, d.point_errors);
  d.report.alpha = alpha;
  d.report.N = N;
  d.report.flavor = InterpFlavor::GjfFractional;
  return d;
}

struct SolveData {
  CurveData curve;
  GjfExpansion solution;
  bool warning = false;
};

SolveData solver_curve(const std::string& method, double alpha, int N, int grid_size) {
  const RieszOrder order = make_riesz_order(alpha);
  if (order.k != 2) throw Usage("solvers require 1 < alpha < 2");
  const GjfExpansion truth = gjf_project_x(fde_true_v, order, kTruthModes);
  const ManufacturedRhs f = manufactured_rhs(truth);
  SolveResult res = (method == "pg") ? solve_petrov_galerkin(order, f, N)
                                     : solve_collocation(order, f, N);
  const GjfExpansion diff = gjf_add(truth, res.u, 1.0, -1.0);
  SolveData s;
  s.solution = res.u;
  s.warning = res.conditioning_warning;
  for (double x : default_grid(grid_size)) {
    s.curve.curve.emplace_back(x, riesz_of_gjf_expansion(diff, x));
  }
  s.curve.points = gjf_superconv_points(order, N);
  for (double xi : s.curve.points.points) {
    s.curve.point_errors.push_back(riesz_of_gjf_expansion(diff, xi));
  }
  s.curve.report = compute_ratio(s.curve.curve, s.curve.points, s.curve.point_errors);
  s.curve.report.alpha = alpha;
  s.curve.report.N = N;
  s.curve.report.flavor = InterpFlavor::GjfFractional;
  return s;
}

double c0_inner_product(double alpha, int N) {
  const double a = alpha / 2.0;
  const NodeSet q = gauss_jacobi({a, 1.0 - a}, (N + 2) / 2 + 4);
  double s = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    s += q.weights[i] * jacobi_eval({a, a}, N + 1, q.points[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Output assembly
// ---------------------------------------------------------------------------

json report_json(const RatioReport& r) {
  json j;
  j["alpha"] = r.alpha;
  j["n"] = r.N;
  j["flavor"] = r.flavor == InterpFlavor::LobattoPoly ? "lobatto" : "gjf";
  j["global_max"] = r.global_max;
  j["superconv_max"] = r.superconv_max;
  if (r.exact_reproduction) {
    j["ratio"] = "inf";
    j["exact_reproduction"] = true;
  } else {
    j["ratio"] = r.ratio;
    j["exact_reproduction"] = false;
  }
  return j;
}

std::string curve_csv(const CurveData& d) {
  std::string s = "x,error\n";
  for (const auto& [x, e] : d.curve) s += fmt(x) + "," + fmt(e) + "\n";
  return s;
}

std::string point_csv(const CurveData& d) {
  std::string s = "xi,error_at_xi\n";
  for (std::size_t i = 0; i < d.point_errors.size(); ++i) {
    s += fmt(d.points.points[i]) + "," + fmt(d.point_errors[i]) + "\n";
  }
  return s;
}

json curve_json(const CurveData& d) {
  json j;
  j["curve"] = json::array();
  for (const auto& [x, e] : d.curve) j["curve"].push_back({x, e});
  j["points"] = json::array();
  for (std::size_t i = 0; i < d.point_errors.size(); ++i) {
    j["points"].push_back({d.points.points[i], d.point_errors[i]});
  }
  j["ratio_report"] = report_json(d.report);
  return j;
}

void emit_curve(const CurveData& d, const std::string& out, const std::string& format) {
  if (format == "csv") {
    write_file(out, curve_csv(d));
    write_file(points_path(out), point_csv(d));
  } else {
    write_file(out, curve_json(d).dump(2) + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz fractional spectral interpolation and FDE experiments"};
  app.require_subcommand(1);

  std::string flavor = "lobatto", method, fn = "poly9", alpha_list = "0.5", n_list = "11";
  std::string out_path = "out.csv", format;
  int grid_size = 2001;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_list, "derivative order(s), comma list");
    cmd->add_option("--n", n_list, "degree(s) N, comma list");
    cmd->add_option("--grid", grid_size, "dense grid size (default 2001)");
    cmd->add_option("--out", out_path, "output path")->required();
    cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* c_curve = app.add_subcommand("error-curve", "dense Riesz-derivative error curve");
  c_curve->add_option("--flavor", flavor)->check(CLI::IsMember({"lobatto", "gjf"}));
  c_curve->add_option("--fn", fn)->check(CLI::IsMember({"poly9", "runge-shift", "fde-true"}));
  add_common(c_curve);

  CLI::App* c_ratio = app.add_subcommand("ratio-study", "gain ratios and log-log slopes");
  c_ratio->add_option("--flavor", flavor)->check(CLI::IsMember({"lobatto", "gjf"}));
  c_ratio->add_option("--method", method)->check(CLI::IsMember({"pg", "colloc"}));
  c_ratio->add_option("--fn", fn)->check(CLI::IsMember({"poly9", "runge-shift", "fde-true"}));
  add_common(c_ratio);

  CLI::App* c_solve = app.add_subcommand("solve", "solve the model FDE");
  c_solve->add_option("--method", method)->required()->check(CLI::IsMember({"pg", "colloc"}));
  add_common(c_solve);

  CLI::App* c_c0 = app.add_subcommand("c0-decay", "weighted inner-product decay diagnostic");
  add_common(c_c0);

  CLI::App* c_pts = app.add_subcommand("superconv-points", "dump superconvergence points");
  c_pts->add_option("--flavor", flavor)->check(CLI::IsMember({"lobatto", "gjf"}));
  add_common(c_pts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (format.empty()) {
    // table-like commands default to csv, record-like commands to json
    format = (c_curve->parsed() || c_pts->parsed()) ? "csv" : "json";
  }

  try {
    const std::vector<double> alphas = parse_list(alpha_list);
    std::vector<int> ns;
    for (double v : parse_list(n_list)) ns.push_back(static_cast<int>(v));

    if (c_curve->parsed()) {
      if (alphas.size() != 1 || ns.size() != 1) {
        throw Usage("error-curve takes a single --alpha and --n");
      }
      if (flavor == "lobatto" && fn != "poly9") throw Usage("lobatto flavor supports --fn poly9");
      if (flavor == "gjf" && fn == "poly9") throw Usage("gjf flavor supports runge-shift|fde-true");
      CurveData d = (flavor == "lobatto") ? lobatto_curve(alphas[0], ns[0], grid_size)
                                          : gjf_curve(fn, alphas[0], ns[0], grid_size);
      emit_curve(d, out_path, format);
    } else if (c_ratio->parsed()) {
      json arr = json::array();
      std::string csv = "alpha,n,flavor,global_max,superconv_max,ratio,slope\n";
      for (double alpha : alphas) {
        std::vector<double> nd, ratios;
        std::vector<RatioReport> reports;
        for (int N : ns) {
          CurveData d;
          if (!method.empty()) {
            d = solver_curve(method, alpha, N, grid_size).curve;
          } else if (flavor == "lobatto") {
            if (fn != "poly9") throw Usage("lobatto flavor supports --fn poly9");
            d = lobatto_curve(alpha, N, grid_size);
          } else {
            d = gjf_curve(fn == "poly9" ? "runge-shift" : fn, alpha, N, grid_size);
          }
          reports.push_back(d.report);
          nd.push_back(N);
          ratios.push_back(d.report.ratio);
        }
        const double slope = fit_loglog_slope(nd, ratios);
        json ja;
        ja["alpha"] = alpha;
        ja["method"] = method.empty() ? (flavor == "lobatto" ? "lobatto" : "gjf") : method;
        ja["slope_log_ratio"] = slope;
        ja["slope_log_reciprocal"] = -slope;
        ja["records"] = json::array();
        for (const auto& r : reports) {
          ja["records"].push_back(report_json(r));
          csv += fmt(r.alpha) + "," + std::to_string(r.N) + "," +
                 (method.empty() ? flavor : method) + "," + fmt(r.global_max) + "," +
                 fmt(r.superconv_max) + "," + fmt(r.ratio) + "," + fmt(slope) + "\n";
        }
        arr.push_back(ja);
      }
      write_file(out_path, format == "csv" ? csv : arr.dump(2) + "\n");
    } else if (c_solve->parsed()) {
      if (alphas.size() != 1 || ns.size() != 1) throw Usage("solve takes a single --alpha and --n");
      SolveData s = solver_curve(method, alphas[0], ns[0], grid_size);
      json j = curve_json(s.curve);
      j["method"] = method;
      j["coefficients"] = s.solution.coeffs;
      j["conditioning_warning"] = s.warning;
      if (format == "json") {
        write_file(out_path, j.dump(2) + "\n");
      } else {
        emit_curve(s.curve, out_path, "csv");
        json meta;
        meta["method"] = method;
        meta["alpha"] = alphas[0];
        meta["n"] = ns[0];
        meta["coefficients"] = s.solution.coeffs;
        meta["conditioning_warning"] = s.warning;
        meta["ratio_report"] = report_json(s.curve.report);
        write_file(out_path + ".meta.json", meta.dump(2) + "\n");
      }
      if (s.warning) {
        std::fprintf(stderr, "warning: ill-conditioned collocation system\n");
        return 3;
      }
    } else if (c_c0->parsed()) {
      if (n_list == "11") ns = {8, 16, 32, 64, 128, 256};  // default sweep
      json arr = json::array();
      std::string csv = "alpha,n,c0\n";
      for (double alpha : alphas) {
        if (!(alpha > 0.0 && alpha < 2.0)) throw Usage("c0-decay requires 0 < alpha < 2");
        std::vector<double> nd, vals;
        json ja;
        ja["alpha"] = alpha;
        ja["entries"] = json::array();
        for (int N : ns) {
          const double v = c0_inner_product(alpha, N);
          ja["entries"].push_back({N, v});
          csv += fmt(alpha) + "," + std::to_string(N) + "," + fmt(v) + "\n";
          nd.push_back(N);
          vals.push_back(std::abs(v));
        }
        const double slope = fit_loglog_slope(nd, vals);
        ja["slope"] = slope;
        std::printf("alpha=%g fitted c0 slope: %.4f\n", alpha, slope);
        arr.push_back(ja);
      }
      write_file(out_path, format == "csv" ? csv : arr.dump(2) + "\n");
    } else if (c_pts->parsed()) {
      if (alphas.size() != 1 || ns.size() != 1) {
        throw Usage("superconv-points takes a single --alpha and --n");
      }
      const RieszOrder order = make_riesz_order(alphas[0]);
      const NodeSet pts = (flavor == "lobatto") ? lobatto_superconv_points(order, ns[0])
                                                : gjf_superconv_points(order, ns[0]);
      if (format == "csv") {
        std::string csv = "xi\n";
        for (double x : pts.points) csv += fmt(x) + "\n";
        write_file(out_path, csv);
      } else {
        json j;
        j["points"] = pts.points;
        write_file(out_path, j.dump(2) + "\n");
      }
    }
  } catch (const Usage& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
  return 0;
}
