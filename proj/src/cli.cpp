#include "gurlab/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <json.hpp>

#include "gurlab/gur.hpp"
#include "gurlab/problem.hpp"
#include "gurlab/random.hpp"
#include "gurlab/scan.hpp"
#include "gurlab/scenarios.hpp"
#include "gurlab/selftest.hpp"
#include "gurlab/warnings.hpp"

namespace gur::cli {

namespace {

void flush_warnings(std::ostream& err) {
  for (const auto& w : warnings::take()) err << "warning: " << w.message << "\n";
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         format_double(std::abs(z.imag())) + "i";
}

void print_report(const GurReport& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::text:
      out << "name: " << r.name << "\n"
          << "lhs: " << format_double(r.lhs) << "\n"
          << "rhs: " << format_double(r.rhs) << "\n"
          << "margin: " << format_double(r.margin) << "\n"
          << "s: " << format_complex(r.s) << "\n"
          << "t: " << format_complex(r.t) << "\n"
          << "tol: " << format_double(r.tol) << "\n"
          << "satisfied: " << (r.satisfied ? "yes" : "no") << "\n";
      if (r.unproven_regime) out << "unproven_regime: yes\n";
      break;
    case Format::json: {
      nlohmann::json j;
      j["name"] = r.name;
      j["lhs"] = r.lhs;
      j["rhs"] = r.rhs;
      j["margin"] = r.margin;
      j["s"] = {r.s.real(), r.s.imag()};
      j["t"] = {r.t.real(), r.t.imag()};
      j["tol"] = r.tol;
      j["satisfied"] = r.satisfied;
      j["unproven_regime"] = r.unproven_regime;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "name,lhs,rhs,margin,s_re,s_im,t_re,t_im,satisfied\n"
          << r.name << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
          << ',' << format_double(r.margin) << ',' << format_double(r.s.real())
          << ',' << format_double(r.s.imag()) << ',' << format_double(r.t.real())
          << ',' << format_double(r.t.imag()) << ',' << (r.satisfied ? 1 : 0)
          << "\n";
      break;
  }
}

const CMatrix& named_observable(const ProblemFile& p, const std::string& name) {
  const auto it = p.observables.find(name);
  if (it == p.observables.end()) {
    throw ParseError("problem file does not define observable '" + name + "'");
  }
  return it->second;
}

Complex param_or(const ProblemFile& p, const std::string& name, Complex fallback) {
  const auto it = p.params.find(name);
  return it == p.params.end() ? fallback : it->second;
}

using CheckFn = std::function<GurReport(const State&, const Observable&,
                                        const Observable&, Complex, Complex, double)>;

const std::map<std::string, CheckFn>& check_registry() {
  static const std::map<std::string, CheckFn> reg = {
      {"gur_full", [](const State& st, const Observable& x, const Observable& y,
                      Complex s, Complex t, double tol) {
         return gur_full(st, x, y, s, t, tol);
       }},
      {"variance_ur", [](const State& st, const Observable& x, const Observable& y,
                         Complex s, Complex t, double tol) {
         return variance_ur(st, x, y, s, t, tol);
       }},
      {"variance_ur_optimal",
       [](const State& st, const Observable& x, const Observable& y, Complex,
          Complex, double tol) { return variance_ur_optimal(st, x, y, tol); }},
      {"skewness_ur", [](const State& st, const Observable& x, const Observable& y,
                         Complex s, Complex t, double tol) {
         return skewness_ur(st, x, y, s, t, tol);
       }},
      {"variance_skewness_ur",
       [](const State& st, const Observable& x, const Observable& y, Complex s,
          Complex, double tol) {
         if (s.imag() != 0.0) {
           throw std::invalid_argument("variance_skewness_ur: eps must be real");
         }
         return variance_skewness_ur(st, x, y, s.real(), tol);
       }},
      {"classical_ur", [](const State& st, const Observable& x, const Observable& y,
                          Complex s, Complex t, double tol) {
         return classical_ur(st, x, y, s, t, tol);
       }},
      {"quantum_ur", [](const State& st, const Observable& x, const Observable& y,
                        Complex s, Complex t, double tol) {
         return quantum_ur(st, x, y, s, t, tol);
       }},
      {"exp_ratio_ur", [](const State& st, const Observable& x, const Observable& y,
                          Complex s, Complex t, double tol) {
         if (s.imag() != 0.0 || t.imag() != 0.0) {
           throw std::invalid_argument("exp_ratio_ur: s and t must be real");
         }
         return exp_ratio_ur(st, x, y, s.real(), t.real(), tol);
       }},
  };
  return reg;
}

struct CsvWriter {
  explicit CsvWriter(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw Error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream(std::ostream& fallback) { return file.is_open() ? file : fallback; }
  std::ofstream file;
};

int example1(const ExampleArgs& args, std::ostream& out, std::ostream& err) {
  const int n1 = args.grid1 > 0 ? args.grid1 : 100;
  const int n2 = args.grid2 > 0 ? args.grid2 : 100;
  scan::GridSpec grid{{"theta", 0.0, M_PI, n1},
                      scan::GridVar{"phi", 0.0, 2 * M_PI, n2},
                      {{"s", 1.0}, {"t", 1.0}}};
  const scan::ScanResult res = scan::sweep("classical_ur", grid);
  const auto regions = scan::connected_regions(res, grid);

  CsvWriter w(args.out_path);
  std::ostream& csv = w.stream(out);
  csv << "theta,phi,lhs,rhs,margin\n";
  for (const auto& row : res.rows) {
    csv << format_double(row.coords[0]) << ',' << format_double(row.coords[1]) << ','
        << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
        << format_double(row.margin) << "\n";
  }
  err << "rows " << res.rows.size() << ", violations " << res.violation_cells.size()
      << ", regions " << regions.size() << "\n";
  if (res.extremum) {
    err << "deepest margin " << format_double(res.extremum->second) << " at theta "
        << format_double(res.extremum->first[0]) << ", phi "
        << format_double(res.extremum->first[1]) << "\n";
  }
  return 0;
}

int example2(const ExampleArgs& args, std::ostream& out, std::ostream& err) {
  const int n1 = args.grid1 > 0 ? args.grid1 : 20;
  const int n2 = args.grid2 > 0 ? args.grid2 : 20;
  const double hi = 0.69;
  scan::GridSpec grid{{"s", hi / n1, hi, n1}, scan::GridVar{"t", hi / n2, hi, n2}, {}};
  const scan::ScanResult res = scan::sweep("exp_ratio_ur", grid);

  CsvWriter w(args.out_path);
  std::ostream& csv = w.stream(out);
  csv << "s,t,lhs,rhs,margin\n";
  double min_rhs = INFINITY;
  for (const auto& row : res.rows) {
    csv << format_double(row.coords[0]) << ',' << format_double(row.coords[1]) << ','
        << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
        << format_double(row.margin) << "\n";
    min_rhs = std::min(min_rhs, row.rhs);
  }

  const AngularMomenta am = angular_momenta_l1();
  const GurReport schrod = variance_ur_optimal(psi2(), am.lx, am.ly);
  err << "schrodinger_rhs " << format_double(schrod.rhs * schrod.rhs / 4) << "\n";
  err << "min_rhs " << format_double(min_rhs) << " (ratio form; > 1 is a nontrivial"
      << " constraint)\n";
  return 0;
}

int example3(const ExampleArgs& args, std::ostream& out, std::ostream& err) {
  const int samples = args.grid1 > 0 ? args.grid1 : 1000;
  const CollectiveObservables co = collective_observables();
  const State singlet = psi3();
  const auto k2_sum = [&](const State& st) {
    return cumulants_single(st, co.a).k2 + cumulants_single(st, co.b).k2 +
           cumulants_single(st, co.c).k2;
  };

  CsvWriter w(args.out_path);
  std::ostream& csv = w.stream(out);
  csv << "kind,index,k2_sum\n";
  const double singlet_sum = k2_sum(singlet);
  csv << "singlet,0," << format_double(singlet_sum) << "\n";

  Rng rng(args.seed);
  double min_sep = INFINITY;
  for (int i = 0; i < samples; ++i) {
    const int terms = rng.uniform_int(1, 4);
    CMatrix rho = CMatrix::Zero(4, 4);
    double wsum = 0;
    std::vector<double> weights(terms);
    for (int k = 0; k < terms; ++k) {
      weights[k] = rng.uniform(0.05, 1.0);
      wsum += weights[k];
    }
    for (int k = 0; k < terms; ++k) {
      const CVector u = rng.haar_state(2);
      const CVector v = rng.haar_state(2);
      const CVector uv = tensor(u, v).col(0);
      rho += (weights[k] / wsum) * (uv * uv.adjoint());
    }
    const double sum = k2_sum(State::density(std::move(rho)));
    min_sep = std::min(min_sep, sum);
    csv << "separable," << i + 1 << ',' << format_double(sum) << "\n";
  }
  err << "singlet_k2_sum " << format_double(singlet_sum) << "\n";
  err << "separable_min " << format_double(min_sep) << " (separable bound 2)\n";
  return 0;
}

int example4(const ExampleArgs& args, std::ostream& out, std::ostream& err) {
  const int n1 = args.grid1 > 0 ? args.grid1 : 57;
  const auto max_abs_k3 = [](double eta) {
    return scan::maximize_1d([eta](double th) { return std::abs(kappa3_S(eta, th)); },
                             0.0, 2 * M_PI, 1e-9)
        .second;
  };

  CsvWriter w(args.out_path);
  std::ostream& csv = w.stream(out);
  csv << "eta,max_abs_kappa3\n";
  for (int i = 0; i < n1; ++i) {
    const double eta = -1.0 / 3.0 + (1.0 + 1.0 / 3.0) * i / (n1 - 1);
    csv << format_double(eta) << ',' << format_double(max_abs_k3(eta)) << "\n";
  }

  const double eta_star =
      scan::threshold_bisect(max_abs_k3, 0.3, 0.6, lhvt_k3_bound(), 1e-6);
  err << "eta_star " << format_double(eta_star) << "\n";
  err << "max_kappa3_eta1 " << format_double(max_abs_k3(1.0)) << "\n";
  return 0;
}

} // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const ProblemFile problem = load_problem(args.problem_path);
    const auto it = check_registry().find(args.inequality);
    if (it == check_registry().end()) {
      throw UnknownInequality("unknown inequality '" + args.inequality + "'");
    }
    const Observable x = Observable::from_matrix(named_observable(problem, "X"));
    const Observable y = Observable::from_matrix(named_observable(problem, "Y"));
    const Complex s = args.s ? *args.s : param_or(problem, "s", Complex(1, 0));
    const Complex t = args.t ? *args.t : param_or(problem, "t", Complex(1, 0));
    const GurReport report = it->second(problem.state, x, y, s, t, args.tol);
    flush_warnings(err);
    print_report(report, args.format, out);
    return report.satisfied ? 0 : 2;
  } catch (const std::exception& e) {
    flush_warnings(err);
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_example(const ExampleArgs& args, std::ostream& out, std::ostream& err) {
  try {
    switch (args.number) {
      case 1: return example1(args, out, err);
      case 2: return example2(args, out, err);
      case 3: return example3(args, out, err);
      case 4: return example4(args, out, err);
      default: err << "error: example number must be 1..4\n"; return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err) {
  SelftestOptions options;
  options.seed = args.seed;
  options.n = args.n;
  if (args.inject == "z11-sign-flip") {
    options.z11_coeff = -0.5;
  } else if (!args.inject.empty()) {
    err << "error: unknown injection '" << args.inject << "'\n";
    return 1;
  }
  const SelftestReport report = gur::run_selftest(options, &out);
  return report.ok ? 0 : 3;
}

} // namespace gur::cli
