#include "gurlab/selftest.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "gurlab/bch.hpp"
#include "gurlab/gur.hpp"
#include "gurlab/problem.hpp"
#include "gurlab/random.hpp"

namespace gur {

namespace {

struct Instance {
  State state;
  Observable x;
  Observable y;
  Complex s;
  Complex t;
};

Instance draw_instance(Rng& rng, int dim) {
  Instance inst{State::pure(rng.haar_state(dim)), rng.random_observable(dim),
                rng.random_observable(dim), rng.in_disk(1.0), rng.in_disk(1.0)};
  return inst;
}

std::string dump_instance(const Instance& inst) {
  ProblemFile p;
  p.dim = inst.x.dim();
  p.observables.emplace("X", inst.x.matrix());
  p.observables.emplace("Y", inst.y.matrix());
  p.state = inst.state;
  p.params.emplace("s", inst.s);
  p.params.emplace("t", inst.t);
  return serialize_problem(p);
}

void record(SuiteResult& suite, bool pass, const Instance& inst) {
  ++suite.run;
  if (pass) {
    ++suite.passed;
  } else if (suite.counterexample.empty()) {
    suite.counterexample = dump_instance(inst);
  }
}

Complex cross_cgf(const Instance& inst, double eps) {
  const CMatrix prod = exp_scaled(inst.x, eps * inst.s) *
                       exp_scaled(inst.y, eps * inst.t);
  return std::log(expectation(inst.state, prod));
}

} // namespace

std::pair<Complex, Complex> taylor_k2_k3_fd(const State& state, const Observable& x,
                                            const Observable& y, Complex s,
                                            Complex t) {
  const Instance inst{state, x, y, s, t};
  const auto g = [&](double eps) { return cross_cgf(inst, eps); };

  const auto estimate2 = [&](double h) { return (g(h) + g(-h)) / (2 * h * h); };
  const auto estimate3 = [&](double h) {
    return ((g(2 * h) - g(-2 * h)) - 2.0 * (g(h) - g(-h))) / (12 * h * h * h);
  };
  const double h = 1e-3;
  const Complex k2 = (4.0 * estimate2(h) - estimate2(2 * h)) / 3.0;
  const Complex k3 = (4.0 * estimate3(h) - estimate3(2 * h)) / 3.0;
  return {k2, k3};
}

SelftestReport run_selftest(const SelftestOptions& options, std::ostream* log) {
  SelftestReport report;
  report.seed = options.seed;

  // distinct engine per suite so suite sizes do not shift each other's draws
  {
    SuiteResult suite;
    suite.name = "gur_nonnegativity";
    Rng rng(options.seed);
    for (int i = 0; i < options.n; ++i) {
      const Instance inst = draw_instance(rng, 2 + i % 3);
      const GurReport r = gur_full(inst.state, inst.x, inst.y, inst.s, inst.t);
      record(suite, r.margin >= -options.tol, inst);
    }
    report.suites.push_back(std::move(suite));
  }
  {
    SuiteResult suite;
    suite.name = "first_order_identity";
    Rng rng(options.seed + 1);
    for (int i = 0; i < options.n; ++i) {
      const Instance inst = draw_instance(rng, 2 + i % 3);
      const double diff =
          first_order_identity(inst.state, inst.x, inst.y, inst.s, inst.t);
      const double scale =
          std::max(1.0, 4.0 * inst.x.sigma_max() + 4.0 * inst.y.sigma_max());
      record(suite, diff <= 1e-12 * scale, inst);
    }
    report.suites.push_back(std::move(suite));
  }
  {
    SuiteResult suite;
    suite.name = "bch_scaling_order";
    Rng rng(options.seed + 2);
    const int count = std::min(options.n, 12);
    for (int i = 0; i < count; ++i) {
      const int dim = 2 + i % 2;
      Instance inst = draw_instance(rng, dim);
      const auto residual = [&](double eps) {
        const CMatrix exact = z_exact(inst.x, inst.y, eps, eps);
        const CMatrix approx =
            bch_partial_sum(bch_terms(inst.x, inst.y, eps, eps), 5);
        return (exact - approx).norm();
      };
      const double r1 = residual(0.05);
      const double r2 = residual(0.025);
      const double fit = std::log2(r1 / r2);
      record(suite, r1 < 1e-13 || (fit >= 5.3 && fit <= 6.7), inst);
    }
    report.suites.push_back(std::move(suite));
  }
  {
    SuiteResult suite;
    suite.name = "taylor_coefficient_oracle";
    Rng rng(options.seed + 3);
    const int count = std::min(options.n, 200);
    for (int i = 0; i < count; ++i) {
      const Instance inst = draw_instance(rng, 2);
      const auto [k2_fd, k3_fd] =
          taylor_k2_k3_fd(inst.state, inst.x, inst.y, inst.s, inst.t);
      const Complex k2 = k2_coefficient(inst.state, inst.x, inst.y, inst.s, inst.t,
                                        options.z11_coeff);
      const Complex k3 = k3_coefficient(inst.state, inst.x, inst.y, inst.s, inst.t,
                                        options.z11_coeff);
      const bool pass = std::abs(k2 - k2_fd) <= 1e-6 && std::abs(k3 - k3_fd) <= 1e-6;
      record(suite, pass, inst);
    }
    report.suites.push_back(std::move(suite));
  }

  report.ok = true;
  for (const SuiteResult& suite : report.suites) report.ok = report.ok && suite.ok();

  if (log) {
    *log << "selftest seed " << report.seed << "\n";
    for (const SuiteResult& suite : report.suites) {
      *log << "  " << (suite.ok() ? "pass" : "FAIL") << "  " << suite.name << "  "
           << suite.passed << "/" << suite.run << "\n";
      if (!suite.ok() && !suite.counterexample.empty()) {
        *log << "counterexample (replayable problem file):\n"
             << suite.counterexample << "\n";
      }
    }
  }
  return report;
}

} // namespace gur
