#include "gurlab/scan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "gurlab/errors.hpp"
#include "gurlab/gur.hpp"
#include "gurlab/scenarios.hpp"

namespace gur::scan {

namespace {

void validate_grid(const GridSpec& grid) {
  const auto check = [](const GridVar& v) {
    if (v.n < 1) throw BindingError("grid: variable '" + v.name + "' needs n >= 1");
    if (!std::isfinite(v.lo) || !std::isfinite(v.hi)) {
      throw BindingError("grid: variable '" + v.name + "' has non-finite bounds");
    }
    if (v.n >= 2 && !(v.lo < v.hi)) {
      throw BindingError("grid: variable '" + v.name + "' needs lo < hi");
    }
  };
  check(grid.var1);
  if (grid.var2) check(*grid.var2);
}

double grid_value(const GridVar& v, int k) {
  if (v.n == 1) return v.lo;
  return v.lo + (v.hi - v.lo) * static_cast<double>(k) / (v.n - 1);
}

double binding_or(const Bindings& b, const std::string& name, double fallback) {
  const auto it = b.find(name);
  return it == b.end() ? fallback : it->second;
}

Complex complex_binding(const Bindings& b, const std::string& base, double def_re) {
  double re = binding_or(b, base + "_re", binding_or(b, base, def_re));
  double im = binding_or(b, base + "_im", 0.0);
  return {re, im};
}

struct RegistryEntry {
  std::set<std::string> params;
  Evaluator eval;
};

std::array<double, 3> to_row(const GurReport& r) { return {r.lhs, r.rhs, r.margin}; }

const std::map<std::string, RegistryEntry>& registry() {
  static const std::set<std::string> qubit_params = {"theta", "phi",  "s",   "t",
                                                     "s_re",  "s_im", "t_re", "t_im"};
  const auto qubit_eval = [](auto&& fn) {
    return [fn](const Bindings& b) {
      const State state = psi1(binding_or(b, "theta", 0.0), binding_or(b, "phi", 0.0));
      return to_row(fn(state, sigma_x(), sigma_y(), complex_binding(b, "s", 1.0),
                       complex_binding(b, "t", 1.0)));
    };
  };
  static const std::map<std::string, RegistryEntry> reg = {
      {"gur_full",
       {qubit_params, qubit_eval([](const State& st, const Observable& x,
                                    const Observable& y, Complex s, Complex t) {
          return gur_full(st, x, y, s, t);
        })}},
      {"classical_ur",
       {qubit_params, qubit_eval([](const State& st, const Observable& x,
                                    const Observable& y, Complex s, Complex t) {
          return classical_ur(st, x, y, s, t);
        })}},
      {"quantum_ur",
       {qubit_params, qubit_eval([](const State& st, const Observable& x,
                                    const Observable& y, Complex s, Complex t) {
          return quantum_ur(st, x, y, s, t);
        })}},
      {"variance_ur",
       {qubit_params, qubit_eval([](const State& st, const Observable& x,
                                    const Observable& y, Complex s, Complex t) {
          return variance_ur(st, x, y, s, t);
        })}},
      {"skewness_ur",
       {qubit_params, qubit_eval([](const State& st, const Observable& x,
                                    const Observable& y, Complex s, Complex t) {
          return skewness_ur(st, x, y, s, t);
        })}},
      {"variance_ur_optimal",
       {{"theta", "phi"}, [](const Bindings& b) {
          const State state =
              psi1(binding_or(b, "theta", 0.0), binding_or(b, "phi", 0.0));
          return to_row(variance_ur_optimal(state, sigma_x(), sigma_y()));
        }}},
      {"exp_ratio_ur",
       {{"s", "t"}, [](const Bindings& b) {
          static const AngularMomenta am = angular_momenta_l1();
          const State state = psi2();
          return to_row(exp_ratio_ur(state, am.lx, am.ly, binding_or(b, "s", 0.5),
                                     binding_or(b, "t", 0.5)));
        }}},
  };
  return reg;
}

const RegistryEntry& lookup(const std::string& id) {
  const auto it = registry().find(id);
  if (it == registry().end()) {
    throw UnknownInequality("unknown inequality '" + id + "'");
  }
  return it->second;
}

} // namespace

Evaluator make_evaluator(const std::string& inequality_id) {
  return lookup(inequality_id).eval;
}

std::vector<std::string> registered_inequalities() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry()) out.push_back(name);
  return out;
}

void validate_bindings(const std::string& inequality_id, const GridSpec& grid) {
  const RegistryEntry& entry = lookup(inequality_id);
  const auto check = [&](const std::string& name) {
    if (!entry.params.count(name)) {
      std::string allowed;
      for (const auto& p : entry.params) allowed += (allowed.empty() ? "" : ", ") + p;
      throw BindingError("'" + name + "' does not bind to a parameter of '" +
                         inequality_id + "' (allowed: " + allowed + ")");
    }
  };
  check(grid.var1.name);
  if (grid.var2) check(grid.var2->name);
  for (const auto& [name, value] : grid.fixed) check(name);
}

ScanResult sweep(const Evaluator& eval, const GridSpec& grid, double violation_tol,
                 int threads) {
  validate_grid(grid);
  const int n1 = grid.var1.n;
  const int n2 = grid.var2 ? grid.var2->n : 1;
  const std::size_t total = static_cast<std::size_t>(n1) * n2;

  ScanResult result;
  result.rows.resize(total);

  const auto run_cell = [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / n2;
    const int j = static_cast<int>(idx) % n2;
    Bindings b = grid.fixed;
    const double v1 = grid_value(grid.var1, i);
    b[grid.var1.name] = v1;
    double v2 = 0;
    if (grid.var2) {
      v2 = grid_value(*grid.var2, j);
      b[grid.var2->name] = v2;
    }
    const auto [lhs, rhs, margin] = eval(b);
    result.rows[idx] = {{v1, v2}, lhs, rhs, margin};
  };

  if (threads <= 1 || total < 2) {
    for (std::size_t idx = 0; idx < total; ++idx) run_cell(idx);
  } else {
    // preallocated slots; chunked fan-out keeps the merge deterministic
    std::vector<std::thread> pool;
    const std::size_t nw = std::min<std::size_t>(threads, total);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < nw; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t idx = w; idx < total; idx += nw) run_cell(idx);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Row& row = result.rows[idx];
    if (row.margin < -violation_tol) result.violation_cells.push_back(idx);
    if (row.margin < best) {
      best = row.margin;
      result.extremum = {{row.coords[0], row.coords[1]}, row.margin};
    }
  }
  return result;
}

ScanResult sweep(const std::string& inequality_id, const GridSpec& grid,
                 double violation_tol, int threads) {
  validate_bindings(inequality_id, grid);
  return sweep(make_evaluator(inequality_id), grid, violation_tol, threads);
}

std::vector<std::vector<std::size_t>> connected_regions(const ScanResult& result,
                                                        const GridSpec& grid) {
  const int n1 = grid.var1.n;
  const int n2 = grid.var2 ? grid.var2->n : 1;
  std::set<std::size_t> open(result.violation_cells.begin(),
                             result.violation_cells.end());
  std::vector<std::vector<std::size_t>> regions;
  while (!open.empty()) {
    std::deque<std::size_t> queue{*open.begin()};
    open.erase(open.begin());
    std::vector<std::size_t> component;
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      component.push_back(idx);
      const int i = static_cast<int>(idx) / n2;
      const int j = static_cast<int>(idx) % n2;
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int ni = i + di[k], nj = j + dj[k];
        if (ni < 0 || ni >= n1 || nj < 0 || nj >= n2) continue;
        const std::size_t nidx = static_cast<std::size_t>(ni) * n2 + nj;
        const auto it = open.find(nidx);
        if (it != open.end()) {
          open.erase(it);
          queue.push_back(nidx);
        }
      }
    }
    std::sort(component.begin(), component.end());
    regions.push_back(std::move(component));
  }
  std::sort(regions.begin(), regions.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return regions;
}

std::pair<double, double> maximize_1d(const std::function<double(double)>& f,
                                      double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("maximize_1d: needs lo < hi");
  if (tol < 1e-12) throw std::invalid_argument("maximize_1d: tol >= 1e-12");

  constexpr int kCoarse = 256;
  int best_k = 0;
  double best_f = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kCoarse; ++k) {
    const double x = lo + (hi - lo) * k / (kCoarse - 1);
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_k = k;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best_k - 1) / (kCoarse - 1);
  double b = lo + (hi - lo) * std::min(kCoarse - 1, best_k + 1) / (kCoarse - 1);

  const double gr = (std::sqrt(5.0) + 1.0) / 2.0;
  double c = b - (b - a) / gr;
  double d = a + (b - a) / gr;
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) / gr;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) / gr;
      fd = f(d);
    }
  }
  const double xm = (a + b) / 2;
  const double fm = f(xm);
  if (fm >= best_f) return {xm, fm};
  return {lo + (hi - lo) * best_k / (kCoarse - 1), best_f};
}

double threshold_bisect(const std::function<double(double)>& g, double lo,
                        double hi, double target, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("threshold_bisect: needs lo < hi");
  if (tol <= 0) throw std::invalid_argument("threshold_bisect: tol > 0");
  double glo = g(lo) - target;
  double ghi = g(hi) - target;
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0) == (ghi > 0)) {
    throw NoSignChange("threshold_bisect: g - target has the same sign at both ends");
  }
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2;
    const double gm = g(mid) - target;
    if (gm == 0.0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

} // namespace gur::scan
