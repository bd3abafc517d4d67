#include "covchan/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace covchan {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

Vector pure_state_from_angles(const RealVector& x, int d) {
  // x holds d-1 hyperspherical angles followed by d-1 relative phases.
  Vector psi(d);
  double tail = 1.0;
  for (int i = 0; i < d - 1; ++i) {
    psi(i) = tail * std::cos(x(i));
    tail *= std::sin(x(i));
  }
  psi(d - 1) = tail;
  for (int i = 1; i < d; ++i) {
    psi(i) *= std::exp(Complex(0.0, x(d - 2 + i)));
  }
  return psi;
}

struct SimplexResult {
  double value = 0.0;
  RealVector point;
};

// Nelder-Mead with standard coefficients; terminates when the simplex
// value spread drops below tol or the iteration budget runs out.
SimplexResult nelder_mead(const std::function<double(const RealVector&)>& f, const RealVector& x0,
                          double scale, double tol, int max_iter) {
  const int n = static_cast<int>(x0.size());
  std::vector<RealVector> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (int i = 0; i < n; ++i) pts[i + 1](i) += scale;
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  for (int it = 0; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    if (vals[order[n]] - vals[order[0]] < tol) break;

    int worst = order[n];
    RealVector centroid = RealVector::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[order[i]];
    centroid /= n;

    RealVector xr = centroid + (centroid - pts[worst]);
    double fr = f(xr);
    if (fr < vals[order[0]]) {
      RealVector xe = centroid + 2.0 * (centroid - pts[worst]);
      double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[order[n - 1]]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      RealVector xc = centroid + 0.5 * (pts[worst] - centroid);
      double fc = f(xc);
      if (fc < vals[worst]) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          int k = order[i];
          pts[k] = pts[order[0]] + 0.5 * (pts[k] - pts[order[0]]);
          vals[k] = f(pts[k]);
        }
      }
    }
  }
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
  return {vals[order[0]], pts[order[0]]};
}

}  // namespace

double von_neumann_entropy(const Matrix& rho) {
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-10) {
    throw std::invalid_argument("entropy input must have unit trace");
  }
  EigResult eig = hermitian_eig(rho);
  double s = 0.0;
  for (int i = 0; i < eig.values.size(); ++i) {
    double lam = eig.values(i);
    if (lam < -1e-10) {
      throw std::invalid_argument("entropy input has negative eigenvalue " + std::to_string(lam));
    }
    s -= xlog2x(std::max(lam, 0.0));
  }
  return s;
}

double holevo_quantity(const Channel& ch, const Ensemble& ens) {
  if (ens.states.size() != ens.probs.size() || ens.states.empty()) {
    throw std::invalid_argument("ensemble states and probabilities must pair up");
  }
  double total = 0.0;
  for (double p : ens.probs) {
    if (p < -1e-12) throw std::invalid_argument("ensemble probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("ensemble probabilities must sum to 1");
  }
  Matrix avg = Matrix::Zero(ch.d, ch.d);
  double cond = 0.0;
  for (size_t i = 0; i < ens.states.size(); ++i) {
    if (ens.states[i].rows() != ch.d || ens.states[i].cols() != ch.d) {
      throw std::invalid_argument("ensemble state dimension does not match the channel");
    }
    Matrix out = covchan::apply(ch, ens.states[i]);
    double p = std::max(ens.probs[i], 0.0);
    avg += p * out;
    if (p > 0.0) cond += p * von_neumann_entropy(out);
  }
  double chi = von_neumann_entropy(avg) - cond;
  return chi < 0.0 && chi > -1e-9 ? 0.0 : chi;
}

MinEntropyResult min_output_entropy(const Channel& ch, int restarts, double tol,
                                    std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("min_output_entropy needs restarts >= 1");
  Classification cls = classify(ch);
  if (!cls.cp || !cls.tp) {
    throw std::invalid_argument("minimum output entropy requires a CP trace-preserving channel");
  }
  const int d = ch.d;
  const int n = 2 * (d - 1);
  auto objective = [&](const RealVector& x) {
    Vector psi = pure_state_from_angles(x, d);
    return von_neumann_entropy(covchan::apply(ch, psi * psi.adjoint()));
  };

  Rng rng(seed);
  std::uniform_real_distribution<double> theta(0.0, M_PI);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

  double best = std::numeric_limits<double>::infinity();
  RealVector best_x = RealVector::Zero(n);
  std::vector<double> finals;
  for (int r = 0; r < restarts; ++r) {
    RealVector x0(n);
    for (int i = 0; i < d - 1; ++i) x0(i) = theta(rng);
    for (int i = d - 1; i < n; ++i) x0(i) = phase(rng);
    SimplexResult res = nelder_mead(objective, x0, 0.4, tol, 2000);
    finals.push_back(res.value);
    if (res.value < best) {
      best = res.value;
      best_x = res.point;
    }
  }
  // Two polish passes shrink the simplex around the best point found.
  for (double scale : {0.05, 0.005}) {
    SimplexResult res = nelder_mead(objective, best_x, scale, tol * 1e-2, 2000);
    if (res.value < best) {
      best = res.value;
      best_x = res.point;
    }
  }

  MinEntropyResult out;
  out.s_min = best;
  out.minimizer = pure_state_from_angles(best_x, d);
  fix_phase(out.minimizer);
  for (double v : finals) {
    if (v <= best + 1e-7) ++out.restarts_converged;
  }
  return out;
}

CapacityReport covariant_capacity(const Channel& ch, std::uint64_t seed, int restarts) {
  MinEntropyResult res = min_output_entropy(ch, restarts, 1e-10, seed);
  CapacityReport rep;
  rep.s_min = res.s_min;
  rep.minimizer = res.minimizer;
  rep.capacity = std::log2(static_cast<double>(ch.d)) - res.s_min;
  rep.method = "optimizer";
  rep.restarts_converged = res.restarts_converged;
  return rep;
}

double group_average_check(const Channel& ch, const FiniteGroupRep& d1, const FiniteGroupRep& d2,
                           const Matrix& rho) {
  if (d1.dim != ch.d || d2.dim != ch.d) {
    throw std::invalid_argument("group representation dimension does not match the channel");
  }
  if (rho.rows() != ch.d || rho.cols() != ch.d) {
    throw std::invalid_argument("state dimension does not match the channel");
  }
  Matrix out = covchan::apply(ch, rho);
  Matrix avg = Matrix::Zero(ch.d, ch.d);
  for (const Matrix& g : d2.elements) {
    avg += g * out * g.adjoint();
  }
  avg /= static_cast<double>(d2.elements.size());
  return (avg - Matrix::Identity(ch.d, ch.d) / static_cast<double>(ch.d)).norm();
}

double closed_form_capacity(const std::string& family, const ParamMap& params, bool force) {
  const double log2_3 = std::log2(3.0);
  auto real_p = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) return 0.0;
    if (std::abs(it->second.imag()) > 1e-10) {
      throw std::invalid_argument("parameter '" + key + "' must be real");
    }
    return it->second.real();
  };
  if (family == "symmetric-pauli") {
    double q[3] = {real_p("q0"), real_p("q1"), real_p("q2")};
    double sum = q[0] + q[1] + q[2];
    if (std::abs(sum - 1.0) > 1e-9 || std::min({q[0], q[1], q[2]}) < -1e-12) {
      throw std::invalid_argument(
          "closed-form capacity needs coset weights q forming a probability distribution");
    }
    return log2_3 + xlog2x(q[0]) + xlog2x(q[1]) + xlog2x(q[2]);
  }
  if (family == "su3-8") {
    auto it = params.find("p");
    if (it == params.end()) throw std::invalid_argument("family 'su3-8' requires parameter 'p'");
    double p = it->second.real();
    if (!force && (p < -1e-12 || p > 0.75 + 1e-12)) {
      throw std::invalid_argument(
          "closed-form capacity for 'su3-8' requires p in the completely positive range "
          "[0, 3/4]; pass force to evaluate anyway");
    }
    double t = 1.0 - p;
    return log2_3 + (t != 0.0 ? t * std::log2(t) : 0.0) +
           (p != 0.0 ? p * std::log2(p / 2.0) : 0.0);
  }
  if (family == "su3-6") {
    auto it = params.find("p");
    if (it == params.end()) throw std::invalid_argument("family 'su3-6' requires parameter 'p'");
    double p = it->second.real();
    if (!force && (p < -1e-12 || p > 1.0 + 1e-12)) {
      throw std::invalid_argument(
          "closed-form capacity for 'su3-6' requires p in the completely positive range "
          "[0, 1]; pass force to evaluate anyway");
    }
    double half = (2.0 - p) / 2.0;
    return log2_3 + (p != 0.0 ? (p / 2.0) * std::log2(p / 2.0) : 0.0) +
           (half != 0.0 ? half * std::log2(half / 2.0) : 0.0);
  }
  throw std::invalid_argument(
      "closed-form capacity is available for families 'symmetric-pauli', 'su3-8', 'su3-6'");
}

}  // namespace covchan
