#include "rncdr/sim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "rncdr/error.hpp"

namespace rncdr {

namespace {

struct Numeric {
  size_t m = 0, r = 0;
  Eigen::MatrixXd n;  // m x r
  Eigen::MatrixXd f;  // r x m
  Eigen::VectorXd k;

  explicit Numeric(const KineticSystem& sys) : m(sys.net.m()), r(sys.net.r()), n(m, r), f(r, m), k(r) {
    RMatrix nm = sys.net.stoichiometric_matrix();
    RMatrix fm = numeric_orders(sys);
    auto kv = numeric_rate_constants(sys);
    for (size_t j = 0; j < r; ++j) {
      k(static_cast<long>(j)) = kv[j];
      for (size_t i = 0; i < m; ++i) {
        n(static_cast<long>(i), static_cast<long>(j)) = nm(i, j).get_d();
        f(static_cast<long>(j), static_cast<long>(i)) = fm(j, i).get_d();
      }
    }
  }

  Eigen::VectorXd rates(const Eigen::VectorXd& x) const {
    Eigen::VectorXd lx = x.array().log().matrix();
    Eigen::VectorXd out = (f * lx).array().exp().matrix();
    return out.cwiseProduct(k);
  }
  Eigen::VectorXd rhs(const Eigen::VectorXd& x) const { return n * rates(x); }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Eigen::VectorXd kx = rates(x);
    Eigen::MatrixXd d = kx.asDiagonal() * f;
    for (long s = 0; s < static_cast<long>(m); ++s) d.col(s) /= x(s);
    return n * d;
  }
  // Net formation rate of each species relative to its gross turnover.
  double residual(const Eigen::VectorXd& x) const {
    Eigen::VectorXd kx = rates(x);
    Eigen::VectorXd net = n * kx;
    Eigen::VectorXd gross = n.cwiseAbs() * kx;
    double out = 0;
    for (long i = 0; i < net.size(); ++i)
      if (gross(i) > 0) out = std::max(out, std::abs(net(i)) / gross(i));
    return out;
  }
};

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<long>(v.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

void check_positive(const std::vector<double>& x, size_t m) {
  if (x.size() != m) fail(ErrorKind::InvalidInput, "state has the wrong dimension");
  for (double v : x)
    if (!(v > 0) || !std::isfinite(v)) fail(ErrorKind::InvalidInput, "state must be positive and finite");
}

// Orthonormal basis of S as columns.
Eigen::MatrixXd subspace_basis(const ReactionNetwork& net) {
  auto s = stoichiometric_subspace(net);
  Eigen::MatrixXd b(static_cast<long>(net.m()), static_cast<long>(s.dim()));
  for (size_t c = 0; c < s.dim(); ++c)
    for (size_t i = 0; i < net.m(); ++i) b(static_cast<long>(i), static_cast<long>(c)) = s.vectors[c][i].get_d();
  if (s.dim() == 0) return b;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
  return qr.householderQ() * Eigen::MatrixXd::Identity(b.rows(), b.cols());
}

// Dormand-Prince tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;

}  // namespace

double steady_state_residual(const KineticSystem& sys, const std::vector<double>& x) {
  Numeric num(sys);
  check_positive(x, num.m);
  return num.residual(to_eigen(x));
}

Trajectory integrate(const KineticSystem& sys, const std::vector<double>& x0, double t_end,
                     const IntegrateOptions& opt) {
  Numeric num(sys);
  check_positive(x0, num.m);
  if (!(t_end >= 0)) fail(ErrorKind::InvalidInput, "t_end must be non-negative");
  Trajectory tr;
  tr.conservation_laws = left_kernel(sys.net.stoichiometric_matrix());
  std::vector<std::vector<double>> laws;
  for (const auto& w : tr.conservation_laws) laws.push_back(to_double(w));
  auto record = [&](double t, const Eigen::VectorXd& x) {
    tr.t.push_back(t);
    tr.x.push_back(to_std(x));
    std::vector<double> tot;
    for (const auto& w : laws) {
      double s = 0;
      for (size_t i = 0; i < w.size(); ++i) s += w[i] * x(static_cast<long>(i));
      tot.push_back(s);
    }
    tr.totals.push_back(std::move(tot));
  };

  Eigen::VectorXd x = to_eigen(x0);
  double t = 0, h = std::min(opt.initial_step, t_end > 0 ? t_end : opt.initial_step);
  record(t, x);
  Eigen::VectorXd k1 = num.rhs(x), k2, k3, k4, k5, k6, k7, y, xn;
  while (t < t_end) {
    if (tr.accepted + tr.rejected > opt.max_steps) fail(ErrorKind::StepSizeUnderflow, "step budget exhausted");
    if (h < opt.min_step * std::max(1.0, t)) fail(ErrorKind::StepSizeUnderflow, "step size underflow");
    if (t + h > t_end) h = t_end - t;
    auto positive = [](const Eigen::VectorXd& v) { return (v.array() > 0).all() && v.allFinite(); };
    bool ok = true;
    y = x + h * a21 * k1;
    ok = positive(y);
    if (ok) {
      k2 = num.rhs(y);
      y = x + h * (a31 * k1 + a32 * k2);
      ok = positive(y);
    }
    if (ok) {
      k3 = num.rhs(y);
      y = x + h * (a41 * k1 + a42 * k2 + a43 * k3);
      ok = positive(y);
    }
    if (ok) {
      k4 = num.rhs(y);
      y = x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      ok = positive(y);
    }
    if (ok) {
      k5 = num.rhs(y);
      y = x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      ok = positive(y);
    }
    if (ok) {
      k6 = num.rhs(y);
      xn = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      ok = positive(xn);
    }
    if (!ok) {
      ++tr.rejected;
      h *= 0.25;
      continue;
    }
    k7 = num.rhs(xn);
    Eigen::VectorXd err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double en = 0;
    for (long i = 0; i < err.size(); ++i) {
      double sc = opt.atol + opt.rtol * std::max(std::abs(x(i)), std::abs(xn(i)));
      en = std::max(en, std::abs(err(i)) / sc);
    }
    if (en <= 1.0) {
      t = (t_end - (t + h) < 1e-15 * std::max(1.0, t_end)) ? t_end : t + h;
      x = xn;
      k1 = k7;
      ++tr.accepted;
      if (opt.record || t >= t_end) record(t, x);
    } else {
      ++tr.rejected;
    }
    double factor = en == 0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
    h *= factor;
  }
  if (!opt.record && tr.t.size() > 2) {
    tr.t = {tr.t.front(), tr.t.back()};
    tr.x = {tr.x.front(), tr.x.back()};
    tr.totals = {tr.totals.front(), tr.totals.back()};
  }
  return tr;
}

std::vector<double> find_steady_state(const KineticSystem& sys, const std::vector<double>& x0,
                                      const SteadyStateOptions& opt) {
  Numeric num(sys);
  check_positive(x0, num.m);
  Eigen::MatrixXd b = subspace_basis(sys.net);
  const Eigen::VectorXd base = to_eigen(x0);

  auto newton = [&](Eigen::VectorXd x) -> Eigen::VectorXd {
    if (b.cols() == 0) return x;
    for (size_t it = 0; it < opt.newton_iterations; ++it) {
      if (num.residual(x) < opt.tolerance) return x;
      Eigen::VectorXd g = b.transpose() * num.rhs(x);
      Eigen::MatrixXd jg = b.transpose() * num.jacobian(x) * b;
      Eigen::VectorXd step = jg.fullPivLu().solve(-g);
      if (!step.allFinite()) break;
      double lambda = 1.0, g0 = g.norm();
      bool moved = false;
      for (int k = 0; k < 40; ++k, lambda *= 0.5) {
        Eigen::VectorXd cand = x + lambda * (b * step);
        if (!((cand.array() > 0).all())) continue;
        if ((b.transpose() * num.rhs(cand)).norm() < g0 || k == 39) {
          x = cand;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    return x;
  };

  Eigen::VectorXd x = newton(base);
  if (num.residual(x) < opt.tolerance) return to_std(x);
  Eigen::VectorXd cur = base;
  double horizon = 10.0;
  for (size_t round = 0; round < opt.integration_rounds; ++round, horizon *= 10) {
    IntegrateOptions io;
    io.record = false;
    io.rtol = 1e-10;
    auto tr = integrate(sys, to_std(cur), horizon, io);
    cur = to_eigen(tr.x.back());
    // Pull back onto the class of x0 to remove integration drift.
    if (b.cols() > 0) cur = base + b * (b.transpose() * (cur - base));
    if (!((cur.array() > 0).all())) cur = to_eigen(tr.x.back());
    x = newton(cur);
    if ((x.array() > 0).all() && num.residual(x) < opt.tolerance) return to_std(x);
  }
  fail(ErrorKind::NotConverged, "no steady state found within the iteration budget");
}

bool confirm_multistationarity(const KineticSystem& sys, const std::vector<double>& x1, const std::vector<double>& x2) {
  Numeric num(sys);
  check_positive(x1, num.m);
  check_positive(x2, num.m);
  Eigen::VectorXd a = to_eigen(x1), c = to_eigen(x2);
  if (num.residual(a) >= 1e-9 || num.residual(c) >= 1e-9) return false;
  Eigen::VectorXd diff = c - a;
  double scale = std::max(a.cwiseAbs().maxCoeff(), c.cwiseAbs().maxCoeff());
  if (diff.cwiseAbs().maxCoeff() <= 1e-6 * scale) return false;
  Eigen::MatrixXd b = subspace_basis(sys.net);
  Eigen::VectorXd off = diff - b * (b.transpose() * diff);
  return off.norm() < 1e-9 * std::max(1.0, diff.norm());
}

std::string trajectory_csv(const KineticSystem& sys, const Trajectory& tr) {
  std::ostringstream out;
  out.precision(17);
  out << "t";
  for (const auto& s : sys.net.species()) out << "," << s;
  for (size_t i = 0; i < tr.conservation_laws.size(); ++i) out << ",total_" << (i + 1);
  out << "\n";
  for (size_t k = 0; k < tr.t.size(); ++k) {
    out << tr.t[k];
    for (double v : tr.x[k]) out << "," << v;
    for (double v : tr.totals[k]) out << "," << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace rncdr
