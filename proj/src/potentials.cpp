#include "nilorb/potentials.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "nilorb/fd.hpp"

namespace nilorb {

namespace {

using Cx = std::complex<double>;

void require_positive(double v, const char* what) {
  if (!(v > 0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

double factor_potential_derivative(double s, double k2, double c) {
  require_positive(s, "s");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  return std::sqrt(16.0 * k2 * k2 + c / (s * s));
}

double factor_potential(double s, double k2, double c) {
  require_positive(s, "s");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  const double a = 16.0 * k2 * k2;
  if (c == 0.0) return 4.0 * k2 * (s - 1.0);
  auto F = [&](double x) {
    double root = std::sqrt(a * x * x + c);
    return root - std::sqrt(c) * std::log((std::sqrt(c) + root) / x);
  };
  return F(s) - F(1.0);
}

double generic_potential(double r, double s, double t, double k2, double c) {
  if (c == 0.0) {
    require_positive(r, "r");
    require_positive(s, "s");
    require_positive(t, "t");
    return 4.0 * k2 * (r + s + t);
  }
  return factor_potential(r, k2, c) + factor_potential(s, k2, c) +
         factor_potential(t, k2, c);
}

double quartic_solve(double e1, double e2, double e3) {
  double disc = e1 * e1 * e1 - 3.0 * e1 * e2 + 2.0 * e3;
  if (disc < 0) {
    if (disc < -1e-9 * (1.0 + std::abs(e1 * e1 * e1)))
      throw std::invalid_argument("invariants are not realizable");
    disc = 0.0;
  }
  const double alpha = std::sqrt(disc);
  // lambda^4 - 2 e1 lambda^2 - (8 alpha / sqrt(6)) lambda + (2 e2 - e1^2) = 0
  const double a2 = -2.0 * e1;
  const double a1 = -8.0 * alpha / std::sqrt(6.0);
  const double a0 = 2.0 * e2 - e1 * e1;

  Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
  comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
  comp(0, 3) = -a0;
  comp(1, 3) = -a1;
  comp(2, 3) = -a2;
  Eigen::EigenSolver<Eigen::Matrix4d> es(comp);

  double best = -1.0;
  for (int i = 0; i < 4; ++i) {
    Cx ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) < 1e-8 * (1.0 + std::abs(ev)) && ev.real() > best)
      best = ev.real();
  }
  if (best <= 0) throw std::invalid_argument("no positive real root");

  auto p = [&](double x) { return ((x * x + a2) * x + a1) * x + a0; };
  auto dp = [&](double x) { return (4.0 * x * x + 2.0 * a2) * x + a1; };
  for (int it = 0; it < 3; ++it) {
    double d = dp(best);
    if (std::abs(d) < 1e-14) break;
    best -= p(best) / d;
  }
  if (std::abs(p(best)) > 1e-9 * (1.0 + best * best * best * best))
    throw std::logic_error("quartic root did not converge");
  return best;
}

KappaChain kappa_chain(double eta1, double eta2, double eta3, double k2) {
  require_positive(k2, "k^2");
  KappaChain out{};
  const double e1 = eta1 / (4.0 * k2);
  const double e2 = eta2 / (8.0 * k2);
  const double e3 = eta3 / (16.0 * k2);
  out.eta1t = e1;
  out.eta2t = e2;
  out.eta3t = e3;

  double disc = e1 * e1 * e1 - 3.0 * e1 * e2 + 2.0 * e3;
  out.alpha = std::sqrt(std::max(disc, 0.0));
  out.beta = 9.0 * disc - 5.0 * e1 * e1 * e1 + 9.0 * e1 * e2;
  const double q = e1 * e1 - 3.0 * e2;
  out.psi = out.beta * out.beta + 2.0 * q * q * q;

  bool fallback = false;
  double rho = 0.0;
  Cx w = std::pow(Cx(out.beta) + std::sqrt(Cx(out.psi)), 1.0 / 3.0);
  if (std::abs(w) < 1e-6 * (1.0 + std::abs(e1))) {
    fallback = true;
  } else {
    Cx kappa = std::pow(2.0, 1.0 / 3.0) * w + 2.0 * e1 -
               std::pow(2.0, 2.0 / 3.0) * q / w;
    Cx rhoc = (2.0 * std::sqrt(2.0) * k2 / std::sqrt(3.0)) *
              (std::sqrt(kappa) +
               std::sqrt(12.0 * out.alpha / std::sqrt(kappa) + 6.0 * e1 - kappa));
    out.kappa = kappa.real();
    if (std::abs(rhoc.imag()) > 1e-8 * (1.0 + std::abs(rhoc)) ||
        std::abs(kappa.imag()) > 1e-8 * (1.0 + std::abs(kappa))) {
      fallback = true;
    } else {
      rho = rhoc.real();
    }
  }
  if (fallback) {
    // The closed chain degenerates (coincident parameters); the potential is
    // still 4 k^2 times the largest real root of the resolvent quartic.
    rho = 4.0 * k2 * quartic_solve(e1, e2, e3);
    out.kappa = 2.0 * e1;
  }
  out.rho = rho;
  out.used_quartic_fallback = fallback;
  return out;
}

double so7_potential(double r, double s, double t, double c) {
  require_positive(r, "r");
  require_positive(s, "s");
  require_positive(t, "t");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  const double q = 4.0 * r * r + s * s + t * t;
  const double h = c + std::sqrt(4.0 * r * r * s * s + q * c + c * c);
  const double root = std::sqrt(q + 2.0 * h);
  if (c == 0.0) return 10.0 * root;
  return 10.0 * (root + std::sqrt(c) * std::log(r * s) -
                 std::sqrt(c) * std::log(h + std::sqrt(c) * root));
}

double so7_potential_zeta(double z1, double z2, double z3, double c) {
  if (z1 <= 0 || z3 < 0) throw std::invalid_argument("invariants out of range");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  double q = z1 * z1 - z2 - 2.0 * z3;  // = 16 r^2 s^2 on the family
  if (q < 0) {
    if (q < -1e-9 * (1.0 + z1 * z1)) throw std::invalid_argument("invariants out of range");
    q = 0.0;
  }
  const double h =
      c + std::sqrt(q / 4.0 + c * (z1 / 2.0 + std::sqrt(z3)) + c * c);
  const double S = z1 + 2.0 * std::sqrt(z3) + 4.0 * h;
  const double root = std::sqrt(S);
  if (c == 0.0) return 10.0 / std::sqrt(2.0) * root;
  return 10.0 / std::sqrt(2.0) *
         (root - std::sqrt(2.0 * c) *
                     std::log((h + std::sqrt(c / 2.0) * root) /
                              (0.25 * std::sqrt(q))));
}

std::vector<double> so7_pde_residuals(double c, double r, double s, double t,
                                      double probe) {
  auto f = [&](double rr, double ss, double tt) {
    return so7_potential(rr, ss, tt, c) + probe * rr * ss * tt;
  };
  // First-derivative steps may be small (truncation dominates); the mixed
  // second differences need larger steps to keep roundoff of the double
  // difference below the 1e-6 residual scale.
  const double h1r = 1e-5 * r, h1s = 1e-5 * s, h1t = 1e-5 * t;
  const double h2r = 4e-3 * r, h2s = 4e-3 * s, h2t = 4e-3 * t;

  const double pr = fd_first([&](double x) { return f(x, s, t); }, r, h1r);
  const double ps = fd_first([&](double x) { return f(r, x, t); }, s, h1s);
  const double pt = fd_first([&](double x) { return f(r, s, x); }, t, h1t);
  const double ptt = fd_second([&](double x) { return f(r, s, x); }, t, h2t);
  const double prs =
      fd_mixed([&](double x, double y) { return f(x, y, t); }, r, s, h2r, h2s);
  const double prt =
      fd_mixed([&](double x, double y) { return f(x, s, y); }, r, t, h2r, h2t);
  const double pst =
      fd_mixed([&](double x, double y) { return f(r, x, y); }, s, t, h2s, h2t);

  auto rel = [](double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
  };

  std::vector<double> out;
  // Four coupled second-order identities, reported as one worst case.
  double m = 0.0;
  m = std::max(m, rel(ps * prs + pt * prt, 0.0));
  m = std::max(m, rel(ps * pst + pt * ptt, 0.0));
  m = std::max(m, rel(pr * prs + 4.0 * pt * pst, 0.0));
  m = std::max(m, rel(pr * prt + 4.0 * pt * ptt, 0.0));
  out.push_back(m);

  out.push_back(rel(t * (100.0 - pt * pt), (r * pr + s * ps) * pt));
  out.push_back(rel(t * (r * pr - s * ps), (4.0 * r * r - s * s) * pt));
  out.push_back(rel(s * s * (ps * ps + pt * pt - 100.0),
                    r * r * (pr * pr + 4.0 * pt * pt - 400.0)));
  out.push_back(rel(ps * ps + pt * pt, 100.0 * (1.0 + c / (s * s))));
  out.push_back(rel(pr * pr + 4.0 * pt * pt, 100.0 * (4.0 + c / (r * r))));

  const double q = 4.0 * r * r + s * s + t * t;
  const double rhs = std::sqrt(4.0 * r * r * s * s + c * q + c * c) + c + q / 2.0;
  out.push_back(rel(50.0 * t * t / (pt * pt), rhs));
  return out;
}

double potential_value(const PotentialSpec& spec, double r, double s, double t) {
  switch (spec.kind) {
    case PotentialKind::Generic:
      return generic_potential(r, s, t, spec.k_squared, spec.c);
    case PotentialKind::So7:
      return so7_potential(r, s, t, spec.c);
    case PotentialKind::Sl2Factor:
      return factor_potential(s, spec.k_squared, spec.c);
  }
  throw std::invalid_argument("unknown potential kind");
}

}  // namespace nilorb
