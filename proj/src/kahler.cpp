#include "nilorb/kahler.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "nilorb/fd.hpp"

namespace nilorb {

namespace {

const Complex kI(0, 1);

double pow_int(double x, int e) {
  double v = 1.0;
  for (int i = 0; i < e; ++i) v *= x;
  return v;
}

// Jacobian J(u,i) = d eta_{i+1} / d u and Hessians H_i(u,v) of the invariant
// functions in the orbit parameters, rows/cols ordered (r,s,t).
struct EtaDerivatives {
  Eigen::Matrix3d jac;
  std::array<Eigen::Matrix3d, 3> hess;
};

EtaDerivatives eta_derivatives_generic(double k2, double r, double s, double t) {
  EtaDerivatives out;
  const double u[3] = {r, s, t};
  for (int i = 0; i < 3; ++i) {
    const double pref = std::pow(2.0, i + 2) * k2;  // 2^{i+2} k^2
    const int d = 2 * (i + 1);
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    for (int a = 0; a < 3; ++a) {
      out.jac(a, i) = pref * d * pow_int(u[a], d - 1);
      h(a, a) = pref * d * (d - 1) * pow_int(u[a], d - 2);
    }
    out.hess[i] = h;
  }
  return out;
}

EtaDerivatives eta_derivatives_so7(double r, double s, double t) {
  EtaDerivatives out;
  const double r2 = r * r, s2 = s * s, t2 = t * t;
  const double w = s2 + t2;

  out.jac(0, 0) = 40 * r;
  out.jac(1, 0) = 20 * s;
  out.jac(2, 0) = 20 * t;
  out.hess[0] = Eigen::Vector3d(40, 20, 20).asDiagonal();

  out.jac(0, 1) = 160 * r2 * r + 160 * r * t2;
  out.jac(1, 1) = 80 * s * w;
  out.jac(2, 1) = 160 * r2 * t + 80 * t * w;
  Eigen::Matrix3d h2;
  h2 << 480 * r2 + 160 * t2, 0, 320 * r * t,
        0, 80 * (3 * s2 + t2), 160 * s * t,
        320 * r * t, 160 * s * t, 160 * r2 + 80 * s2 + 240 * t2;
  out.hess[1] = h2;

  out.jac(0, 2) = 480 * pow_int(r, 5) + 1440 * r2 * r * t2 + 480 * r * t2 * w;
  out.jac(1, 2) = 480 * r2 * s * t2 + 240 * s * w * w;
  out.jac(2, 2) = 720 * pow_int(r, 4) * t + 480 * r2 * s2 * t + 960 * r2 * t2 * t +
                  240 * t * w * w;
  Eigen::Matrix3d h3;
  h3(0, 0) = 2400 * pow_int(r, 4) + 4320 * r2 * t2 + 480 * s2 * t2 + 480 * t2 * t2;
  h3(1, 1) = 480 * r2 * t2 + 240 * w * w + 960 * s2 * w;
  h3(2, 2) = 720 * pow_int(r, 4) + 480 * r2 * s2 + 2880 * r2 * t2 + 240 * w * w +
             960 * t2 * w;
  h3(0, 1) = h3(1, 0) = 960 * r * s * t2;
  h3(0, 2) = h3(2, 0) = 2880 * r2 * r * t + 960 * r * t * w + 960 * r * t2 * t;
  h3(1, 2) = h3(2, 1) = 960 * r2 * s * t + 960 * s * t * w;
  out.hess[2] = h3;
  return out;
}

// Parameter-space gradient and Hessian of the potential.
void param_derivatives(const PotentialSpec& spec, double r, double s, double t,
                       Eigen::Vector3d& grad, Eigen::Matrix3d& hess) {
  if (spec.kind == PotentialKind::Generic) {
    const double a = 16.0 * spec.k_squared * spec.k_squared;
    const double u[3] = {r, s, t};
    hess = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i) {
      double root = std::sqrt(a + spec.c / (u[i] * u[i]));
      grad(i) = root;
      hess(i, i) = -spec.c / (u[i] * u[i] * u[i] * root);
    }
    return;
  }
  auto f = [&](double rr, double ss, double tt) {
    return so7_potential(rr, ss, tt, spec.c);
  };
  const double u[3] = {r, s, t};
  auto at = [&](int a, double x, int b, double y) {
    double v[3] = {r, s, t};
    v[a] = x;
    if (b >= 0) v[b] = y;
    return f(v[0], v[1], v[2]);
  };
  for (int a = 0; a < 3; ++a) {
    grad(a) = fd_first([&](double x) { return at(a, x, -1, 0); }, u[a], 1e-5 * u[a]);
    hess(a, a) =
        fd_second([&](double x) { return at(a, x, -1, 0); }, u[a], 1e-3 * u[a]);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      hess(a, b) = hess(b, a) =
          fd_mixed([&](double x, double y) { return at(a, x, b, y); }, u[a], u[b],
                   1e-3 * u[a], 1e-3 * u[b]);
    }
}

std::vector<double> cubic_real_roots(double e1, double e2, double e3) {
  // x^3 - e1 x^2 + e2 x - e3
  Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
  comp(1, 0) = comp(2, 1) = 1.0;
  comp(0, 2) = e3;
  comp(1, 2) = -e2;
  comp(2, 2) = e1;
  Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
  std::vector<double> roots;
  for (int i = 0; i < 3; ++i) {
    Complex ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-6 * (1.0 + std::abs(ev)))
      throw std::invalid_argument("invariants do not come from real parameters");
    roots.push_back(std::max(ev.real(), 0.0));
  }
  return roots;
}

}  // namespace

TangentVector tangent(const AlgebraElement& A, const AlgebraElement& X) {
  return TangentVector{A, bracket(A, X)};
}

PotentialDerivatives potential_derivatives(const PotentialSpec& spec, double r,
                                           double s, double t) {
  const double gap = 1e-4 * (r + s + t);
  if (std::abs(r - s) < gap || std::abs(r - t) < gap || std::abs(s - t) < gap)
    throw std::invalid_argument(
        "potential derivatives need pairwise distinct parameters");

  PotentialDerivatives out;
  out.rho = potential_value(spec, r, s, t);

  EtaDerivatives ed = (spec.kind == PotentialKind::Generic)
                          ? eta_derivatives_generic(spec.k_squared, r, s, t)
                          : eta_derivatives_so7(r, s, t);
  Eigen::Vector3d pgrad;
  Eigen::Matrix3d phess;
  param_derivatives(spec, r, s, t, pgrad, phess);

  out.grad = ed.jac.colPivHouseholderQr().solve(pgrad);

  // rho_{uv} = sum_{i<=j} h_{ij} (J_ui J_vj + [i!=j] J_uj J_vi)
  //          + sum_i grad_i H_i(u,v); unknowns ordered 11,22,33,12,13,23.
  const int pair_u[6] = {0, 1, 2, 0, 0, 1};
  const int pair_v[6] = {0, 1, 2, 1, 2, 2};
  Eigen::Matrix<double, 6, 6> K;
  Eigen::Matrix<double, 6, 1> rhs;
  for (int row = 0; row < 6; ++row) {
    const int u = pair_u[row], v = pair_v[row];
    for (int col = 0; col < 6; ++col) {
      const int i = pair_u[col], j = pair_v[col];
      double coeff = ed.jac(u, i) * ed.jac(v, j);
      if (i != j) coeff += ed.jac(u, j) * ed.jac(v, i);
      K(row, col) = coeff;
    }
    double b = phess(u, v);
    for (int i = 0; i < 3; ++i) b -= out.grad(i) * ed.hess[i](u, v);
    rhs(row) = b;
  }
  // Row equilibration keeps the solve well scaled across the wide dynamic
  // range of the invariant derivatives.
  for (int row = 0; row < 6; ++row) {
    double m = K.row(row).cwiseAbs().maxCoeff();
    if (m == 0.0) throw std::logic_error("degenerate invariant Jacobian");
    K.row(row) /= m;
    rhs(row) /= m;
  }
  Eigen::Matrix<double, 6, 1> h = K.fullPivLu().solve(rhs);
  if (!rhs.isZero() && (K * h - rhs).norm() > 1e-8 * rhs.norm())
    throw std::logic_error("invariant Hessian solve is ill conditioned");
  out.hess << h(0), h(3), h(4), h(3), h(1), h(5), h(4), h(5), h(2);
  return out;
}

std::array<double, 3> invariant_params(const PotentialSpec& spec,
                                       const AlgebraElement& X) {
  if (spec.kind == PotentialKind::So7) {
    const double z1 = zeta(X, 1), z2 = zeta(X, 2), z3 = zeta(X, 3);
    const double r = std::pow(std::max(z3, 0.0) / 4.0, 0.25);
    if (r <= 0) throw std::invalid_argument("degenerate so(7) point");
    const double Q = std::max(z1 * z1 - z2 - 2.0 * z3, 0.0);
    const double s = std::sqrt(Q) / (4.0 * r);
    const double t2 = z1 / 2.0 - 2.0 * r * r - s * s;
    return {r, s, std::sqrt(std::max(t2, 0.0))};
  }
  const double k2 = spec.k_squared;
  const double p1 = eta(X, 1) / (4.0 * k2);
  const double p2 = eta(X, 2) / (8.0 * k2);
  const double p3 = eta(X, 3) / (16.0 * k2);
  const double e1 = p1;
  const double e2 = (p1 * p1 - p2) / 2.0;
  const double e3 = (p1 * p1 * p1 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0;
  std::vector<double> sq = cubic_real_roots(e1, e2, e3);
  return {std::sqrt(sq[0]), std::sqrt(sq[1]), std::sqrt(sq[2])};
}

double rho_at(const PotentialSpec& spec, const AlgebraElement& X) {
  auto p = invariant_params(spec, X);
  return potential_value(spec, p[0], p[1], p[2]);
}

KahlerPoint kahler_point(const PotentialSpec& spec, const AlgebraElement& X) {
  auto p = invariant_params(spec, X);
  KahlerPoint pt{spec,
                 X,
                 potential_derivatives(spec, p[0], p[1], p[2]),
                 sigma(X),
                 {},
                 {},
                 {},
                 {},
                 {},
                 {},
                 {}};
  pt.XXp = bracket(pt.X, pt.Xp);
  pt.XXpX = multi_bracket({pt.X, pt.Xp, pt.X});
  pt.XpXXp = multi_bracket({pt.Xp, pt.X, pt.Xp});
  pt.ZX = zmap(pt.X);
  pt.ZXp = sigma(pt.ZX);
  pt.XXpXXp = multi_bracket({pt.X, pt.Xp, pt.X, pt.Xp});
  pt.XZX = bracket(pt.X, pt.ZX);
  return pt;
}

Complex kks_sigma(const AlgebraElement& A, const AlgebraElement& B,
                  const AlgebraElement& X) {
  return killing_inner(bracket(A, B), X);
}

double omega_I(const KahlerPoint& pt, const AlgebraElement& va,
               const AlgebraElement& vb) {
  const AlgebraElement& X = pt.X;
  const AlgebraElement& Xp = pt.Xp;
  AlgebraElement vbp = sigma(vb);
  const Eigen::Vector3d& g = pt.der.grad;
  const Eigen::Matrix3d& h = pt.der.hess;

  double out = 2.0 * g(0) * killing_inner(va, vbp).imag();

  AlgebraElement m2 =
      multi_bracket({Xp, X, vbp}) * 2.0 - multi_bracket({X, Xp, vbp});
  out += -4.0 * g(1) * killing_inner(va, m2).imag();

  AlgebraElement m3 = multi_bracket({X, X, Xp, Xp, vbp}) * -2.0 +
                      multi_bracket({X, Xp, X, Xp, vbp}) * 3.0 +
                      multi_bracket({X, Xp, Xp, X, vbp}) * 3.0 +
                      multi_bracket({Xp, X, X, Xp, vbp}) * 3.0 +
                      multi_bracket({Xp, X, Xp, X, vbp}) * -12.0 +
                      multi_bracket({Xp, Xp, X, X, vbp}) * 3.0;
  out += -2.0 * g(2) * killing_inner(va, m3).imag();

  const Complex c1 = killing_inner(va, Xp);
  const Complex c2 = killing_inner(va, pt.XpXXp);
  const Complex c3 = killing_inner(va, pt.ZX);
  const Complex d1 = killing_inner(vbp, X);
  const Complex d2 = killing_inner(vbp, pt.XXpX);
  const Complex d3 = killing_inner(vbp, pt.ZXp);

  out += 2.0 * h(0, 0) * (c1 * d1).imag();
  out += -4.0 * h(0, 1) * (c1 * d2 + c2 * d1).imag();
  out += 2.0 * h(0, 2) * (c1 * d3 + c3 * d1).imag();
  out += 8.0 * h(1, 1) * (c2 * d2).imag();
  out += -4.0 * h(1, 2) * (c2 * d3 + c3 * d2).imag();
  out += 2.0 * h(2, 2) * (c3 * d3).imag();
  return out;
}

AlgebraElement J_apply(const KahlerPoint& pt, const AlgebraElement& va) {
  const AlgebraElement& X = pt.X;
  const AlgebraElement& Xp = pt.Xp;
  AlgebraElement vap = sigma(va);
  const Eigen::Vector3d& g = pt.der.grad;
  const Eigen::Matrix3d& h = pt.der.hess;

  const Complex a1 = killing_inner(vap, X);
  const Complex a2 = killing_inner(vap, pt.XXpX);
  const Complex a3 = killing_inner(vap, pt.ZXp);

  AlgebraElement out = multi_bracket({X, vap}) * (-2.0 * g(0));
  out = out + (multi_bracket({X, Xp, X, vap}) * 2.0 -
               multi_bracket({X, X, Xp, vap})) *
                  (4.0 * g(1));
  out = out + (multi_bracket({X, X, X, Xp, Xp, vap}) * -2.0 +
               multi_bracket({X, X, Xp, X, Xp, vap}) * 3.0 +
               multi_bracket({X, X, Xp, Xp, X, vap}) * 3.0 +
               multi_bracket({X, Xp, Xp, X, X, vap}) * 3.0 +
               multi_bracket({X, Xp, X, Xp, X, vap}) * -12.0 +
               multi_bracket({X, Xp, X, X, Xp, vap}) * 3.0) *
                  (2.0 * g(2));
  out = out + pt.XXp * (-2.0 * h(0, 0) * a1);
  out = out + (pt.XXpXXp * a1 + pt.XXp * a2) * (4.0 * h(0, 1));
  out = out + (pt.XZX * a1 + pt.XXp * a3) * (-2.0 * h(0, 2));
  out = out + pt.XXpXXp * (-8.0 * h(1, 1) * a2);
  out = out + (pt.XZX * a2 + pt.XXpXXp * a3) * (4.0 * h(1, 2));
  out = out + pt.XZX * (-2.0 * h(2, 2) * a3);
  return out;
}

double metric_g(const KahlerPoint& pt, const AlgebraElement& va,
                const AlgebraElement& vb) {
  return omega_I(pt, va * kI, vb);
}

// Oriented as g(., J.) = -g(J., .), which pairs with the g = omega_I(I., .)
// convention so that the complex symplectic form decomposes as
// Sigma = omega_J + i omega_K.
double omega_J(const KahlerPoint& pt, const AlgebraElement& va,
               const AlgebraElement& vb) {
  return -metric_g(pt, J_apply(pt, va), vb);
}

double omega_K(const KahlerPoint& pt, const AlgebraElement& va,
               const AlgebraElement& vb) {
  return -metric_g(pt, J_apply(pt, va) * kI, vb);
}

std::vector<AlgebraElement> tangent_generators(const AlgebraElement& X) {
  const LieAlgebra& g = *X.owner();
  const int nn = g.matrix_size * g.matrix_size;
  Matrix cols(nn, g.complex_dimension);
  for (int k = 0; k < g.complex_dimension; ++k) {
    Matrix br = g.basis[k] * X.matrix() - X.matrix() * g.basis[k];
    cols.col(k) = Eigen::Map<const Vector>(br.data(), nn);
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(cols);
  qr.setThreshold(1e-10);
  const int rank = (int)qr.rank();
  std::vector<AlgebraElement> out;
  for (int k = 0; k < rank; ++k)
    out.emplace_back(X.owner(), g.basis[qr.colsPermutation().indices()(k)]);
  return out;
}

double omega_I_fd(const PotentialSpec& spec, const AlgebraElement& X,
                  const AlgebraElement& A, const AlgebraElement& B) {
  // Inner step well above the roundoff floor: the outer difference divides
  // the inner evaluation noise by h_out.
  const double h_in = 1e-4, h_out = 3e-3;
  // ell_G(Y) = (I d rho)(xi_G)|_Y = -d/du rho(Ad(exp(u iG)) Y).
  auto ell = [&](const AlgebraElement& G, const AlgebraElement& Y) {
    return -fd_first(
        [&](double u) { return rho_at(spec, adjoint_flow(G * kI, u, Y)); }, 0.0,
        h_in);
  };
  double tA = fd_first(
      [&](double t) { return ell(B, adjoint_flow(A, t, X)); }, 0.0, h_out);
  double tB = fd_first(
      [&](double t) { return ell(A, adjoint_flow(B, t, X)); }, 0.0, h_out);
  double tC = ell(bracket(A, B), X);
  return -0.5 * (tA - tB + tC);
}

double omega_closedness_fd(const PotentialSpec& spec, const AlgebraElement& X,
                           const AlgebraElement& A, const AlgebraElement& B,
                           const AlgebraElement& C) {
  const double h = 1e-2;
  auto w = [&](const AlgebraElement& Y, const AlgebraElement& P,
               const AlgebraElement& Q) {
    KahlerPoint kp = kahler_point(spec, Y);
    return omega_I(kp, bracket(P, Y), bracket(Q, Y));
  };
  auto dir = [&](const AlgebraElement& G, const AlgebraElement& P,
                 const AlgebraElement& Q) {
    return fd_first(
        [&](double t) { return w(adjoint_flow(G, t, X), P, Q); }, 0.0, h);
  };
  // The fields xi_A(Y) = [A, Y] satisfy [xi_A, xi_B] = -xi_{[A,B]}.
  double terms[6];
  terms[0] = dir(A, B, C);
  terms[1] = -dir(B, A, C);
  terms[2] = dir(C, A, B);
  KahlerPoint kp = kahler_point(spec, X);
  terms[3] = omega_I(kp, bracket(bracket(A, B), X), bracket(C, X));
  terms[4] = -omega_I(kp, bracket(bracket(A, C), X), bracket(B, X));
  terms[5] = omega_I(kp, bracket(bracket(B, C), X), bracket(A, X));
  double sum = 0.0, scale = 1.0;
  for (double v : terms) {
    sum += v;
    scale += std::abs(v);
  }
  return std::abs(sum) / scale;
}

CheckReport verify_hyperkahler(const OrbitSpec& orbit, const PotentialSpec& spec,
                               double r, double s, double t,
                               const HyperkahlerOptions& opts) {
  OrbitPoint point = scaled_point(orbit, r, s, t);
  const AlgebraElement& X = point.element;
  KahlerPoint pt = kahler_point(spec, X);

  std::vector<AlgebraElement> gens = tangent_generators(X);
  std::vector<AlgebraElement> values;
  for (const auto& g : gens) values.push_back(bracket(g, X));

  // (a) J^2 = -1 on the real tangent basis {v, iv}.
  double j2 = 0.0;
  for (const auto& v : values) {
    for (Complex unit : {Complex(1, 0), kI}) {
      AlgebraElement u = v * unit;
      AlgebraElement w = J_apply(pt, J_apply(pt, u)) + u;
      j2 = std::max(j2, w.matrix().norm() / (1.0 + u.matrix().norm()));
    }
  }

  // (b) positivity of g on the real tangent basis.
  const int d = (int)values.size();
  Eigen::MatrixXd gram(2 * d, 2 * d);
  std::vector<AlgebraElement> real_basis;
  for (const auto& v : values) real_basis.push_back(v);
  for (const auto& v : values) real_basis.push_back(v * kI);
  for (int a = 0; a < 2 * d; ++a)
    for (int b = a; b < 2 * d; ++b)
      gram(a, b) = gram(b, a) = metric_g(pt, real_basis[a], real_basis[b]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const double min_eig = eig.eigenvalues().minCoeff();
  const double gram_scale = gram.cwiseAbs().maxCoeff();
  const double negativity = std::max(0.0, -min_eig) / (1.0 + gram_scale);

  // (c) Sigma = omega_J + i omega_K on generator pairs.
  double kks = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Complex s0 = kks_sigma(gens[a], gens[b], X);
      Complex w(omega_J(pt, values[a], values[b]),
                omega_K(pt, values[a], values[b]));
      kks = std::max(kks, std::abs(s0 - w) / (1.0 + std::abs(s0)));
    }

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_compact = [&]() {
    const LieAlgebra& g = *X.owner();
    Matrix m = Matrix::Zero(g.matrix_size, g.matrix_size);
    for (const auto& b : g.compact_basis) m += gauss(rng) * b;
    m /= (1.0 + m.norm());
    return AlgebraElement(X.owner(), m);
  };

  // (e) closed form against the flow-based finite-difference oracle.
  double fd_agree = 0.0;
  for (int k = 0; k < opts.fd_pairs; ++k) {
    AlgebraElement A = random_compact(), B = random_compact();
    double closed = omega_I(pt, bracket(A, X), bracket(B, X));
    double oracle = omega_I_fd(spec, X, A, B);
    fd_agree = std::max(fd_agree, std::abs(closed - oracle) /
                                      (1.0 + std::abs(closed) + std::abs(oracle)));
  }

  // (d) d omega_I = 0, spot-checked on random field triples.
  double closed = 0.0;
  for (int k = 0; k < opts.closedness_triples; ++k)
    closed = std::max(closed, omega_closedness_fd(spec, X, random_compact(),
                                                  random_compact(),
                                                  random_compact()));

  CheckReport rep;
  rep.check_name = "hyperkahler-structure";
  rep.anchor = "quaternionic-relations";
  const int rank_or_size = orbit.algebra->family == Family::SP
                               ? orbit.algebra->matrix_size / 2
                               : orbit.algebra->matrix_size;
  rep.inputs = {{"algebra", family_name(orbit.algebra->family) +
                                std::to_string(rank_or_size)},
                {"orbit", partition_to_string(orbit.label)},
                {"params", std::to_string(r) + "," + std::to_string(s) + "," +
                               std::to_string(t)},
                {"c", std::to_string(spec.c)},
                {"seed", std::to_string(opts.seed)}};
  rep.tolerance = opts.tol;
  rep.residuals = {{"J_squared_plus_one", j2},
                   {"metric_gram_negativity", negativity},
                   {"kks_compatibility", kks},
                   {"omega_fd_agreement", fd_agree},
                   {"omega_closedness", closed}};
  // The closedness spot check carries the noise of an outer finite
  // difference over an already-approximate form, so it gets its own guard.
  rep.status = CheckStatus::Pass;
  if (j2 > opts.tol || negativity > opts.tol || kks > opts.tol ||
      fd_agree > opts.tol || closed > std::max(opts.tol, opts.closedness_tol))
    rep.status = CheckStatus::Fail;
  return rep;
}

}  // namespace nilorb
