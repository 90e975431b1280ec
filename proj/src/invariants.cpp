#include "nilorb/invariants.hpp"

#include <cmath>

namespace nilorb {

namespace {

double assert_real(Complex z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z)))
    throw std::logic_error(std::string(what) + " has a non-vanishing imaginary part");
  return z.real();
}

}  // namespace

double eta(const AlgebraElement& X, int i) {
  if (X.matrix().cwiseAbs().maxCoeff() == 0.0) throw std::invalid_argument("eta of zero");
  AlgebraElement Xp = sigma(X);
  Complex val;
  switch (i) {
    case 1:
      val = killing_inner(X, Xp);
      break;
    case 2: {
      AlgebraElement b = bracket(X, Xp);
      val = -killing_inner(b, b);
      break;
    }
    case 3: {
      AlgebraElement b1 = multi_bracket({X, X, Xp});
      AlgebraElement b2 = multi_bracket({Xp, X, Xp});
      val = -killing_inner(b1, b2);
      break;
    }
    default:
      throw std::invalid_argument("eta index must be 1, 2 or 3");
  }
  return assert_real(val, "eta");
}

double zeta(const AlgebraElement& X, int i) {
  if (X.owner()->family != Family::SO)
    throw std::invalid_argument("zeta is defined on the so realizations");
  const double kappa = X.owner()->killing_scale;
  switch (i) {
    case 1:
    case 2:
      return eta(X, i) / kappa;
    case 3: {
      // tr(X X conj(X)^t conj(X)^t) = squared Frobenius norm of X^2.
      Matrix sq = X.matrix() * X.matrix();
      return sq.squaredNorm();
    }
    default:
      throw std::invalid_argument("zeta index must be 1, 2 or 3");
  }
}

AlgebraElement zmap(const AlgebraElement& X) {
  AlgebraElement Xp = sigma(X);
  return multi_bracket({X, Xp, Xp, Xp, X}) + multi_bracket({Xp, Xp, X, X, Xp}) +
         multi_bracket({Xp, X, Xp, X, Xp}) * 2.0;
}

double k_squared(Family family, int n) {
  switch (family) {
    case Family::SL:
      if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
      return n / 2.0;
    case Family::SP:
      if (n < 1) throw std::invalid_argument("sp(n) needs n >= 1");
      return (n + 1) / 2.0;
    case Family::SO:
      if (n < 5) throw std::invalid_argument("so(n) is outside the simple B/D range for n < 5");
      return (n - 2) / 2.0;
  }
  throw std::invalid_argument("unknown family");
}

double k_squared_oracle(const AlgebraPtr& algebra) {
  const LieAlgebra& g = *algebra;
  const int n = g.matrix_size;
  Matrix E = Matrix::Zero(n, n);
  switch (g.family) {
    case Family::SL:
      E(0, n - 1) = 1.0;
      break;
    case Family::SP:
      E(0, n / 2) = 1.0;
      break;
    case Family::SO:
      switch (g.so_form) {
        case SoForm::AntiDiagonal:
          E(0, 1) = 1.0;
          E(n - 2, n - 1) = -1.0;
          break;
        case SoForm::Block12:
          E(0, 1) = 1.0;
          E(10, 11) = -1.0;
          break;
        case SoForm::So7Block:
          E(2, 6) = 1.0;
          E(3, 5) = -1.0;
          break;
        case SoForm::Identity: {
          // u v^t - v u^t with isotropic, orthogonal u, v.
          if (n < 5) throw std::invalid_argument("so(n) oracle needs n >= 5");
          Vector u = Vector::Zero(n), v = Vector::Zero(n);
          u(0) = 1.0;
          u(1) = Complex(0, 1);
          v(2) = 1.0;
          v(3) = Complex(0, 1);
          E = u * v.transpose() - v * u.transpose();
          break;
        }
      }
      break;
  }
  AlgebraElement En = normalize_to_triple(AlgebraElement(algebra, E));
  Complex val = killing_inner(En, sigma(En));
  if (std::abs(val.imag()) > 1e-10 * (1.0 + std::abs(val)))
    throw std::logic_error("oracle pairing is not real");
  return val.real() / 4.0;
}

std::vector<KSquaredRow> k_squared_reference() {
  return {
      {"sl(n)", 0.0, true},   // n/2
      {"sp(n)", 0.0, true},   // (n+1)/2
      {"so(n)", 0.0, true},   // (n-2)/2
      {"g2", 2.0, false},     {"f4", 4.5, false}, {"e6", 6.0, false},
      {"e7", 9.0, false},     {"e8", 15.0, false},
  };
}

}  // namespace nilorb
