#include "nilorb/standard_forms.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace nilorb {

namespace {

constexpr double kClusterRel = 1e-8;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Eigendecomposition of the Hermitian matrix M with eigenvalues sorted by
// the comparator; returns V with V^H M V = diag(vals).
void hermitian_sorted(const Matrix& M, bool ascending, Eigen::VectorXd& vals,
                      Matrix& V) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  vals = es.eigenvalues();
  V = es.eigenvectors();
  if (!ascending) {
    vals = vals.reverse().eval();
    V = V.rowwise().reverse().eval();
  }
}

// Eigenvalue clusters [begin, end) of a sorted real vector.
std::vector<std::pair<int, int>> clusters(const Eigen::VectorXd& vals) {
  const double tol = kClusterRel * (1.0 + vals.cwiseAbs().maxCoeff());
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || std::abs(vals(i) - vals(i - 1)) > tol) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

// Simultaneous orthogonal diagonalization of commuting real symmetric A, B.
Eigen::MatrixXd joint_diagonalize(const Eigen::MatrixXd& A,
                                  const Eigen::MatrixXd& B) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esA(A);
  Eigen::MatrixXd Q = esA.eigenvectors();
  Eigen::VectorXd a = esA.eigenvalues();
  for (auto [b0, b1] : clusters(a)) {
    const int m = b1 - b0;
    if (m == 1) continue;
    Eigen::MatrixXd Qc = Q.middleCols(b0, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esB(
        (Qc.transpose() * B * Qc).eval());
    Q.middleCols(b0, m) = Qc * esB.eigenvectors();
  }
  return Q;
}

// Unitary that maps the symmetric unitary S (S S^H = I) to the identity by
// congruence: h S h^t = I.
Matrix symmetric_unitary_root(const Matrix& S) {
  const int m = S.rows();
  Eigen::MatrixXd A = S.real(), B = S.imag();
  Eigen::MatrixXd Q = joint_diagonalize(A, B);
  Matrix phases = Q.transpose() * S * Q;  // diagonal of unit complex numbers
  Matrix h = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    Complex z = phases(i, i);
    h.row(i) = std::exp(Complex(0, -std::arg(z) / 2.0)) *
               Q.col(i).transpose().cast<Complex>();
  }
  return h;
}

// Unitary that maps the skew unitary U (U conj(U) = -I, even size) to the
// standard block anti-diagonal form by congruence: h U h^t = J.
Matrix skew_unitary_root(const Matrix& U) {
  const int m = U.rows();
  if (m == 0) return Matrix::Zero(0, 0);
  Vector x = Vector::Zero(m);
  x(0) = 1.0;
  Vector y = U * x.conjugate();
  Matrix g(m, m);
  g.row(0) = x.conjugate().transpose();
  g.row(1) = -y.conjugate().transpose();
  if (m > 2) {
    // Orthonormal basis of the complement of span{x, y}.
    Matrix P = Matrix::Identity(m, m) - x * x.adjoint() - y * y.adjoint();
    Eigen::ColPivHouseholderQR<Matrix> qr(P);
    Matrix Q = qr.householderQ() * Matrix::Identity(m, m - 2);
    Matrix rec = skew_unitary_root((Q.adjoint() * U * Q.conjugate()).eval());
    g.bottomRows(m - 2) = rec * Q.adjoint();
  }
  return g;
}

}  // namespace

FormResult takagi(const Matrix& Z) {
  const int n = Z.rows();
  require(Z.cols() == n, "takagi needs a square matrix");
  require((Z - Z.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + Z.norm()),
          "takagi needs a symmetric matrix");

  Eigen::VectorXd mu;
  Matrix V;
  hermitian_sorted(Z * Z.conjugate(), /*ascending=*/false, mu, V);
  Matrix g0 = V.adjoint();
  Matrix X = g0 * Z * g0.transpose();  // commutes with diag(mu): blockwise

  Matrix block = Matrix::Identity(n, n);
  for (auto [b0, b1] : clusters(mu)) {
    const int m = b1 - b0;
    if (mu(b0) <= kClusterRel * (1.0 + mu.cwiseAbs().maxCoeff())) continue;
    Matrix S = X.block(b0, b0, m, m) / std::sqrt(mu(b0));
    block.block(b0, b0, m, m) = symmetric_unitary_root(S);
  }
  FormResult out;
  out.transform = block * g0;
  out.transform_right = out.transform.transpose();
  out.canonical = Matrix::Zero(n, n);
  const double mu_floor = kClusterRel * (1.0 + mu.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i)
    out.canonical(i, i) = mu(i) > mu_floor ? std::sqrt(mu(i)) : 0.0;
  out.residual = (out.transform * Z * out.transform_right - out.canonical).norm() /
                 (1.0 + Z.norm());
  return out;
}

FormResult skew_standard(const Matrix& Z) {
  const int n = Z.rows();
  require(Z.cols() == n, "skew form needs a square matrix");
  require((Z + Z.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + Z.norm()),
          "skew form needs a skew-symmetric matrix");

  // Z conj(Z) is Hermitian negative semidefinite with paired eigenvalues;
  // ascending order puts the largest block moduli first.
  Eigen::VectorXd mu;
  Matrix V;
  hermitian_sorted(Z * Z.conjugate(), /*ascending=*/true, mu, V);
  Matrix g0 = V.adjoint();
  Matrix X = g0 * Z * g0.transpose();

  Matrix block = Matrix::Identity(n, n);
  for (auto [b0, b1] : clusters(mu)) {
    const int m = b1 - b0;
    if (-mu(b0) <= kClusterRel * (1.0 + mu.cwiseAbs().maxCoeff())) continue;
    require(m % 2 == 0, "unpaired nonzero eigenvalue of Z conj(Z)");
    Matrix U = X.block(b0, b0, m, m) / std::sqrt(-mu(b0));
    block.block(b0, b0, m, m) = skew_unitary_root(U);
  }
  FormResult out;
  out.transform = block * g0;
  out.transform_right = out.transform.transpose();
  out.canonical = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    double x = std::sqrt(std::max(-mu(i), 0.0));
    if (x <= kClusterRel * (1.0 + std::sqrt(std::abs(mu(0))))) x = 0.0;
    out.canonical(i, i + 1) = x;
    out.canonical(i + 1, i) = -x;
  }
  out.residual = (out.transform * Z * out.transform_right - out.canonical).norm() /
                 (1.0 + Z.norm());
  return out;
}

FormResult svd_complex(const Matrix& A) {
  const int n = A.rows();
  require(A.cols() == n, "square input expected");
  Eigen::VectorXd lam;
  Matrix q;
  hermitian_sorted(A.adjoint() * A, /*ascending=*/false, lam, q);
  const double lmax = lam.size() ? std::max(lam.maxCoeff(), 0.0) : 0.0;

  Matrix u = Matrix::Zero(n, n);
  int r = 0;
  for (; r < n; ++r) {
    if (lam(r) <= 1e-13 * (1.0 + lmax)) break;
    u.col(r) = A * q.col(r) / std::sqrt(lam(r));
  }
  // Orthonormal completion of the first r columns: greedily pick the
  // canonical vector with the largest component outside the current span,
  // with one re-orthogonalization pass for stability.
  for (int filled = r; filled < n; ++filled) {
    Vector best = Vector::Zero(n);
    double best_norm = -1.0;
    for (int k = 0; k < n; ++k) {
      Vector v = Vector::Zero(n);
      v(k) = 1.0;
      for (int j = 0; j < filled; ++j) v -= u.col(j) * (u.col(j).adjoint() * v);
      if (v.norm() > best_norm) {
        best_norm = v.norm();
        best = v;
      }
    }
    for (int j = 0; j < filled; ++j) best -= u.col(j) * (u.col(j).adjoint() * best);
    u.col(filled) = best / best.norm();
  }

  FormResult out;
  out.transform = u.adjoint();
  out.transform_right = q;
  out.canonical = Matrix::Zero(n, n);
  const double lam_floor = kClusterRel * (1.0 + lam.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i)
    out.canonical(i, i) = lam(i) > lam_floor ? std::sqrt(lam(i)) : 0.0;
  out.residual = (u * out.canonical * q.adjoint() - A).norm() / (1.0 + A.norm());
  return out;
}

Eigen::VectorXd canonical_entries(const FormResult& r, bool skew) {
  const int n = r.canonical.rows();
  if (!skew) {
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = r.canonical(i, i).real();
    return d;
  }
  Eigen::VectorXd d(n / 2);
  for (int i = 0; i + 1 < n; i += 2) d(i / 2) = r.canonical(i, i + 1).real();
  return d;
}

}  // namespace nilorb
