#include "doctest.h"

#include <Eigen/SVD>
#include <random>

#include "nilorb/standard_forms.hpp"

using namespace nilorb;

namespace {

std::mt19937_64 rng(2024);

Matrix random_complex(int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix Z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Z(i, j) = Complex(gauss(rng), gauss(rng));
  return Z;
}

Matrix random_unitary(int n) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(n));
  Matrix Q = qr.householderQ();
  Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) Q.col(i) *= R(i, i) / std::abs(R(i, i));
  return Q;
}

bool is_unitary(const Matrix& U) {
  int n = U.rows();
  return (U.adjoint() * U - Matrix::Identity(n, n)).norm() < 1e-10 * n;
}

Eigen::VectorXd singular_values(const Matrix& A) {
  return Eigen::JacobiSVD<Matrix>(A).singularValues();
}

}  // namespace

TEST_CASE("symmetric form: diagonal entries are the singular values") {
  for (int n = 2; n <= 8; ++n) {
    Matrix A = random_complex(n);
    Matrix Z = ((A + A.transpose()) * 0.5).eval();
    FormResult res = takagi(Z);
    CHECK(res.residual <= 1e-10);
    CHECK(is_unitary(res.transform));
    // reconstruction: canonical = g Z g^t
    Matrix rec = res.transform * Z * res.transform.transpose();
    CHECK((rec - res.canonical).norm() <= 1e-10 * (1.0 + Z.norm()));
    // canonical is real nonnegative descending diagonal = singular values
    Eigen::VectorXd sv = singular_values(Z);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(res.canonical(i, i).imag()) <= 1e-12);
      CHECK(res.canonical(i, i).real() == doctest::Approx(sv(i)).epsilon(1e-9));
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(std::abs(res.canonical(i, j)) <= 1e-10);
    }
  }
}

TEST_CASE("symmetric form handles repeated singular values exactly") {
  // unitary congruence of a scaled identity has all singular values equal
  int n = 5;
  Matrix U = random_unitary(n);
  Matrix Z = 2.5 * U * U.transpose();
  FormResult res = takagi(Z);
  CHECK(res.residual <= 1e-10);
  for (int i = 0; i < n; ++i) CHECK(std::abs(res.canonical(i, i) - 2.5) <= 1e-9);
}

TEST_CASE("skew form: anti-diagonal blocks carry the paired singular values") {
  for (int n = 2; n <= 8; ++n) {
    Matrix A = random_complex(n);
    Matrix Z = ((A - A.transpose()) * 0.5).eval();
    FormResult res = skew_standard(Z);
    CHECK(res.residual <= 1e-10);
    CHECK(is_unitary(res.transform));
    Matrix rec = res.transform * Z * res.transform.transpose();
    CHECK((rec - res.canonical).norm() <= 1e-10 * (1.0 + Z.norm()));
    // block structure [[0, x], [-x, 0]], x > 0 descending, then zeros
    Eigen::VectorXd mod = canonical_entries(res, /*skew=*/true);
    for (int i = 1; i < mod.size(); ++i) CHECK(mod(i - 1) >= mod(i) - 1e-12);
    Matrix C = res.canonical;
    for (int b = 0; b + 1 < n; b += 2) {
      CHECK(std::abs(C(b, b + 1) + C(b + 1, b)) <= 1e-10);
      CHECK(C(b, b + 1).imag() == doctest::Approx(0.0));
    }
    if (n % 2 == 1) CHECK(C.row(n - 1).norm() <= 1e-9);
  }
}

TEST_CASE("svd form reconstructs and orders like the reference solver") {
  for (int n = 2; n <= 8; ++n) {
    Matrix A = random_complex(n);
    FormResult res = svd_complex(A);
    CHECK(res.residual <= 1e-10);
    CHECK(is_unitary(res.transform));
    CHECK(is_unitary(res.transform_right));
    Matrix rec = res.transform * A * res.transform_right;
    CHECK((rec - res.canonical).norm() <= 1e-10 * (1.0 + A.norm()));
    Eigen::VectorXd sv = singular_values(A);
    for (int i = 0; i < n; ++i)
      CHECK(res.canonical(i, i).real() == doctest::Approx(sv(i)).epsilon(1e-9));
  }
}

TEST_CASE("canonical entries are invariant under the respective group action") {
  int n = 6;
  Matrix A = random_complex(n);
  Matrix sym = ((A + A.transpose()) * 0.5).eval();
  Matrix skw = ((A - A.transpose()) * 0.5).eval();
  Matrix gen = random_complex(n);
  Eigen::VectorXd sym0 = canonical_entries(takagi(sym));
  Eigen::VectorXd skw0 = canonical_entries(skew_standard(skw), true);
  Eigen::VectorXd gen0 = canonical_entries(svd_complex(gen));
  for (int trial = 0; trial < 5; ++trial) {
    Matrix U = random_unitary(n);
    Matrix V = random_unitary(n);
    Eigen::VectorXd s1 = canonical_entries(takagi(U * sym * U.transpose()));
    Eigen::VectorXd s2 = canonical_entries(skew_standard(U * skw * U.transpose()), true);
    Eigen::VectorXd s3 = canonical_entries(svd_complex(U * gen * V.adjoint()));
    CHECK((s1 - sym0).norm() <= 1e-8 * (1.0 + sym0.norm()));
    CHECK((s2 - skw0).norm() <= 1e-8 * (1.0 + skw0.norm()));
    CHECK((s3 - gen0).norm() <= 1e-8 * (1.0 + gen0.norm()));
  }
}

TEST_CASE("degenerate and trivial inputs") {
  // zero matrix
  Matrix Z = Matrix::Zero(4, 4);
  CHECK(takagi(Z).residual <= 1e-14);
  CHECK(skew_standard(Z).residual <= 1e-14);
  // real diagonal input is already canonical for the svd
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 3.0;
  D(1, 1) = 1.0;
  FormResult res = svd_complex(D);
  CHECK((res.canonical - D).norm() <= 1e-12);
  // rank-deficient symmetric input
  Matrix v(3, 1);
  v << Complex(1, 2), Complex(0, 1), Complex(2, -1);
  Matrix R1 = v * v.transpose();
  FormResult t1 = takagi(R1);
  CHECK(t1.residual <= 1e-10);
  CHECK(std::abs(t1.canonical(1, 1)) <= 1e-10);
  CHECK(std::abs(t1.canonical(2, 2)) <= 1e-10);
}

TEST_CASE("shape errors are rejected") {
  Matrix bad = random_complex(3);
  CHECK_THROWS_AS(takagi(bad), std::invalid_argument);          // not symmetric
  CHECK_THROWS_AS(skew_standard(bad), std::invalid_argument);   // not skew
}
