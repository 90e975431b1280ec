#include "doctest.h"

#include <random>

#include "nilorb/lie_algebra.hpp"

using namespace nilorb;

namespace {

AlgebraElement random_element(const AlgebraPtr& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix Z = Matrix::Zero(g->matrix_size, g->matrix_size);
  for (const auto& b : g->basis) Z += Complex(gauss(rng), gauss(rng)) * b;
  return AlgebraElement(g, Z);
}

}  // namespace

TEST_CASE("complex dimensions of the classical realizations") {
  CHECK(build_algebra(Family::SL, 5)->complex_dimension == 24);
  CHECK(build_algebra(Family::SL, 8)->complex_dimension == 63);
  CHECK(build_algebra(Family::SO, 7, SoForm::AntiDiagonal)->complex_dimension == 21);
  CHECK(build_algebra(Family::SO, 12, SoForm::Block12)->complex_dimension == 66);
  CHECK(build_algebra(Family::SP, 3)->complex_dimension == 21);
  CHECK(build_algebra(Family::SP, 4)->complex_dimension == 36);
}

TEST_CASE("basis elements satisfy the defining relation") {
  for (auto g : {build_algebra(Family::SL, 6),
                 build_algebra(Family::SO, 7, SoForm::So7Block),
                 build_algebra(Family::SO, 13, SoForm::Block12),
                 build_algebra(Family::SP, 4)}) {
    for (const auto& b : g->basis) CHECK(g->defect(b) < 1e-14);
    // the real compact basis also lies in the complex algebra
    for (const auto& b : g->compact_basis) CHECK(g->defect(b) < 1e-14);
  }
}

TEST_CASE("sigma is an involutive antilinear automorphism") {
  for (auto g : {build_algebra(Family::SL, 5),
                 build_algebra(Family::SO, 7, SoForm::AntiDiagonal),
                 build_algebra(Family::SP, 3)}) {
    Matrix A = random_element(g, 1).matrix();
    Matrix B = random_element(g, 2).matrix();
    CHECK((g->sigma(g->sigma(A)) - A).norm() < 1e-13 * A.norm());
    // antilinear: sigma(cA) = conj(c) sigma(A)
    Complex c(0.3, -1.7);
    CHECK((g->sigma(c * A) - std::conj(c) * g->sigma(A)).norm() < 1e-13 * A.norm());
    // automorphism: sigma[A,B] = [sigma A, sigma B]
    Matrix lhs = g->sigma(A * B - B * A);
    Matrix sA = g->sigma(A), sB = g->sigma(B);
    CHECK((lhs - (sA * sB - sB * sA)).norm() < 1e-12 * (A.norm() * B.norm()));
    // fixed points of sigma close under bracket (the compact form)
    for (const auto& k : g->compact_basis)
      CHECK((g->sigma(k) - k).norm() < 1e-13);
  }
}

TEST_CASE("compact basis spans a real form of the right dimension") {
  for (auto g : {build_algebra(Family::SL, 4),
                 build_algebra(Family::SO, 6, SoForm::AntiDiagonal),
                 build_algebra(Family::SP, 2)}) {
    CHECK((int)g->compact_basis.size() == g->complex_dimension);
  }
}

TEST_CASE("trace-form Killing inner product matches the ad-representation oracle") {
  for (auto g : {build_algebra(Family::SL, 4),
                 build_algebra(Family::SO, 7, SoForm::AntiDiagonal),
                 build_algebra(Family::SP, 3)}) {
    AlgebraElement A = random_element(g, 10);
    AlgebraElement B = random_element(g, 11);
    Complex fast = killing_inner(A, B);
    Complex slow = killing_inner_ad_oracle(A, B);
    CHECK(std::abs(fast - slow) <= 1e-9 * (1.0 + std::abs(fast)));
  }
}

TEST_CASE("matrix exponential inverts and respects the flow property") {
  auto g = build_algebra(Family::SL, 5);
  Matrix A = random_element(g, 3).matrix();
  Matrix E = expm(A), Einv = expm(-A);
  CHECK((E * Einv - Matrix::Identity(5, 5)).norm() < 1e-11 * E.norm());
  // exp((s+t)A) = exp(sA) exp(tA)
  Matrix lhs = expm(0.7 * A);
  Matrix rhs = expm(0.3 * A) * expm(0.4 * A);
  CHECK((lhs - rhs).norm() < 1e-11 * lhs.norm());
}

TEST_CASE("adjoint flow preserves algebra membership and the inner product") {
  auto g = build_algebra(Family::SO, 7, SoForm::So7Block);
  AlgebraElement A = random_element(g, 4);
  AlgebraElement X = random_element(g, 5);
  AlgebraElement Y = random_element(g, 6);
  AlgebraElement Xf = adjoint_flow(A, 0.8, X);
  AlgebraElement Yf = adjoint_flow(A, 0.8, Y);
  CHECK(g->defect(Xf.matrix()) < 1e-10);
  CHECK(std::abs(killing_inner(Xf, Yf) - killing_inner(X, Y)) <
        1e-9 * (1.0 + std::abs(killing_inner(X, Y))));
}

TEST_CASE("multiple bracket is right-nested") {
  auto g = build_algebra(Family::SL, 4);
  AlgebraElement A = random_element(g, 7);
  AlgebraElement B = random_element(g, 8);
  AlgebraElement C = random_element(g, 9);
  AlgebraElement expect = bracket(A, bracket(B, C));
  AlgebraElement got = multi_bracket({A, B, C});
  CHECK((got.matrix() - expect.matrix()).norm() < 1e-13 * (1.0 + expect.matrix().norm()));
}

TEST_CASE("Jacobi identity holds for the bracket") {
  auto g = build_algebra(Family::SP, 3);
  AlgebraElement A = random_element(g, 12);
  AlgebraElement B = random_element(g, 13);
  AlgebraElement C = random_element(g, 14);
  Matrix J = bracket(A, bracket(B, C)).matrix() +
             bracket(B, bracket(C, A)).matrix() +
             bracket(C, bracket(A, B)).matrix();
  CHECK(J.norm() < 1e-11 * (1.0 + A.matrix().norm() * B.matrix().norm() * C.matrix().norm()));
}

TEST_CASE("normalize_to_triple rescales an eigenvector of [H, .] into a triple") {
  auto g = build_algebra(Family::SL, 4);
  // 3 E_{01} satisfies the eigen-relation with a wrong scale
  Matrix Z = Matrix::Zero(4, 4);
  Z(0, 1) = 3.0;
  AlgebraElement E = normalize_to_triple(AlgebraElement(g, Z));
  StandardTriple t = triple_from_nilpositive(E);
  CHECK(t.residual() < 1e-12);
}
