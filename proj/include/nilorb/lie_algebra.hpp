#ifndef NILORB_LIE_ALGEBRA_HPP
#define NILORB_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Central tolerance configuration. One instance is shared by the whole
/// verification pipeline so acceptance runs have a single tuning point.
struct Tolerances {
  double algebraic = 1e-10;   // bracket identities, defining relations
  double fd_first = 1e-8;     // first finite-difference derivatives
  double fd_second = 1e-5;    // second finite-difference derivatives
  double rank_rel = 1e-9;     // relative pivot threshold for rank decisions
};

const Tolerances& default_tolerances();

enum class Family { SL, SO, SP };

/// Choice of the symmetric form B for the so(n) realizations.
enum class SoForm {
  Identity,      // B = I, algebra of skew matrices
  AntiDiagonal,  // B with 1's down the anti-diagonal
  Block12,       // B = antidiag(12) + I_{n-12}, used for the (2^6,1^k) orbits
  So7Block       // B = diag(1) + offdiag(I_3,I_3) (+ I_{n-7}), used for (3,2^2,1^k)
};

std::string family_name(Family f);

/// A matrix realization of a classical complex simple Lie algebra together
/// with its bilinear form, a complex basis, a real basis of the compact form
/// and the Killing normalization K(A,B) = killing_scale * tr(AB).
class LieAlgebra {
 public:
  Family family;
  int matrix_size = 0;          // n: matrices are n x n
  Matrix form;                  // B for SO, Omega for SP, identity for SL
  SoForm so_form = SoForm::Identity;
  int complex_dimension = 0;
  double killing_scale = 0.0;

  std::vector<Matrix> basis;          // complex basis of g^C
  std::vector<Matrix> compact_basis;  // real basis of the sigma-fixed compact form

  /// Max-entry residual of the defining relation (tr Z for SL, ZB+BZ^t for
  /// SO/SP) evaluated at Z.
  double defect(const Matrix& Z) const;
  bool contains(const Matrix& Z, double tol = 1e-12) const;

  /// Compact real structure: Z -> -conj(Z)^t for SL/SP, Z -> B conj(Z) B for SO.
  Matrix sigma(const Matrix& Z) const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Builds the matrix realization. Throws std::invalid_argument for an
/// unsupported family/size combination or a form that does not apply.
AlgebraPtr build_algebra(Family family, int n, SoForm form = SoForm::Identity);

/// A matrix constrained to lie in a fixed LieAlgebra realization.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr owner, Matrix m);

  const AlgebraPtr& owner() const { return owner_; }
  const Matrix& matrix() const { return m_; }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(Complex c) const;
  AlgebraElement operator-() const;

 private:
  AlgebraPtr owner_;
  Matrix m_;
};

struct StandardTriple {
  AlgebraElement H, X, Y;
  /// Max over the three relations of the max-entry residual.
  double residual() const;
};

AlgebraElement bracket(const AlgebraElement& A, const AlgebraElement& B);

/// Right-nested multiple bracket: [X1,[X2,[...,Xk]]].
AlgebraElement multi_bracket(const std::vector<AlgebraElement>& xs);

/// <A,B> = -K(A,B) = -killing_scale * tr(AB). Complex bilinear.
Complex killing_inner(const AlgebraElement& A, const AlgebraElement& B);

/// Test-time oracle: -tr(ad_A ad_B) computed over the stored complex basis.
Complex killing_inner_ad_oracle(const AlgebraElement& A, const AlgebraElement& B);

AlgebraElement sigma(const AlgebraElement& A);

/// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
/// Inputs here are small (n <= 14) and of modest norm.
Matrix expm(const Matrix& A);

/// exp(tA) X exp(-tA).
AlgebraElement adjoint_flow(const AlgebraElement& A, double t, const AlgebraElement& X);

/// Builds {H=[E,-sigma E], E, -sigma E}; throws if the bracket relations fail.
StandardTriple triple_from_nilpositive(const AlgebraElement& E, double tol = 1e-8);

/// Rescales E > 0 so that triple_from_nilpositive succeeds, assuming
/// [H,E] = c E for some c > 0 at the given scale. Throws otherwise.
AlgebraElement normalize_to_triple(const AlgebraElement& E);

}  // namespace nilorb

#endif
