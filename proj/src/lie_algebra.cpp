#include "nilorb/lie_algebra.hpp"

#include <Eigen/QR>
#include <cmath>

namespace nilorb {

const Tolerances& default_tolerances() {
  static Tolerances tol;
  return tol;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SO: return "so";
    case Family::SP: return "sp";
  }
  return "?";
}

namespace {

Matrix unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

Matrix so_form_matrix(SoForm f, int n) {
  Matrix B = Matrix::Zero(n, n);
  switch (f) {
    case SoForm::Identity:
      B.setIdentity();
      break;
    case SoForm::AntiDiagonal:
      for (int i = 0; i < n; ++i) B(i, n - 1 - i) = 1.0;
      break;
    case SoForm::Block12:
      if (n < 12) throw std::invalid_argument("Block12 form needs n >= 12");
      for (int i = 0; i < 12; ++i) B(i, 11 - i) = 1.0;
      for (int i = 12; i < n; ++i) B(i, i) = 1.0;
      break;
    case SoForm::So7Block:
      if (n < 7) throw std::invalid_argument("So7Block form needs n >= 7");
      B(0, 0) = 1.0;
      for (int i = 0; i < 3; ++i) {
        B(1 + i, 4 + i) = 1.0;
        B(4 + i, 1 + i) = 1.0;
      }
      for (int i = 7; i < n; ++i) B(i, i) = 1.0;
      break;
  }
  return B;
}

// Realifies an n x n complex matrix into a 2n^2 real vector.
Eigen::VectorXd realify(const Matrix& Z) {
  Eigen::VectorXd v(2 * Z.size());
  Eigen::Map<const Vector> flat(Z.data(), Z.size());
  v.head(Z.size()) = flat.real();
  v.tail(Z.size()) = flat.imag();
  return v;
}

}  // namespace

double LieAlgebra::defect(const Matrix& Z) const {
  switch (family) {
    case Family::SL:
      return std::abs(Z.trace());
    case Family::SO:
    case Family::SP:
      return (Z * form + form * Z.transpose()).cwiseAbs().maxCoeff();
  }
  return 0.0;
}

bool LieAlgebra::contains(const Matrix& Z, double tol) const {
  if (Z.rows() != matrix_size || Z.cols() != matrix_size) return false;
  double scale = 1.0 + Z.cwiseAbs().maxCoeff();
  return defect(Z) <= tol * scale;
}

Matrix LieAlgebra::sigma(const Matrix& Z) const {
  if (family == Family::SO) return form * Z.conjugate() * form;
  return -Z.adjoint();
}

AlgebraPtr build_algebra(Family family, int n, SoForm so_form) {
  if (n < 2) throw std::invalid_argument("matrix size must be >= 2");
  auto alg = std::make_shared<LieAlgebra>();
  alg->family = family;
  alg->so_form = so_form;

  switch (family) {
    case Family::SL: {
      alg->matrix_size = n;
      alg->form = Matrix::Identity(n, n);
      alg->complex_dimension = n * n - 1;
      alg->killing_scale = 2.0 * n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) alg->basis.push_back(unit(n, i, j));
      for (int i = 0; i + 1 < n; ++i)
        alg->basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
      break;
    }
    case Family::SO: {
      if (n < 3) throw std::invalid_argument("so(n) needs n >= 3");
      alg->matrix_size = n;
      alg->form = so_form_matrix(so_form, n);
      alg->complex_dimension = n * (n - 1) / 2;
      alg->killing_scale = double(n - 2);
      // Z B + B Z^t = 0  <=>  Z = W B^{-1} with W skew; our B's are involutions.
      const Matrix Binv = alg->form;  // B^2 = I for every supported form
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          alg->basis.push_back((unit(n, i, j) - unit(n, j, i)) * Binv);
      break;
    }
    case Family::SP: {
      // Rank n, matrix size 2n, Omega = [[0,I],[-I,0]].
      alg->matrix_size = 2 * n;
      Matrix omega = Matrix::Zero(2 * n, 2 * n);
      omega.block(0, n, n, n) = Matrix::Identity(n, n);
      omega.block(n, 0, n, n) = -Matrix::Identity(n, n);
      alg->form = omega;
      alg->complex_dimension = n * (2 * n + 1);
      alg->killing_scale = 2.0 * n + 2.0;
      const int m = 2 * n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          alg->basis.push_back(unit(m, i, j) - unit(m, n + j, n + i));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          alg->basis.push_back(unit(m, i, n + j) + unit(m, j, n + i));
          alg->basis.push_back(unit(m, n + i, j) + unit(m, n + j, i));
        }
      break;
    }
  }

  if ((int)alg->basis.size() != alg->complex_dimension)
    throw std::logic_error("basis size does not match dimension");
  for (const Matrix& Z : alg->basis)
    if (alg->defect(Z) > 1e-12)
      throw std::logic_error("basis element violates defining relation");

  // Real basis of the compact form: sigma-fixed combinations Z + sigma(Z) and
  // i(Z - sigma(Z)), reduced to an independent set over R.
  {
    const int nn = alg->matrix_size * alg->matrix_size;
    Eigen::MatrixXd cand(2 * nn, 2 * alg->complex_dimension);
    std::vector<Matrix> cand_mats;
    for (int k = 0; k < alg->complex_dimension; ++k) {
      const Matrix& Z = alg->basis[k];
      Matrix u = Z + alg->sigma(Z);
      Matrix v = Complex(0, 1) * (Z - alg->sigma(Z));
      cand.col(2 * k) = realify(u);
      cand.col(2 * k + 1) = realify(v);
      cand_mats.push_back(u);
      cand_mats.push_back(v);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(cand);
    qr.setThreshold(1e-10);
    const int rank = qr.rank();
    if (rank != alg->complex_dimension)
      throw std::logic_error("compact-form basis extraction failed");
    for (int k = 0; k < rank; ++k)
      alg->compact_basis.push_back(cand_mats[qr.colsPermutation().indices()[k]]);
  }
  return alg;
}

AlgebraElement::AlgebraElement(AlgebraPtr owner, Matrix m)
    : owner_(std::move(owner)), m_(std::move(m)) {
  if (!owner_) throw std::invalid_argument("AlgebraElement without owner");
  if (m_.rows() != owner_->matrix_size || m_.cols() != owner_->matrix_size)
    throw std::invalid_argument("matrix size mismatch");
  if (!owner_->contains(m_))
    throw std::invalid_argument("matrix violates the defining relation of " +
                                family_name(owner_->family));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  return AlgebraElement(owner_, m_ + o.m_);
}
AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return AlgebraElement(owner_, m_ - o.m_);
}
AlgebraElement AlgebraElement::operator*(Complex c) const {
  return AlgebraElement(owner_, m_ * c);
}
AlgebraElement AlgebraElement::operator-() const {
  return AlgebraElement(owner_, -m_);
}

namespace {
void require_same_owner(const AlgebraElement& A, const AlgebraElement& B) {
  if (A.owner() != B.owner())
    throw std::invalid_argument("elements belong to different algebras");
}
}  // namespace

AlgebraElement bracket(const AlgebraElement& A, const AlgebraElement& B) {
  require_same_owner(A, B);
  return AlgebraElement(A.owner(), A.matrix() * B.matrix() - B.matrix() * A.matrix());
}

AlgebraElement multi_bracket(const std::vector<AlgebraElement>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("multi_bracket needs >= 2 arguments");
  AlgebraElement acc = xs.back();
  for (auto it = xs.rbegin() + 1; it != xs.rend(); ++it) acc = bracket(*it, acc);
  return acc;
}

Complex killing_inner(const AlgebraElement& A, const AlgebraElement& B) {
  require_same_owner(A, B);
  return -A.owner()->killing_scale * (A.matrix() * B.matrix()).trace();
}

Complex killing_inner_ad_oracle(const AlgebraElement& A, const AlgebraElement& B) {
  require_same_owner(A, B);
  const LieAlgebra& g = *A.owner();
  const int dim = g.complex_dimension;
  const int nn = g.matrix_size * g.matrix_size;
  Matrix basis_mat(nn, dim);
  for (int k = 0; k < dim; ++k)
    basis_mat.col(k) = Eigen::Map<const Vector>(g.basis[k].data(), nn);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(basis_mat);

  auto ad_matrix = [&](const Matrix& M) {
    Matrix cols(nn, dim);
    for (int k = 0; k < dim; ++k) {
      Matrix br = M * g.basis[k] - g.basis[k] * M;
      cols.col(k) = Eigen::Map<const Vector>(br.data(), nn);
    }
    return Matrix(cod.solve(cols));  // dim x dim coordinates
  };
  Matrix adA = ad_matrix(A.matrix());
  Matrix adB = ad_matrix(B.matrix());
  return -(adA * adB).trace();
}

AlgebraElement sigma(const AlgebraElement& A) {
  return AlgebraElement(A.owner(), A.owner()->sigma(A.matrix()));
}

Matrix expm(const Matrix& A) {
  const int n = A.rows();
  double norm = A.cwiseAbs().sum();  // cheap upper bound on the 1-norm
  int squarings = 0;
  if (norm > 0.5) squarings = (int)std::ceil(std::log2(norm / 0.5));
  Matrix As = A / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = As * term / double(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

AlgebraElement adjoint_flow(const AlgebraElement& A, double t, const AlgebraElement& X) {
  require_same_owner(A, X);
  Matrix g = expm(t * A.matrix());
  Matrix ginv = expm(-t * A.matrix());
  return AlgebraElement(A.owner(), g * X.matrix() * ginv);
}

double StandardTriple::residual() const {
  double r1 = (bracket(H, X).matrix() - 2.0 * X.matrix()).cwiseAbs().maxCoeff();
  double r2 = (bracket(H, Y).matrix() + 2.0 * Y.matrix()).cwiseAbs().maxCoeff();
  double r3 = (bracket(X, Y).matrix() - H.matrix()).cwiseAbs().maxCoeff();
  return std::max({r1, r2, r3});
}

StandardTriple triple_from_nilpositive(const AlgebraElement& E, double tol) {
  AlgebraElement Y = -sigma(E);
  StandardTriple t{bracket(E, Y), E, Y};
  if (t.residual() > tol)
    throw std::invalid_argument("element does not generate a standard triple");
  return t;
}

AlgebraElement normalize_to_triple(const AlgebraElement& E) {
  AlgebraElement Y = -sigma(E);
  AlgebraElement H = bracket(E, Y);
  Matrix HE = bracket(H, E).matrix();
  // Expect [H,E] = c E at this scale; extract c at the largest entry of E.
  Eigen::Index i, j;
  E.matrix().cwiseAbs().maxCoeff(&i, &j);
  Complex c = HE(i, j) / E.matrix()(i, j);
  if (std::abs(c.imag()) > 1e-10 || c.real() <= 0.0)
    throw std::invalid_argument("element is not proportional to a triple member");
  double scale = std::sqrt(2.0 / c.real());
  if ((HE - c * E.matrix()).cwiseAbs().maxCoeff() >
      1e-10 * (1.0 + E.matrix().cwiseAbs().maxCoeff()))
    throw std::invalid_argument("[H,E] is not a multiple of E");
  return E * scale;
}

}  // namespace nilorb
