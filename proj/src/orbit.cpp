#include "nilorb/orbit.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace nilorb {

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v <= 0) throw std::invalid_argument("bad partition part: " + tok);
    p.push_back(v);
  }
  if (p.empty()) throw std::invalid_argument("empty partition");
  if (!std::is_sorted(p.rbegin(), p.rend()))
    throw std::invalid_argument("partition must be weakly decreasing");
  return p;
}

std::string partition_to_string(const Partition& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

int count_part(const Partition& p, int v) {
  return (int)std::count(p.begin(), p.end(), v);
}

// Partition shape helpers: {2,2,2,1,...}, {2,2,2,2,2,2,1,...}, {3,1,...},
// {3,2,2,1,...}, {5}, {3,3}.
bool is_shape(const Partition& p, std::initializer_list<int> head) {
  size_t i = 0;
  for (int v : head) {
    if (i >= p.size() || p[i] != v) return false;
    ++i;
  }
  for (; i < p.size(); ++i)
    if (p[i] != 1) return false;
  return true;
}

Matrix unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

int rank_of(const Matrix& M, double tol) {
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double top = sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * top) ++r;
  return r;
}

}  // namespace

OrbitSpec make_orbit(AlgebraPtr algebra, const Partition& label) {
  int sum = std::accumulate(label.begin(), label.end(), 0);
  if (sum != algebra->matrix_size)
    throw std::invalid_argument("partition does not sum to the matrix size");
  return OrbitSpec{std::move(algebra), label, std::nullopt};
}

OrbitSpec make_orbit(Family family, int n, const Partition& label) {
  SoForm form = SoForm::Identity;
  if (family == Family::SO) {
    if (is_shape(label, {2, 2, 2, 2, 2, 2}))
      form = SoForm::Block12;
    else if (is_shape(label, {3, 2, 2}))
      form = SoForm::So7Block;
    else
      form = SoForm::AntiDiagonal;
  }
  // For sp, n is the rank and the matrices have size 2n.
  return make_orbit(build_algebra(family, n, form), label);
}

StandardTriple representative(const OrbitSpec& spec) {
  const LieAlgebra& g = *spec.algebra;
  const int n = g.matrix_size;
  Matrix X = Matrix::Zero(n, n);
  const Complex I(0, 1);

  switch (g.family) {
    case Family::SL: {
      // Weighted Jordan blocks: entry sqrt(i(m-i)) on the superdiagonal of an
      // m-block makes [X, X^t] diagonal and [[X,X^t],X] = 2X. This reproduces
      // the unit entries for the (2,...) orbits and the sqrt(2) normalization
      // for (3,1,...).
      int offset = 0;
      for (int m : spec.label) {
        for (int i = 1; i < m; ++i)
          X(offset + i - 1, offset + i) = std::sqrt(double(i) * (m - i));
        offset += m;
      }
      break;
    }
    case Family::SP: {
      const int half = n / 2;
      if (is_shape(spec.label, {2, 2, 2}) && half >= 3) {
        X(0, half) = X(1, half + 1) = X(2, half + 2) = 1.0;
      } else {
        throw std::invalid_argument("no stored representative for sp orbit " +
                                    partition_to_string(spec.label));
      }
      break;
    }
    case Family::SO:
      if (is_shape(spec.label, {2, 2, 2, 2, 2, 2}) && g.so_form == SoForm::Block12) {
        for (int b = 0; b < 6; ++b) X(2 * b, 2 * b + 1) = (b < 3) ? 1.0 : -1.0;
      } else if (is_shape(spec.label, {3, 2, 2}) && g.so_form == SoForm::So7Block) {
        X(0, 4) = std::sqrt(2.0);
        X(1, 0) = -std::sqrt(2.0);
        X(2, 6) = 1.0;
        X(3, 5) = -1.0;
      } else if (is_shape(spec.label, {5}) && n == 5 && g.so_form == SoForm::AntiDiagonal) {
        X(0, 1) = std::sqrt(2.0) * Complex(1, -1);
        X(1, 2) = -std::sqrt(6.0) * I;
        X(2, 3) = std::sqrt(6.0) * I;
        X(3, 4) = std::sqrt(2.0) * Complex(-1, 1);
      } else if (is_shape(spec.label, {3, 3}) && n == 6 && g.so_form == SoForm::AntiDiagonal) {
        X(0, 1) = X(1, 2) = I * std::sqrt(2.0);
        X(3, 4) = X(4, 5) = -I * std::sqrt(2.0);
      } else {
        throw std::invalid_argument("no stored representative for so orbit " +
                                    partition_to_string(spec.label) + " in this realization");
      }
      break;
  }
  return triple_from_nilpositive(AlgebraElement(spec.algebra, X));
}

OrbitPoint scaled_point(const OrbitSpec& spec, double r, double s, double t) {
  if (r <= 0 || s <= 0 || t <= 0) throw std::invalid_argument("parameters must be positive");
  const LieAlgebra& g = *spec.algebra;
  const int n = g.matrix_size;
  std::vector<Matrix> blocks;  // order: s-block, r-block, t-block

  if (g.family == Family::SL && is_shape(spec.label, {2, 2, 2})) {
    blocks = {unit(n, 0, 1), unit(n, 2, 3), unit(n, 4, 5)};
  } else if (g.family == Family::SP && is_shape(spec.label, {2, 2, 2})) {
    const int half = n / 2;
    blocks = {unit(n, 0, half), unit(n, 1, half + 1), unit(n, 2, half + 2)};
  } else if (g.family == Family::SO && is_shape(spec.label, {2, 2, 2, 2, 2, 2})) {
    // Pair the six 2x2 blocks with their mirror partners under the
    // anti-diagonal of B; each pair is one sigma-invariant sl2.
    blocks = {unit(n, 0, 1) - unit(n, 10, 11), unit(n, 2, 3) - unit(n, 8, 9),
              unit(n, 4, 5) - unit(n, 6, 7)};
  } else if (g.family == Family::SO && is_shape(spec.label, {3, 2, 2}) &&
             g.so_form == SoForm::So7Block) {
    Matrix X = Matrix::Zero(n, n);
    X(0, 4) = std::sqrt(2.0) * r;
    X(1, 0) = -std::sqrt(2.0) * r;
    X(1, 5) = t;
    X(2, 4) = -t;
    X(2, 6) = s;
    X(3, 5) = -s;
    return OrbitPoint{spec, r, s, t, AlgebraElement(spec.algebra, X), {}};
  } else {
    throw std::invalid_argument("no parameterized family for orbit " +
                                partition_to_string(spec.label));
  }

  std::vector<AlgebraElement> summands{
      AlgebraElement(spec.algebra, s * blocks[0]),
      AlgebraElement(spec.algebra, r * blocks[1]),
      AlgebraElement(spec.algebra, t * blocks[2])};
  AlgebraElement X = summands[0] + summands[1] + summands[2];
  return OrbitPoint{spec, r, s, t, X, summands};
}

Partition jordan_partition(const AlgebraElement& A, double rank_tol) {
  const Matrix& M = A.matrix();
  const int n = M.rows();
  double scale = 1.0 + M.cwiseAbs().maxCoeff();
  // ranks[k] = rank(M^k); nilpotency demands rank(M^n) = 0.
  std::vector<int> ranks{n};
  Matrix P = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    P = P * M;
    if (P.cwiseAbs().maxCoeff() < 1e-10 * std::pow(scale, k)) {
      ranks.push_back(0);
      break;
    }
    ranks.push_back(rank_of(P, rank_tol));
  }
  if (ranks.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
  while (ranks.size() < (size_t)n + 2) ranks.push_back(0);

  Partition p;
  // multiplicity of parts >= k is rank(M^{k-1}) - rank(M^k)
  std::vector<int> geq;
  for (int k = 1; k <= n; ++k) geq.push_back(ranks[k - 1] - ranks[k]);
  for (int k = (int)geq.size(); k >= 1; --k) {
    int mult = geq[k - 1] - (k < (int)geq.size() ? geq[k] : 0);
    for (int i = 0; i < mult; ++i) p.push_back(k);
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

int orbit_dim_complex(const AlgebraElement& A, double rank_tol) {
  const LieAlgebra& g = *A.owner();
  const int nn = g.matrix_size * g.matrix_size;
  Matrix cols(nn, g.complex_dimension);
  for (int k = 0; k < g.complex_dimension; ++k) {
    Matrix br = g.basis[k] * A.matrix() - A.matrix() * g.basis[k];
    cols.col(k) = Eigen::Map<const Vector>(br.data(), nn);
  }
  return rank_of(cols, rank_tol);
}

}  // namespace nilorb
