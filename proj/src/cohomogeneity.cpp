#include "nilorb/cohomogeneity.hpp"

#include <Eigen/SVD>
#include <random>

namespace nilorb {

OrbitPoint generic_point(const OrbitSpec& spec, unsigned seed) {
  const LieAlgebra& g = *spec.algebra;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix Z = Matrix::Zero(g.matrix_size, g.matrix_size);
  for (const auto& b : g.basis) Z += Complex(gauss(rng), gauss(rng)) * b;
  Z /= Z.norm();
  AlgebraElement X0 = representative(spec).X;
  AlgebraElement X = adjoint_flow(AlgebraElement(spec.algebra, Z), 1.0, X0);
  return OrbitPoint{spec, 1, 1, 1, X, {}};
}

int compact_orbit_dim(const AlgebraElement& X, double rank_rel) {
  const LieAlgebra& g = *X.owner();
  const int nn = g.matrix_size * g.matrix_size;
  const int m = (int)g.compact_basis.size();
  Eigen::MatrixXd cols(2 * nn, m);
  for (int k = 0; k < m; ++k) {
    Matrix br = g.compact_basis[k] * X.matrix() - X.matrix() * g.compact_basis[k];
    Eigen::Map<const Vector> v(br.data(), nn);
    cols.col(k).head(nn) = v.real();
    cols.col(k).tail(nn) = v.imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_rel * sv(0)) ++r;
  return r;
}

CohomResult cohomogeneity(const OrbitSpec& spec, int n_samples, unsigned seed) {
  if (n_samples < 3) throw std::invalid_argument("need at least 3 samples");
  CohomResult res;
  res.spec = spec;
  res.samples_used = n_samples;
  int dim_c = -1;
  int compact = 0;
  for (int k = 0; k < n_samples; ++k) {
    OrbitPoint p = generic_point(spec, seed + (unsigned)k);
    int dc = orbit_dim_complex(p.element);
    if (dim_c < 0)
      dim_c = dc;
    else if (dc != dim_c)
      throw std::logic_error("complex orbit dimension varies across samples");
    compact = std::max(compact, compact_orbit_dim(p.element));
  }
  res.dim_C_orbit = dim_c;
  res.compact_orbit_dim = compact;
  res.cohomogeneity = 2 * dim_c - compact;
  if (res.cohomogeneity < 0) throw std::logic_error("negative cohomogeneity");
  return res;
}

std::vector<CohomRow> cohomogeneity_table() {
  return {
      {"sl(6)", "2,2,2", 3, true, Family::SL, 6},
      {"sl(7)", "2,2,2,1", 3, true, Family::SL, 7},
      // Every sl(n) element of rank 2 with n >= 5 commutes with the
      // orthogonal projection onto ker X intersect (im X)-perp (dimension
      // >= n-4), so the compact stabilizer is never trivial and the
      // (3,1,...) orbits have cohomogeneity exactly 5 (the closed normal
      // form has five real parameters).
      {"sl(5)", "3,1,1", 5, true, Family::SL, 5},
      {"sl(6)", "3,1,1,1", 5, true, Family::SL, 6},
      {"sl(4)", "3,1", 5, true, Family::SL, 4},
      {"so(5)", "5", 6, true, Family::SO, 5},
      {"so(7)", "3,2,2", 3, true, Family::SO, 7},
      {"so(9)", "3,2,2,1,1", 4, true, Family::SO, 9},
      {"sp(3)", "2,2,2", 3, true, Family::SP, 3},
      {"sp(4)", "2,2,2,1,1", 3, true, Family::SP, 4},
      {"so(6)", "3,3", 5, true, Family::SO, 6},
      {"so(8)", "3,2,2,1", 4, true, Family::SO, 8},
      {"so(12)", "2,2,2,2,2,2", 3, true, Family::SO, 12},
  };
}

std::vector<CohomRow> exceptional_cohomogeneity_table() {
  return {
      {"g2", "20", 6, false},       {"f4", "0100", 4, false},
      {"e6", "000100", 4, false},   {"e7", "2000000", 3, false},
      {"e7", "0000010", 4, false},  {"e8", "01000000", 4, false},
  };
}

}  // namespace nilorb
