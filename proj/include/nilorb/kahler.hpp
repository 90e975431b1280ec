#ifndef NILORB_KAHLER_HPP
#define NILORB_KAHLER_HPP

#include <array>
#include <optional>

#include "nilorb/invariants.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/potentials.hpp"
#include "nilorb/report.hpp"

namespace nilorb {

/// Tangent vector of the orbit at X: the generator A together with the
/// value [A, X].
struct TangentVector {
  AlgebraElement generator;
  AlgebraElement value;
};

TangentVector tangent(const AlgebraElement& A, const AlgebraElement& X);

/// First and second derivatives of the potential with respect to the three
/// invariant functions, recovered from parameter-space derivatives by
/// solving against the invariants' Jacobian and Hessian.
struct PotentialDerivatives {
  double rho = 0.0;
  Eigen::Vector3d grad = Eigen::Vector3d::Zero();
  Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
};

/// Requires pairwise distinct positive parameters (the invariant map is
/// singular on the diagonal). Throws std::invalid_argument otherwise.
PotentialDerivatives potential_derivatives(const PotentialSpec& spec, double r,
                                           double s, double t);

/// Recovers (r,s,t) from the invariant functions of an arbitrary orbit
/// element, so the potential can be evaluated away from the standard slice.
std::array<double, 3> invariant_params(const PotentialSpec& spec,
                                       const AlgebraElement& X);

/// Potential value at an arbitrary orbit element.
double rho_at(const PotentialSpec& spec, const AlgebraElement& X);

/// All point data needed to evaluate the closed-form two-forms: derivatives
/// of the potential plus the cached bracket words in X and X' = sigma X.
struct KahlerPoint {
  PotentialSpec spec;
  AlgebraElement X;
  PotentialDerivatives der;
  AlgebraElement Xp;        // sigma X
  AlgebraElement XXp;       // [X, X']
  AlgebraElement XXpX;      // [X,[X',X]]
  AlgebraElement XpXXp;     // [X',[X,X']]
  AlgebraElement ZX;        // the degree-5 map at X
  AlgebraElement ZXp;       // sigma of the above
  AlgebraElement XXpXXp;    // [X,[X',[X,X']]]
  AlgebraElement XZX;       // [X, ZX]
};

KahlerPoint kahler_point(const PotentialSpec& spec, const AlgebraElement& X);

/// Kirillov-Kostant-Souriau pairing of two generators at X.
Complex kks_sigma(const AlgebraElement& A, const AlgebraElement& B,
                  const AlgebraElement& X);

/// The Kaehler form of the potential, evaluated on tangent *values*.
double omega_I(const KahlerPoint& pt, const AlgebraElement& va,
               const AlgebraElement& vb);

/// The candidate second complex structure applied to a tangent value.
AlgebraElement J_apply(const KahlerPoint& pt, const AlgebraElement& va);

/// g = omega_I(I., .), omega_J = g(J., .), omega_K = g(K., .) with K = IJ.
double metric_g(const KahlerPoint& pt, const AlgebraElement& va,
                const AlgebraElement& vb);
double omega_J(const KahlerPoint& pt, const AlgebraElement& va,
               const AlgebraElement& vb);
double omega_K(const KahlerPoint& pt, const AlgebraElement& va,
               const AlgebraElement& vb);

/// Complex basis of generators whose values span the tangent space at X.
std::vector<AlgebraElement> tangent_generators(const AlgebraElement& X);

/// Finite-difference oracle for omega_I(xi_A, xi_B) at X, built only from
/// potential values along one-parameter flows. Independent of the
/// closed-form expression above.
double omega_I_fd(const PotentialSpec& spec, const AlgebraElement& X,
                  const AlgebraElement& A, const AlgebraElement& B);

/// Exterior-derivative residual of omega_I on the fields generated by
/// A, B, C, by finite differences along the flows.
double omega_closedness_fd(const PotentialSpec& spec, const AlgebraElement& X,
                           const AlgebraElement& A, const AlgebraElement& B,
                           const AlgebraElement& C);

struct HyperkahlerOptions {
  double tol = 1e-5;
  double closedness_tol = 1e-3;  // coarser guard; outer FD amplifies noise
  unsigned seed = 42;
  int closedness_triples = 20;
  int fd_pairs = 6;
};

/// Residuals: J_squared_plus_one, metric_gram_negativity, kks_compatibility,
/// omega_fd_agreement (all against opts.tol) and omega_closedness (against
/// closedness_tol; status accounts for the split).
CheckReport verify_hyperkahler(const OrbitSpec& orbit, const PotentialSpec& spec,
                               double r, double s, double t,
                               const HyperkahlerOptions& opts = {});

}  // namespace nilorb

#endif
