#ifndef NILORB_POTENTIALS_HPP
#define NILORB_POTENTIALS_HPP

#include <array>
#include <vector>

namespace nilorb {

enum class PotentialKind { Generic, So7, Sl2Factor };

/// A closed-form invariant potential family. `c >= 0` is the family
/// parameter (a single shared constant for the three-block families).
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Generic;
  double k_squared = 1.0;
  double c = 0.0;
};

/// d rho / d s = sqrt(16 k^4 + c/s^2) for the single-block potential.
double factor_potential_derivative(double s, double k2, double c);

/// Antiderivative of the above, normalized to vanish at s = 1.
double factor_potential(double s, double k2, double c);

/// Three-block potential: c = 0 gives exactly 4 k^2 (r+s+t); c > 0 the sum
/// of the three normalized single-block antiderivatives.
double generic_potential(double r, double s, double t, double k2, double c);

/// The closed-form chain evaluating the c = 0 potential from the invariants.
struct KappaChain {
  double eta1t, eta2t, eta3t;  // eta_i / (2^{i+1} k^2)
  double alpha, beta, psi, kappa;
  double rho;
  bool used_quartic_fallback;
};
KappaChain kappa_chain(double eta1, double eta2, double eta3, double k2);

/// Largest real root lambda = r+s+t of
/// (l^2-e1)^2 - (8 alpha/sqrt(6)) l - 2 (e1^2 - e2) = 0, with e_i the
/// normalized invariants. Newton-polished companion-matrix root.
double quartic_solve(double eta1t, double eta2t, double eta3t);

/// so(7) one-parameter family in the (r,s,t) coordinates; c >= 0.
double so7_potential(double r, double s, double t, double c);

/// The same potential written in the global invariants. Requires
/// zeta1^2 - zeta2 - 2 zeta3 >= 0. Agrees with so7_potential exactly.
double so7_potential_zeta(double zeta1, double zeta2, double zeta3, double c);

/// Residuals (relative) of the seven first/second-order identities the
/// so(7) potential must satisfy, evaluated with central differences.
/// `probe` adds probe*r*s*t to the potential; a nonzero value is a
/// falsification guard for the residual pipeline and must make them large.
std::vector<double> so7_pde_residuals(double c, double r, double s, double t,
                                      double probe = 0.0);

/// Dispatch on spec.kind; Sl2Factor evaluates at s only.
double potential_value(const PotentialSpec& spec, double r, double s, double t);

}  // namespace nilorb

#endif
