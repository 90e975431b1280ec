#ifndef NILORB_INVARIANTS_HPP
#define NILORB_INVARIANTS_HPP

#include "nilorb/lie_algebra.hpp"

namespace nilorb {

/// The i'th invariant of a nonzero element, i in {1,2,3}:
///   eta1 = <X,X'>, eta2 = -<[[XX']],[[XX']]>, eta3 = -<[[XXX']],[[X'XX']]>
/// with X' = sigma X. Values are asserted real before truncation.
double eta(const AlgebraElement& X, int i);

/// so(7)-specific invariants: zeta_j = eta_j / 5 for j=1,2 and
/// zeta3 = eta1(X^2)/5 = tr(X^2 (X^2)^H). Requires an so realization.
double zeta(const AlgebraElement& X, int i);

/// The degree-(2,3) map X -> [[XX'X'X'X]] + [[X'X'XXX']] + 2 [[X'XX'XX']].
AlgebraElement zmap(const AlgebraElement& X);

/// Ratio between the ambient inner product on a highest-root sl2 and the
/// sl2's own negative Killing form. Same size conventions as build_algebra
/// (sp(n) has matrices of size 2n). so requires n >= 5.
double k_squared(Family family, int n);

/// <E, sigma E>/4 for a minimal-orbit triple member of the realization;
/// must reproduce k_squared.
double k_squared_oracle(const AlgebraPtr& algebra);

/// Reference values for the algebras without a matrix realization here.
struct KSquaredRow {
  std::string type;
  double expected;
  bool computable;
};
std::vector<KSquaredRow> k_squared_reference();

}  // namespace nilorb

#endif
