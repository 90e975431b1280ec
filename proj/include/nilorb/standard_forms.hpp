#ifndef NILORB_STANDARD_FORMS_HPP
#define NILORB_STANDARD_FORMS_HPP

#include "nilorb/lie_algebra.hpp"

namespace nilorb {

/// canonical = transform * input * transform_right, with transform unitary.
/// For the congruence forms (symmetric, skew) transform_right is the
/// transpose of transform; for the SVD it is the right unitary factor q, so
/// input = transform^H * canonical * transform_right^H.
struct FormResult {
  Matrix transform;
  Matrix transform_right;
  Matrix canonical;
  double residual = 0.0;  // reconstruction error / (1 + input norm)
};

/// Z symmetric: returns unitary g with g Z g^t real diagonal, nonnegative,
/// descending (the diagonal entries are the singular values of Z).
/// Degenerate spectra of Z conj(Z) are handled blockwise.
FormResult takagi(const Matrix& Z);

/// Z skew-symmetric: returns unitary g with g Z g^t block anti-diagonal,
/// blocks [[0,x],[-x,0]] with x > 0 descending, then a zero block
/// (one zero line when the size is odd).
FormResult skew_standard(const Matrix& Z);

/// A = u D q^H with D = canonical real nonnegative descending.
FormResult svd_complex(const Matrix& A);

/// Convenience: the canonical diagonal (symmetric / general) or the block
/// moduli (skew) as a real vector, descending.
Eigen::VectorXd canonical_entries(const FormResult& r, bool skew = false);

}  // namespace nilorb

#endif
