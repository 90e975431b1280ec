#ifndef NILORB_ORBIT_HPP
#define NILORB_ORBIT_HPP

#include "nilorb/lie_algebra.hpp"

#include <optional>

namespace nilorb {

using Partition = std::vector<int>;

Partition parse_partition(const std::string& text);  // "3,2,2" -> {3,2,2}
std::string partition_to_string(const Partition& p);

/// A nilpotent orbit of a classical algebra, labelled by its Jordan partition.
struct OrbitSpec {
  AlgebraPtr algebra;
  Partition label;  // weakly decreasing, sums to the matrix size
  std::optional<int> expected_cohomogeneity;
};

/// Builds the algebra in the realization (form matrix) that carries the
/// explicit representative for this orbit, then wraps it in a spec.
OrbitSpec make_orbit(Family family, int n, const Partition& label);
OrbitSpec make_orbit(AlgebraPtr algebra, const Partition& label);

/// A point of the orbit. For the multi-parameter families r,s,t record the
/// block scalings; for sampled generic points they are all 1.
struct OrbitPoint {
  OrbitSpec spec;
  double r = 1.0, s = 1.0, t = 1.0;
  AlgebraElement element;
  /// For the three-block families: the commuting summands (scaled), in the
  /// order (s-block, r-block, t-block). Empty otherwise.
  std::vector<AlgebraElement> summands;
};

/// The explicit representative of the orbit together with its standard
/// triple {H=[X,-sigma X], X, -sigma X}. Throws for unsupported labels.
StandardTriple representative(const OrbitSpec& spec);

/// Parameterized orbit points:
///   - (2,2,2,1^k) in sl / sp and (2^6,1^k) in so: three commuting rank-one
///     sl2 blocks scaled by s, r, t;
///   - (3,2,2,1^k) in so: the three-parameter matrix with entries
///     sqrt(2) r, t, s.
OrbitPoint scaled_point(const OrbitSpec& spec, double r, double s, double t);

/// Jordan partition of a nilpotent matrix from ranks of successive powers.
Partition jordan_partition(const AlgebraElement& A, double rank_tol = 1e-9);

/// Complex dimension of the adjoint orbit through A: rank of B -> [B,A]
/// over the complex basis.
int orbit_dim_complex(const AlgebraElement& A, double rank_tol = 1e-9);

}  // namespace nilorb

#endif
