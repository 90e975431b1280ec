#ifndef NILORB_COHOMOGENEITY_HPP
#define NILORB_COHOMOGENEITY_HPP

#include "nilorb/orbit.hpp"

namespace nilorb {

struct CohomResult {
  OrbitSpec spec;
  int dim_C_orbit = 0;
  int compact_orbit_dim = 0;
  int cohomogeneity = 0;  // 2 * dim_C_orbit - compact_orbit_dim
  int samples_used = 0;
};

/// Ad(exp(Z)) applied to the stored representative, Z pseudo-random of
/// Frobenius norm 1. Deterministic per seed.
OrbitPoint generic_point(const OrbitSpec& spec, unsigned seed);

/// Real rank of A -> [A, X] over the compact form's real basis.
int compact_orbit_dim(const AlgebraElement& X, double rank_rel = 1e-9);

/// Throws std::logic_error if the complex orbit dimension is not constant
/// across samples (a representative bug, not a sampling accident).
CohomResult cohomogeneity(const OrbitSpec& spec, int n_samples = 5,
                          unsigned seed = 42);

/// Reference rows: classical entries are recomputed, exceptional ones are
/// table data only.
struct CohomRow {
  std::string algebra;  // e.g. "sl(6)", "e7"
  std::string orbit;    // partition, or Dynkin weights for exceptional rows
  int expected = 0;
  bool computable = false;
  Family family = Family::SL;  // meaningful only when computable
  int n = 0;
};

std::vector<CohomRow> cohomogeneity_table();
std::vector<CohomRow> exceptional_cohomogeneity_table();

}  // namespace nilorb

#endif
