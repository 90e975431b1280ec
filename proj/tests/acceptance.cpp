// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff all pass.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nilorb/cohomogeneity.hpp"
#include "nilorb/invariants.hpp"
#include "nilorb/kahler.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/potentials.hpp"
#include "nilorb/standard_forms.hpp"

using namespace nilorb;

namespace {

int g_failures = 0;

void line(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) {
  return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b));
}

std::array<double, 3> random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.3, 2.0);
  while (true) {
    std::array<double, 3> p{u(rng), u(rng), u(rng)};
    double gap = std::min({std::abs(p[0] - p[1]), std::abs(p[0] - p[2]),
                           std::abs(p[1] - p[2])});
    if (gap > 0.15) return p;
  }
}

// ---------------------------------------------------------------- criterion 1
void criterion_triples() {
  struct Row {
    Family fam;
    int n;
    Partition label;
  };
  const std::vector<Row> rows = {
      {Family::SL, 6, {2, 2, 2}},
      {Family::SL, 7, {2, 2, 2, 1}},
      {Family::SL, 8, {2, 2, 2, 1, 1}},
      {Family::SL, 5, {3, 1, 1}},
      {Family::SL, 6, {3, 1, 1, 1}},
      {Family::SL, 7, {3, 1, 1, 1, 1}},
      {Family::SL, 8, {3, 1, 1, 1, 1, 1}},
      {Family::SO, 5, {5}},
      {Family::SO, 6, {3, 3}},
      {Family::SO, 7, {3, 2, 2}},
      {Family::SO, 12, {2, 2, 2, 2, 2, 2}},
      {Family::SO, 13, {2, 2, 2, 2, 2, 2, 1}},
      {Family::SP, 3, {2, 2, 2}},
      {Family::SP, 4, {2, 2, 2, 1, 1}},
  };
  double worst = 0.0;
  std::string worst_row;
  for (const auto& r : rows) {
    double res = representative(make_orbit(r.fam, r.n, r.label)).residual();
    if (res > worst) {
      worst = res;
      worst_row = family_name(r.fam) + "(" + std::to_string(r.n) + ") " +
                  partition_to_string(r.label);
    }
  }
  line(1, "standard triples for all listed representatives", worst <= 1e-10,
       "worst residual " + fmt(worst) + " at " + worst_row);
}

// ---------------------------------------------------------------- criterion 2
void criterion_ksquared() {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n)
    worst = std::max(worst, rel(k_squared_oracle(build_algebra(Family::SL, n)),
                                k_squared(Family::SL, n)));
  for (int n = 5; n <= 14; ++n)
    worst = std::max(worst,
                     rel(k_squared_oracle(build_algebra(Family::SO, n, SoForm::AntiDiagonal)),
                         k_squared(Family::SO, n)));
  for (int n = 2; n <= 4; ++n)
    worst = std::max(worst, rel(k_squared_oracle(build_algebra(Family::SP, n)),
                                k_squared(Family::SP, n)));
  line(2, "k^2 oracle matches the table for sl(<=8), so(5..14), sp(<=4)",
       worst <= 1e-9, "worst relative error " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 3
void criterion_invariants() {
  const double grid[4] = {0.4, 0.8, 1.3, 1.9};
  double worst = 0.0;
  for (auto spec : {make_orbit(Family::SL, 6, {2, 2, 2}),
                    make_orbit(Family::SP, 3, {2, 2, 2}),
                    make_orbit(Family::SO, 12, {2, 2, 2, 2, 2, 2})}) {
    Family fam = spec.algebra->family;
    int n = fam == Family::SP ? spec.algebra->matrix_size / 2 : spec.algebra->matrix_size;
    const double k2 = k_squared(fam, n);
    for (double r : grid)
      for (double s : grid)
        for (double t : grid) {
          AlgebraElement X = scaled_point(spec, r, s, t).element;
          for (int i = 1; i <= 3; ++i) {
            const int d = 2 * i;
            double expect = std::pow(2.0, i + 1) * k2 *
                            (std::pow(r, d) + std::pow(s, d) + std::pow(t, d));
            worst = std::max(worst, rel(eta(X, i), expect));
          }
        }
  }
  OrbitSpec so7 = make_orbit(Family::SO, 7, {3, 2, 2});
  for (double r : grid)
    for (double s : grid)
      for (double t : grid) {
        AlgebraElement X = scaled_point(so7, r, s, t).element;
        const double r2 = r * r, s2 = s * s, t2 = t * t;
        worst = std::max(worst, rel(eta(X, 1), 10 * (2 * r2 + s2 + t2)));
        worst = std::max(worst, rel(eta(X, 2), 20 * (2 * r2 * r2 + 4 * r2 * t2 +
                                                     (s2 + t2) * (s2 + t2))));
        worst = std::max(
            worst, rel(eta(X, 3), 40 * (2 * std::pow(r2, 3) + 9 * r2 * r2 * t2 +
                                        6 * r2 * t2 * (s2 + t2) + std::pow(s2 + t2, 3))));
      }
  line(3, "invariant polynomials on 4x4x4 grids (generic + so(7))", worst <= 1e-9,
       "worst relative error " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 4
void criterion_potential_consistency() {
  OrbitSpec spec = make_orbit(Family::SL, 6, {2, 2, 2});
  const double k2 = k_squared(Family::SL, 6);
  const double grid[5] = {0.35, 0.7, 1.05, 1.55, 2.1};
  double worst = 0.0;
  int points = 0;
  for (double r : grid)
    for (double s : grid)
      for (double t : grid) {
        // offsets keep the three parameters pairwise distinct on all 125 points
        double rr = r, ss = s + 0.011, tt = t + 0.027;
        AlgebraElement X = scaled_point(spec, rr, ss, tt).element;
        KappaChain ch = kappa_chain(eta(X, 1), eta(X, 2), eta(X, 3), k2);
        double quart = 4 * k2 * quartic_solve(ch.eta1t, ch.eta2t, ch.eta3t);
        double direct = 4 * k2 * (rr + ss + tt);
        worst = std::max({worst, rel(ch.rho, quart), rel(ch.rho, direct),
                          rel(quart, direct)});
        ++points;
      }
  // the r=s=t limit
  for (double s : {0.5, 1.0, 1.7}) {
    double e1 = 3 * s * s, e2 = 3 * std::pow(s, 4), e3 = 3 * std::pow(s, 6);
    KappaChain ch = kappa_chain(4 * k2 * e1, 8 * k2 * e2, 16 * k2 * e3, k2);
    worst = std::max(worst, rel(ch.rho, 12 * k2 * s));
  }
  line(4, "kappa-chain / quartic / closed form agree on the c=0 potential",
       worst <= 1e-8,
       "worst relative error " + fmt(worst) + " over " +
           std::to_string(points) + " grid points + equal-parameter limit");
}

// ---------------------------------------------------------------- criterion 5
void criterion_hyperkahler() {
  struct Case {
    Family fam;
    int n;
    Partition label;
    double k2;
  };
  const std::vector<Case> cases = {
      {Family::SL, 6, {2, 2, 2}, 3.0},
      {Family::SP, 3, {2, 2, 2}, 2.0},
      {Family::SO, 12, {2, 2, 2, 2, 2, 2}, 5.0},
  };
  std::mt19937_64 rng(42);
  double worst = 0.0;
  std::string worst_name;
  bool ok = true;
  for (const auto& cs : cases) {
    OrbitSpec spec = make_orbit(cs.fam, cs.n, cs.label);
    for (int pt = 0; pt < 3; ++pt) {
      auto p = random_params(rng);
      for (double c : {0.0, 0.5, 2.0}) {
        PotentialSpec pot{PotentialKind::Generic, cs.k2, c};
        CheckReport rep = verify_hyperkahler(spec, pot, p[0], p[1], p[2]);
        if (rep.status != CheckStatus::Pass) ok = false;
        for (const auto& [name, v] : rep.residuals) {
          if (name == "omega_closedness") continue;  // separate guard tolerance
          if (v > worst) {
            worst = v;
            worst_name = family_name(cs.fam) + std::to_string(cs.n) + ":" + name;
          }
        }
      }
    }
  }
  line(5, "quaternionic relations on sl(6)/sp(3)/so(12), 3 points x c in {0,0.5,2}",
       ok, "worst residual " + fmt(worst) + " (" + worst_name + ")");
}

// ---------------------------------------------------------------- criterion 6
void criterion_obstruction() {
  OrbitSpec spec = make_orbit(Family::SL, 7, {2, 2, 2, 1});
  const double k2 = k_squared(Family::SL, 7);
  auto j2_residual = [&](double c) {
    PotentialSpec pot{PotentialKind::Generic, k2, c};
    CheckReport rep = verify_hyperkahler(spec, pot, 0.8, 0.15, 1.3);
    for (const auto& [name, v] : rep.residuals)
      if (name == "J_squared_plus_one") return v;
    return -1.0;
  };
  double with_c = j2_residual(0.5);
  double flat = j2_residual(0.0);
  line(6, "trivial-submodule obstruction: J^2 fails at c=0.5, passes at c=0",
       with_c >= 1e-2 && flat <= 1e-5,
       "J^2+1 residual " + fmt(with_c) + " at c=0.5 vs " +
           fmt(flat) + " at c=0");
}

// ---------------------------------------------------------------- criterion 7
void criterion_so7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  double worst_pde = 0.0, worst_forms = 0.0, worst_hom = 0.0;
  for (int pt = 0; pt < 5; ++pt) {
    double r = u(rng), s = u(rng), t = u(rng);
    for (double c : {0.0, 1.0, 2.0}) {
      for (double v : so7_pde_residuals(c, r, s, t))
        worst_pde = std::max(worst_pde, v);
      const double r2 = r * r, s2 = s * s, t2 = t * t;
      double z1 = 2 * (2 * r2 + s2 + t2);
      double z2 = 4 * (2 * r2 * r2 + 4 * r2 * t2 + (s2 + t2) * (s2 + t2));
      double z3 = 4 * r2 * r2;
      worst_forms = std::max(
          worst_forms, rel(so7_potential(r, s, t, c), so7_potential_zeta(z1, z2, z3, c)));
    }
    for (double lam : {0.5, 2.0})
      worst_hom = std::max(worst_hom, rel(so7_potential(lam * r, lam * s, lam * t, 0.0),
                                          lam * so7_potential(r, s, t, 0.0)));
  }
  OrbitSpec spec = make_orbit(Family::SO, 7, {3, 2, 2});
  double worst_j2 = 0.0;
  bool hk_ok = true;
  for (double c : {0.0, 1.0}) {
    PotentialSpec pot{PotentialKind::So7, 0.0, c};
    CheckReport rep = verify_hyperkahler(spec, pot, 0.9, 0.5, 1.4);
    if (rep.status != CheckStatus::Pass) hk_ok = false;
    for (const auto& [name, v] : rep.residuals)
      if (name == "J_squared_plus_one") worst_j2 = std::max(worst_j2, v);
  }
  bool ok = worst_pde <= 1e-6 && worst_forms <= 1e-8 && worst_j2 <= 1e-5 &&
            worst_hom <= 1e-10 && hk_ok;
  line(7, "so(7) family: 7 PDE residuals, two potential forms, J^2, homogeneity",
       ok,
       "pde " + fmt(worst_pde) + ", forms " + fmt(worst_forms) +
           ", J^2 " + fmt(worst_j2) + ", hom " + fmt(worst_hom));
}

// ---------------------------------------------------------------- criterion 8
void criterion_cohomogeneity() {
  bool ok = true;
  std::string detail;
  for (const auto& row : cohomogeneity_table()) {
    OrbitSpec spec = make_orbit(row.family, row.n, parse_partition(row.orbit));
    for (unsigned seed : {42u, 43u, 44u}) {
      int got = cohomogeneity(spec, 3, seed).cohomogeneity;
      if (got != row.expected) {
        ok = false;
        detail += row.algebra + " " + row.orbit + " -> " + std::to_string(got) +
                  " (expected " + std::to_string(row.expected) + ") ";
      }
    }
  }
  line(8, "cohomogeneity table, every classical row, 3 seeds", ok,
       ok ? std::to_string(cohomogeneity_table().size()) + " rows reproduced"
          : detail);
}

// ---------------------------------------------------------------- criterion 9
void criterion_standard_forms() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_complex = [&](int n) {
    Matrix Z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Z(i, j) = Complex(gauss(rng), gauss(rng));
    return Z;
  };
  auto random_unitary = [&](int n) {
    Eigen::HouseholderQR<Matrix> qr(random_complex(n));
    Matrix Q = qr.householderQ();
    Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) Q.col(i) *= R(i, i) / std::abs(R(i, i));
    return Q;
  };
  double worst_rec = 0.0, worst_inv = 0.0;
  for (int n = 2; n <= 8; ++n) {
    Matrix A = random_complex(n);
    Matrix sym = ((A + A.transpose()) * 0.5).eval();
    Matrix skw = ((A - A.transpose()) * 0.5).eval();
    Matrix gen = random_complex(n);
    FormResult fs = takagi(sym), fk = skew_standard(skw), fg = svd_complex(gen);
    worst_rec = std::max({worst_rec, fs.residual, fk.residual, fg.residual});
    Eigen::VectorXd s0 = canonical_entries(fs);
    Eigen::VectorXd k0 = canonical_entries(fk, true);
    Eigen::VectorXd g0 = canonical_entries(fg);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix U = random_unitary(n), V = random_unitary(n);
      worst_inv = std::max(
          worst_inv, (canonical_entries(takagi(U * sym * U.transpose())) - s0).norm() /
                         (1.0 + s0.norm()));
      worst_inv = std::max(worst_inv,
                           (canonical_entries(skew_standard(U * skw * U.transpose()), true) - k0)
                                   .norm() /
                               (1.0 + k0.norm()));
      worst_inv = std::max(
          worst_inv,
          (canonical_entries(svd_complex(U * gen * V.adjoint())) - g0).norm() /
              (1.0 + g0.norm()));
    }
  }
  line(9, "standard forms: reconstruction and invariance, sizes 2-8",
       worst_rec <= 1e-10 && worst_inv <= 1e-8,
       "reconstruction " + fmt(worst_rec) + ", invariance " +
           fmt(worst_inv));
}

// --------------------------------------------------------------- criterion 10
void criterion_killing_oracle() {
  double worst = 0.0;
  for (auto g : {build_algebra(Family::SL, 4),
                 build_algebra(Family::SO, 7, SoForm::AntiDiagonal),
                 build_algebra(Family::SP, 3)}) {
    for (size_t i = 0; i < g->basis.size(); ++i)
      for (size_t j = i; j < g->basis.size(); ++j) {
        AlgebraElement A(g, g->basis[i]), B(g, g->basis[j]);
        Complex fast = killing_inner(A, B);
        Complex slow = killing_inner_ad_oracle(A, B);
        worst = std::max(worst, std::abs(fast - slow) / (1.0 + std::abs(slow)));
      }
  }
  line(10, "trace-form inner product vs ad-representation oracle, all basis pairs",
       worst <= 1e-9, "worst relative error " + fmt(worst));
}

}  // namespace

int main() {
  criterion_triples();
  criterion_ksquared();
  criterion_invariants();
  criterion_potential_consistency();
  criterion_hyperkahler();
  criterion_obstruction();
  criterion_so7();
  criterion_cohomogeneity();
  criterion_standard_forms();
  criterion_killing_oracle();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
