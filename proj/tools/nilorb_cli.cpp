#include <array>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "nilorb/cohomogeneity.hpp"
#include "nilorb/invariants.hpp"
#include "nilorb/kahler.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/potentials.hpp"
#include "nilorb/report.hpp"
#include "nilorb/standard_forms.hpp"

using namespace nilorb;

namespace {

struct CommonArgs {
  std::string algebra = "sl";
  int n = 0;
  std::string orbit;
  std::string params = "1,2,3";
  double c = 0.0;
  double tol = 0.0;
  unsigned seed = 42;
  int samples = 5;
  bool json = false;
};

Family parse_family(const std::string& name) {
  if (name == "sl") return Family::SL;
  if (name == "so") return Family::SO;
  if (name == "sp") return Family::SP;
  throw CLI::ValidationError("--algebra must be one of sl, so, sp");
}

std::array<double, 3> parse_params(const std::string& text) {
  std::array<double, 3> out{};
  std::stringstream ss(text);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 3) throw CLI::ValidationError("--params takes exactly three values");
    out[i++] = std::stod(tok);
  }
  if (i != 3) throw CLI::ValidationError("--params takes exactly three values");
  return out;
}

int emit(const std::vector<CheckReport>& reports, bool json) {
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << (json ? to_json(r) + "\n" : to_text(r));
    if (r.status == CheckStatus::Fail) ok = false;
  }
  return ok ? 0 : 1;
}

CheckReport triple_report(Family fam, int n, const Partition& label, double tol) {
  OrbitSpec spec = make_orbit(fam, n, label);
  StandardTriple triple = representative(spec);
  CheckReport rep;
  rep.check_name = "standard-triple";
  rep.anchor = "sl2-triple-relations";
  rep.inputs = {{"algebra", family_name(fam) + std::to_string(n)},
                {"orbit", partition_to_string(label)}};
  rep.tolerance = tol;
  rep.residuals = {{"bracket_relations", triple.residual()}};
  rep.finalize();
  return rep;
}

int cmd_verify_triples(const CommonArgs& a) {
  double tol = a.tol > 0 ? a.tol : 1e-10;
  std::vector<CheckReport> reports;
  if (!a.orbit.empty()) {
    reports.push_back(
        triple_report(parse_family(a.algebra), a.n, parse_partition(a.orbit), tol));
  } else {
    struct Row {
      Family fam;
      int n;
      const char* orbit;
    };
    const Row rows[] = {
        {Family::SL, 6, "2,2,2"},        {Family::SL, 7, "2,2,2,1"},
        {Family::SL, 8, "2,2,2,1,1"},    {Family::SL, 5, "3,1,1"},
        {Family::SL, 6, "3,1,1,1"},      {Family::SL, 7, "3,1,1,1,1"},
        {Family::SL, 8, "3,1,1,1,1,1"},  {Family::SO, 5, "5"},
        {Family::SO, 6, "3,3"},          {Family::SO, 7, "3,2,2"},
        {Family::SO, 12, "2,2,2,2,2,2"}, {Family::SO, 13, "2,2,2,2,2,2,1"},
        {Family::SP, 3, "2,2,2"},        {Family::SP, 4, "2,2,2,1,1"},
    };
    for (const Row& r : rows)
      reports.push_back(triple_report(r.fam, r.n, parse_partition(r.orbit), tol));
  }
  return emit(reports, a.json);
}

int cmd_invariants(const CommonArgs& a) {
  Family fam = parse_family(a.algebra);
  OrbitSpec spec = make_orbit(fam, a.n, parse_partition(a.orbit));
  auto [r, s, t] = parse_params(a.params);
  OrbitPoint p = scaled_point(spec, r, s, t);
  double tol = a.tol > 0 ? a.tol : 1e-9;

  CheckReport rep;
  rep.check_name = "invariant-polynomials";
  rep.anchor = "eta-closed-form";
  rep.inputs = {{"algebra", family_name(fam) + std::to_string(a.n)},
                {"orbit", a.orbit},
                {"params", a.params}};
  rep.tolerance = tol;
  const bool so7 = fam == Family::SO && spec.algebra->so_form == SoForm::So7Block;
  for (int i = 1; i <= 3; ++i) {
    double value = eta(p.element, i);
    double expected;
    if (so7) {
      const double r2 = r * r, s2 = s * s, t2 = t * t, w = s2 + t2;
      expected = i == 1   ? 10 * (2 * r2 + s2 + t2)
                 : i == 2 ? 20 * (2 * r2 * r2 + 4 * r2 * t2 + w * w)
                          : 40 * (2 * r2 * r2 * r2 + 9 * r2 * r2 * t2 +
                                  6 * r2 * t2 * w + w * w * w);
    } else {
      double k2 = k_squared(fam, a.n);
      auto pw = [&](double u) { return std::pow(u, 2 * i); };
      expected = std::pow(2.0, i + 1) * k2 * (pw(r) + pw(s) + pw(t));
    }
    rep.residuals.emplace_back(
        "eta" + std::to_string(i),
        std::abs(value - expected) / (1.0 + std::abs(expected)));
  }
  rep.finalize();
  return emit({rep}, a.json);
}

int cmd_potential(const CommonArgs& a, const std::string& fam_name, double k2) {
  auto [r, s, t] = parse_params(a.params);
  double tol = a.tol > 0 ? a.tol : 1e-8;
  CheckReport rep;
  rep.check_name = "potential-value";
  rep.inputs = {
      {"family", fam_name}, {"params", a.params}, {"c", std::to_string(a.c)}};
  rep.tolerance = tol;
  double value;
  if (fam_name == "so7") {
    value = so7_potential(r, s, t, a.c);
    rep.anchor = "so7-closed-form";
    rep.residuals = {{"self", 0.0}};
  } else {
    value = generic_potential(r, s, t, k2, a.c);
    rep.anchor = "three-block-closed-form";
    // Cross-check against the invariant-chain evaluation at c = 0.
    if (a.c == 0.0) {
      double chain;
      auto pw = [&](double u, int i) { return std::pow(u, 2 * i); };
      double e1 = 4 * k2 * (pw(r, 1) + pw(s, 1) + pw(t, 1));
      double e2 = 8 * k2 * (pw(r, 2) + pw(s, 2) + pw(t, 2));
      double e3 = 16 * k2 * (pw(r, 3) + pw(s, 3) + pw(t, 3));
      chain = kappa_chain(e1, e2, e3, k2).rho;
      rep.residuals = {
          {"chain_agreement", std::abs(value - chain) / (1.0 + std::abs(value))}};
    } else {
      rep.residuals = {{"self", 0.0}};
    }
  }
  rep.inputs["value"] = std::to_string(value);
  rep.finalize();
  if (!a.json) std::cout << "value " << value << "\n";
  return emit({rep}, a.json);
}

int cmd_check_hk(const CommonArgs& a) {
  Family fam = parse_family(a.algebra);
  OrbitSpec spec = make_orbit(fam, a.n, parse_partition(a.orbit));
  auto [r, s, t] = parse_params(a.params);
  PotentialSpec pot;
  pot.c = a.c;
  if (fam == Family::SO && spec.algebra->so_form == SoForm::So7Block) {
    pot.kind = PotentialKind::So7;
  } else {
    pot.kind = PotentialKind::Generic;
    pot.k_squared = k_squared(fam, a.n);
  }
  HyperkahlerOptions opts;
  opts.tol = a.tol > 0 ? a.tol : 1e-5;
  opts.seed = a.seed;
  return emit({verify_hyperkahler(spec, pot, r, s, t, opts)}, a.json);
}

int cmd_pde_so7(const CommonArgs& a) {
  auto [r, s, t] = parse_params(a.params);
  double tol = a.tol > 0 ? a.tol : 1e-6;
  std::vector<double> res = so7_pde_residuals(a.c, r, s, t);
  const char* names[] = {"coupled_system", "first_order_a", "first_order_b",
                         "combined",       "rho_s_rho_t",   "rho_r_rho_t",
                         "rho_t_solved"};
  CheckReport rep;
  rep.check_name = "so7-pde-system";
  rep.anchor = "so7-potential-equations";
  rep.inputs = {{"params", a.params}, {"c", std::to_string(a.c)}};
  rep.tolerance = tol;
  for (size_t i = 0; i < res.size(); ++i) rep.residuals.emplace_back(names[i], res[i]);
  rep.finalize();
  return emit({rep}, a.json);
}

int cmd_cohomogeneity(const CommonArgs& a) {
  std::vector<CheckReport> reports;
  auto run = [&](Family fam, int n, const Partition& label, int expected) {
    OrbitSpec spec = make_orbit(fam, n, label);
    CohomResult res = cohomogeneity(spec, a.samples, a.seed);
    CheckReport rep;
    rep.check_name = "cohomogeneity";
    rep.anchor = "orbit-rank-count";
    rep.inputs = {{"algebra", family_name(fam) + std::to_string(n)},
                  {"orbit", partition_to_string(label)},
                  {"dim_C", std::to_string(res.dim_C_orbit)},
                  {"compact_dim", std::to_string(res.compact_orbit_dim)},
                  {"cohomogeneity", std::to_string(res.cohomogeneity)}};
    rep.tolerance = 0.0;
    rep.residuals = {{"table_mismatch",
                      expected >= 0 ? std::abs(res.cohomogeneity - expected) : 0.0}};
    rep.finalize();
    reports.push_back(rep);
  };
  if (!a.orbit.empty()) {
    Family fam = parse_family(a.algebra);
    Partition label = parse_partition(a.orbit);
    int expected = -1;
    for (const auto& row : cohomogeneity_table())
      if (row.computable && row.family == fam && row.n == a.n &&
          row.orbit == partition_to_string(label))
        expected = row.expected;
    run(fam, a.n, label, expected);
  } else {
    for (const auto& row : cohomogeneity_table())
      run(row.family, row.n, parse_partition(row.orbit), row.expected);
  }
  return emit(reports, a.json);
}

int cmd_tables(const CommonArgs& a) {
  std::vector<CheckReport> reports;
  for (const auto& row : cohomogeneity_table()) {
    CohomResult res =
        cohomogeneity(make_orbit(row.family, row.n, parse_partition(row.orbit)),
                      a.samples, a.seed);
    CheckReport rep;
    rep.check_name = "cohomogeneity-table";
    rep.anchor = "orbit-rank-count";
    rep.inputs = {{"algebra", row.algebra},
                  {"orbit", row.orbit},
                  {"expected", std::to_string(row.expected)},
                  {"computed", std::to_string(res.cohomogeneity)}};
    rep.tolerance = 0.0;
    rep.residuals = {
        {"table_mismatch", std::abs(double(res.cohomogeneity - row.expected))}};
    rep.finalize();
    reports.push_back(rep);
  }
  for (const auto& row : exceptional_cohomogeneity_table()) {
    CheckReport rep;
    rep.check_name = "cohomogeneity-table";
    rep.anchor = "orbit-rank-count";
    rep.inputs = {{"algebra", row.algebra},
                  {"orbit", row.orbit},
                  {"expected", std::to_string(row.expected)}};
    rep.tolerance = 0.0;
    rep.status = CheckStatus::Skipped;  // reference only: no matrix model
    reports.push_back(rep);
  }
  return emit(reports, a.json);
}

int cmd_standard_form(const CommonArgs& a, const std::string& kind, int size) {
  std::mt19937_64 rng(a.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_matrix = [&](int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
  };
  Matrix A = random_matrix(size);
  FormResult res;
  if (kind == "symmetric") {
    A = ((A + A.transpose()) / 2.0).eval();
    res = takagi(A);
  } else if (kind == "skew") {
    A = ((A - A.transpose()) / 2.0).eval();
    res = skew_standard(A);
  } else if (kind == "general") {
    res = svd_complex(A);
  } else {
    throw CLI::ValidationError("--kind must be symmetric, skew or general");
  }
  double tol = a.tol > 0 ? a.tol : 1e-10;
  CheckReport rep;
  rep.check_name = "standard-form";
  rep.anchor = "unitary-congruence-normal-form";
  rep.inputs = {{"kind", kind},
                {"size", std::to_string(size)},
                {"seed", std::to_string(a.seed)}};
  rep.tolerance = tol;
  rep.residuals = {
      {"reconstruction", res.residual},
      {"left_unitarity",
       (res.transform * res.transform.adjoint() - Matrix::Identity(size, size))
           .norm()}};
  rep.finalize();
  return emit({rep}, a.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for nilpotent-orbit geometry"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string family = "generic";
  double k2 = 1.0;
  std::string kind = "symmetric";
  int size = 4;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", a.algebra, "family: sl, so or sp");
    cmd->add_option("--n", a.n, "rank parameter (matrix size; rank for sp)");
    cmd->add_option("--orbit", a.orbit, "partition, e.g. 2,2,2");
    cmd->add_option("--params", a.params, "orbit parameters r,s,t");
    cmd->add_option("--c", a.c, "potential family constant");
    cmd->add_option("--tol", a.tol, "tolerance override");
    cmd->add_option("--seed", a.seed, "random seed");
    cmd->add_option("--samples", a.samples, "number of sample points");
    cmd->add_flag("--json", a.json, "emit one JSON object per report");
  };

  CLI::App* c1 = app.add_subcommand("verify-triples", "standard triple residuals");
  CLI::App* c2 = app.add_subcommand("invariants", "invariant polynomials at a point");
  CLI::App* c3 = app.add_subcommand("potential", "potential value and consistency");
  c3->add_option("--family", family, "generic or so7");
  c3->add_option("--k2", k2, "normalization constant for the generic family");
  CLI::App* c4 = app.add_subcommand("check-hk", "quaternionic structure checks");
  CLI::App* c5 = app.add_subcommand("pde-so7", "so(7) potential equation residuals");
  CLI::App* c6 = app.add_subcommand("cohomogeneity", "cohomogeneity of one orbit");
  CLI::App* c7 = app.add_subcommand("tables", "full cohomogeneity table");
  CLI::App* c8 = app.add_subcommand("standard-form", "matrix normal forms");
  c8->add_option("--kind", kind, "symmetric, skew or general");
  c8->add_option("--size", size, "matrix size");
  for (CLI::App* c : {c1, c2, c3, c4, c5, c6, c7, c8}) add_common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c1->parsed()) return cmd_verify_triples(a);
    if (c2->parsed()) return cmd_invariants(a);
    if (c3->parsed()) return cmd_potential(a, family, k2);
    if (c4->parsed()) return cmd_check_hk(a);
    if (c5->parsed()) return cmd_pde_so7(a);
    if (c6->parsed()) return cmd_cohomogeneity(a);
    if (c7->parsed()) return cmd_tables(a);
    if (c8->parsed()) return cmd_standard_form(a, kind, size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
