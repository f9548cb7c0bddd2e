#include "ccsym/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "ccsym/errors.hpp"
#include "ccsym/io.hpp"
#include "ccsym/stability.hpp"

namespace ccsym {

namespace {

const double kRoot2 = std::sqrt(2.0);
const double kRoot3 = std::sqrt(3.0);

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

double relative(double x, double y) { return std::abs(x - y) / std::abs(y); }

CriterionResult square_spectrum() {
  auto sq = square_problem();
  const Matrix h = hessian_scaled_potential(sq.config);
  const auto expected = sorted({0, 0, 3.0 / 8, 3 * kRoot2 / 4, kRoot2 / 4 + 1.0 / 8,
                                kRoot2 / 4 + 1.0 / 8, kRoot2 / 2 + 1.0 / 8, kRoot2 / 2 + 1.0 / 8});
  const double proj = multiset_distance(symmetry_eigenvalues(h, sq.rep, sq.table).expanded(), expected);
  const double trace =
      multiset_distance(trace_determinant_eigenvalues(h, sq.rep, sq.table).expanded(), expected);
  return {1, "square scaled-Hessian spectrum", proj <= 1e-10 && trace <= 1e-10,
          "projector " + sci(proj) + ", trace+det " + sci(trace)};
}

CriterionResult square_traces() {
  auto sq = square_problem();
  const Matrix h = hessian_scaled_potential(sq.config);
  const auto& g = sq.group;
  const std::vector<std::pair<std::string, double>> expected{
      {"e", 9 * kRoot2 / 4 + 7.0 / 8},    {"a", -3.0 / 8 - 3 * kRoot2 / 4},
      {"a^2", -1.0 / 8 - 3 * kRoot2 / 4}, {"r", 3.0 / 8 - 3 * kRoot2 / 4},
      {"ar", -3.0 / 8 + 3 * kRoot2 / 4}};
  double worst = 0;
  for (const auto& [label, value] : expected)
    worst = std::max(worst, std::abs((h * sq.rep.matrix(g.find(label))).trace() - value));
  return {2, "square trace values", worst <= 1e-12, "max defect " + sci(worst)};
}

CriterionResult square_determinant() {
  auto sq = square_problem();
  const double det = det_supplement(hessian_scaled_potential(sq.config), 1.0);
  const double expected = 340505.0 / 32768 + 963897 * kRoot2 / 131072;
  const double rel = relative(det, expected);
  return {3, "det(H1 + I)", rel <= 1e-10, "relative defect " + sci(rel)};
}

CriterionResult induced_characters() {
  auto check = [](const SymmetricProblem& p, const std::vector<double>& chi,
                  const std::vector<int>& mult) {
    const auto c = rep_character(p.rep, p.table.classes);
    if (c.size() != chi.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (std::abs(c[i] - Complex(chi[i], 0)) > 1e-9) return false;
    return decompose(c, p.table) == mult;
  };
  const bool sq = check(square_problem(), {8, 0, 0, 0, 0}, {1, 1, 1, 1, 2});
  const bool tr = check(triangle_center_problem(1.0), {8, -1, 0}, {1, 1, 3});
  return {4, "induced characters and multiplicities", sq && tr,
          std::string("square ") + (sq ? "ok" : "wrong") + ", triangle " + (tr ? "ok" : "wrong")};
}

CriterionResult symmetric_functions() {
  double worst = 0;
  for (double m : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const auto t = triangle_symmetric_functions(m);
    worst = std::max({worst, relative(t.charpoly_f1, t.f1), relative(t.charpoly_f2, t.f2),
                      relative(t.charpoly_f3, t.f3)});
  }
  return {5, "triangle symmetric functions, two routes", worst <= 1e-9,
          "max relative defect " + sci(worst)};
}

CriterionResult degenerate_mass() {
  const auto roots = degenerate_mass_scan(0.1, 2.0, 1000);
  if (roots.size() != 1)
    return {6, "degenerate mass", false, std::to_string(roots.size()) + " roots found"};
  const auto& d = roots.front();
  const double err = std::abs(d.m - triangle_degenerate_mass());
  const bool pass = err <= 1e-10 && d.kernel_dimension == 3;
  return {6, "degenerate mass", pass,
          "root defect " + sci(err) + ", kernel dimension " + std::to_string(d.kernel_dimension) +
              " (expected 3), zero irreducible copies " + std::to_string(d.zero_irrep_copies)};
}

CriterionResult triangle_hessU() {
  double worst = 0;
  for (int k = 1; k <= 20; ++k) {
    const double m = 3.0 * k / 20;
    auto p = triangle_center_problem(m);
    worst = std::max(worst, *hessU_reduced_eigenvalues(p.config, p.rep, p.table, m).closed_form_defect);
  }
  return {7, "triangle HessU closed forms", worst <= 1e-9, "max defect " + sci(worst)};
}

CriterionResult square_hessU() {
  auto sq = square_problem();
  const auto expected =
      sorted({1.0 / 16 + kRoot2 / 8, -1.0 / 32 - kRoot2 / 16, 1.0 / 16 - kRoot2 / 16,
              -1.0 / 32 + kRoot2 / 8, 0, 0, kRoot2 / 16, kRoot2 / 16});
  const double d = multiset_distance(
      hessU_reduced_eigenvalues(sq.config, sq.rep, sq.table).spectrum.expanded(), expected);
  return {8, "square HessU spectrum", d <= 1e-10, "defect " + sci(d)};
}

std::vector<Complex> square_expected_stability() {
  const double omega = std::sqrt(2 + 4 * kRoot2) / 8;
  const double re = std::pow(2.0, 0.25) / 4;
  std::vector<Complex> v{0, 0};
  for (int k = 0; k < 3; ++k) {
    v.emplace_back(0, omega);
    v.emplace_back(0, -omega);
  }
  for (double sr : {1.0, -1.0})
    for (double si : {1.0, -1.0}) v.emplace_back(sr * re, si * omega);
  const double im = std::sqrt(68 * kRoot2 - 9);
  for (double si : {1.0, -1.0}) {
    const Complex root = std::sqrt(Complex(-2 * kRoot2 - 1, si * im)) / 8.0;
    v.push_back(root);
    v.push_back(-root);
  }
  return v;
}

CriterionResult square_stability() {
  auto sq = square_problem();
  const auto full = full_spectrum(linearize(sq.config));
  const double d = multiset_distance(full.eigenvalues, square_expected_stability());
  const auto c = classify(full.eigenvalues);
  const bool pass = d <= 1e-8 && c.verdict == "unstable" && c.elliptic_dimension == 6 &&
                    c.hyperbolic == 8 && c.zero == 2;
  return {9, "square stability", pass,
          "spectrum defect " + sci(d) + ", verdict " + c.verdict + ", elliptic " +
              std::to_string(c.elliptic_dimension) + ", hyperbolic " + std::to_string(c.hyperbolic)};
}

CriterionResult triangle_blocks() {
  double worst_b1 = 0, worst_b2 = 0, worst_union = 0;
  bool found = true;
  for (double m : {0.5, 1.0, 2.0}) {
    auto p = triangle_center_problem(m);
    const double omega = std::sqrt(3 * kRoot3 + 9 * m) / 3;
    const auto blocks = reduced_blocks(p.config, p.rep, p.table);
    const ReducedBlock* b1 = nullptr;
    const ReducedBlock* b2 = nullptr;
    for (const auto& b : blocks) {
      const bool one_dim = std::all_of(b.members.begin(), b.members.end(), [&](const BlockMember& x) {
        return p.table.degrees[static_cast<std::size_t>(x.irrep)] == 1;
      });
      const bool kernel = std::all_of(b.members.begin(), b.members.end(),
                                      [](const BlockMember& x) { return std::abs(x.value) <= 1e-8; });
      if (one_dim && b.block.rows() == 4) b1 = &b;
      if (kernel && b.block.rows() == 4) b2 = &b;
    }
    if (!b1 || !b2) {
      found = false;
      continue;
    }
    const std::vector<Complex> e1{0, 0, {0, omega}, {0, -omega}};
    const std::vector<Complex> e2{{0, omega}, {0, omega}, {0, -omega}, {0, -omega}};
    worst_b1 = std::max(worst_b1, multiset_distance(b1->eigenvalues, e1));
    worst_b2 = std::max(worst_b2, multiset_distance(b2->eigenvalues, e2));
    worst_union = std::max(worst_union, multiset_distance(block_spectrum(blocks),
                                                          full_spectrum(linearize(p.config)).eigenvalues));
  }
  const bool pass = found && worst_b1 <= 1e-8 && worst_b2 <= 1e-8 && worst_union <= 1e-8;
  return {10, "triangle stability blocks", pass,
          found ? "B1 " + sci(worst_b1) + ", B2 " + sci(worst_b2) + ", union vs oracle " + sci(worst_union)
                : "B1/B2 blocks not identified"};
}

CriterionResult property_suites() {
  std::mt19937_64 rng(7);
  double fd = 0;
  for (int t = 0; t < 100; ++t) {
    const auto d = check_derivatives(random_configuration(2 + t % 4, rng));
    fd = std::max({fd, d.gradient, d.hessian, d.scaled_gradient, d.scaled_hessian});
  }

  double ortho = 0;
  for (int k = 3; k <= 8; ++k) {
    const auto table = character_table(dihedral_group(k));
    for (int i = 0; i < table.count(); ++i)
      for (int j = 0; j < table.count(); ++j) {
        const auto ip = char_inner_product(table.values[static_cast<std::size_t>(i)],
                                           table.values[static_cast<std::size_t>(j)], table.classes);
        ortho = std::max(ortho, std::abs(ip - Complex(i == j ? 1 : 0, 0)));
      }
  }

  double proj = 0, sym = 0, inv = 0;
  std::vector<SymmetricProblem> problems;
  problems.push_back(square_problem());
  for (double m : {0.5, 1.0, 2.0}) problems.push_back(triangle_center_problem(m));
  for (const auto& p : problems) {
    const int n = p.rep.dim();
    Matrix total = Matrix::Zero(n, n);
    for (int i = 0; i < p.table.count(); ++i) {
      const Matrix pi = isotypic_projector(p.rep, p.table, i);
      proj = std::max({proj, max_abs(pi * pi - pi), max_abs(pi - pi.transpose())});
      total += pi;
    }
    proj = std::max(proj, max_abs(total - Matrix::Identity(n, n)));
    sym = std::max(sym, classify(full_spectrum(linearize(p.config)).eigenvalues).symmetry_defect);
    inv = std::max({inv, verify_invariance(hessian_scaled_potential(p.config), p.rep),
                    verify_invariance(hessian_potential(p.config), p.rep)});
  }

  const bool pass = fd <= 1e-6 && ortho <= 1e-12 && proj <= 1e-10 && sym <= 1e-8 && inv <= 1e-10;
  return {11, "property suites", pass,
          "finite differences " + sci(fd) + ", orthonormality " + sci(ortho) + ", projectors " +
              sci(proj) + ", spectrum symmetry " + sci(sym) + ", invariance " + sci(inv)};
}

CriterionResult oracle_equivalence() {
  std::mt19937_64 rng(12);
  double worst = 0;
  for (int k : {4, 3}) {
    for (int t = 0; t < 50; ++t) {
      const double axis = k == 4 ? std::numbers::pi / 2 : 0.0;
      auto p = dihedral_problem(random_symmetric_configuration(k, axis, rng), k, axis);
      for (const Matrix& h : {hessian_scaled_potential(p.config), hessian_potential(p.config)}) {
        const auto reduced = symmetry_eigenvalues(h, p.rep, p.table).expanded();
        const auto dense = dense_symmetric_spectrum(h).expanded();
        worst = std::max(worst, multiset_distance(reduced, dense));
      }
    }
  }
  return {12, "oracle equivalence on random symmetric configurations", worst <= 1e-9,
          "max defect " + sci(worst)};
}

CriterionResult guarded(int id, const std::string& name, const std::function<CriterionResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {id, name, false, e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  const std::vector<std::pair<std::string, std::function<CriterionResult()>>> checks{
      {"square scaled-Hessian spectrum", square_spectrum},
      {"square trace values", square_traces},
      {"det(H1 + I)", square_determinant},
      {"induced characters and multiplicities", induced_characters},
      {"triangle symmetric functions, two routes", symmetric_functions},
      {"degenerate mass", degenerate_mass},
      {"triangle HessU closed forms", triangle_hessU},
      {"square HessU spectrum", square_hessU},
      {"square stability", square_stability},
      {"triangle stability blocks", triangle_blocks},
      {"property suites", property_suites},
      {"oracle equivalence on random symmetric configurations", oracle_equivalence},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i)
    out.push_back(guarded(static_cast<int>(i + 1), checks[i].first, checks[i].second));
  return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail
        << '\n';
    all = all && r.pass;
  }
  return all;
}

}  // namespace ccsym
