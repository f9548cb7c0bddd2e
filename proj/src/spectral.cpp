#include "ccsym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "ccsym/errors.hpp"
#include "ccsym/nbody.hpp"

namespace ccsym {

std::string to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::TraceEquations: return "trace-equations";
    case SpectralMethod::Projector: return "projector";
    case SpectralMethod::DenseOracle: return "dense-oracle";
  }
  return "unknown";
}

std::vector<double> SpectralReport::expanded() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  std::sort(out.begin(), out.end());
  return out;
}

int SpectralReport::total_multiplicity() const {
  int total = 0;
  for (const auto& e : eigenvalues) total += e.multiplicity;
  return total;
}

namespace {

void require_invariant(const Matrix& h, const InducedRepresentation& rep, double tol) {
  const double defect = verify_invariance(h, rep);
  if (defect > tol)
    throw NotInvariant("commutator " + std::to_string(defect) + " exceeds " + std::to_string(tol));
}

void sort_entries(std::vector<EigenEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const EigenEntry& a, const EigenEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.irrep < b.irrep;
  });
}

double pair_residual(const Matrix& h, const EigenEntry& e) {
  if (e.vectors.size() == 0) return 0;
  return (h * e.vectors - e.value * e.vectors).colwise().norm().maxCoeff();
}

// Splits ascending values into consecutive runs of length d whose spread is
// within tol.
std::vector<std::pair<int, double>> runs_of(const Vector& values, int d, double tol,
                                            const std::string& where) {
  const int n = static_cast<int>(values.size());
  if (n % d != 0)
    throw ClusteringFailure(where + ": block of size " + std::to_string(n) +
                            " is not a multiple of " + std::to_string(d));
  std::vector<std::pair<int, double>> out;
  for (int start = 0; start < n; start += d) {
    const double lo = values[start], hi = values[start + d - 1];
    if (hi - lo > tol)
      throw ClusteringFailure(where + ": copies spread over " + std::to_string(hi - lo));
    out.emplace_back(start, values.segment(start, d).mean());
  }
  return out;
}

Vector cubic_roots(double f1, double f2, double f3) {
  // companion matrix of x^3 - f1 x^2 + f2 x - f3
  Matrix c = Matrix::Zero(3, 3);
  c(0, 0) = f1;
  c(0, 1) = -f2;
  c(0, 2) = f3;
  c(1, 0) = 1;
  c(2, 1) = 1;
  const auto eig = hessenberg_qr_eigenvalues<double>(c);
  Vector roots(3);
  for (int i = 0; i < 3; ++i) roots[i] = eig[static_cast<std::size_t>(i)].real();
  std::sort(roots.begin(), roots.end());
  return roots;
}

double cubic_value(double x, double f1, double f2, double f3) {
  return ((x - f1) * x + f2) * x - f3;
}

}  // namespace

std::vector<double> isotypic_sums(const Matrix& h, const InducedRepresentation& rep,
                                  const CharacterTable& table, double tol) {
  require_invariant(h, rep, tol);
  const auto& g = rep.group();
  std::vector<double> sums;
  for (int i = 0; i < table.count(); ++i) {
    Complex acc = 0;
    for (FiniteGroup::Element a = 0; a < g.order(); ++a)
      acc += std::conj(table.value(i, a)) * (h * rep.matrix(a)).trace();
    sums.push_back(acc.real() / g.order());
  }
  return sums;
}

TraceSystem trace_equation_table(const Matrix& h, const InducedRepresentation& rep,
                                 const CharacterTable& table, double tol) {
  require_invariant(h, rep, tol);
  const auto mult = decompose(rep_character(rep, table.classes), table);

  TraceSystem sys;
  for (int i = 0; i < table.count(); ++i)
    for (int c = 0; c < mult[static_cast<std::size_t>(i)]; ++c) {
      sys.unknown_irrep.push_back(i);
      sys.unknowns.push_back("lambda" + std::to_string(sys.unknowns.size() + 1));
    }

  Matrix coef(table.classes.count(), static_cast<Eigen::Index>(sys.unknowns.size()));
  for (int c = 0; c < table.classes.count(); ++c) {
    TraceEquation eq;
    eq.cls = c;
    eq.class_name = table.class_names[static_cast<std::size_t>(c)];
    eq.trace = (h * rep.matrix(table.classes.representatives[static_cast<std::size_t>(c)])).trace();
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
      const double v = table.values[static_cast<std::size_t>(sys.unknown_irrep[u])]
                                   [static_cast<std::size_t>(c)].real();
      eq.coefficients.push_back(v);
      coef(c, static_cast<Eigen::Index>(u)) = v;
    }
    sys.equations.push_back(std::move(eq));
  }
  Eigen::FullPivLU<Matrix> lu(coef);
  lu.setThreshold(1e-10);
  sys.rank_deficiency = static_cast<int>(sys.unknowns.size()) - static_cast<int>(lu.rank());
  return sys;
}

double det_supplement(const Matrix& h, double shift) {
  Matrix shifted = h;
  shifted.diagonal().array() += shift;
  return shifted.partialPivLu().determinant();
}

Matrix isotypic_projector(const InducedRepresentation& rep, const CharacterTable& table,
                          int irrep) {
  const auto& g = rep.group();
  Matrix p = Matrix::Zero(rep.dim(), rep.dim());
  for (FiniteGroup::Element a = 0; a < g.order(); ++a)
    p += std::conj(table.value(irrep, a)).real() * rep.matrix(a);
  return p * (static_cast<double>(table.degrees[static_cast<std::size_t>(irrep)]) / g.order());
}

std::vector<IsotypicComponent> isotypic_decomposition(const Matrix& h,
                                                      const InducedRepresentation& rep,
                                                      const CharacterTable& table) {
  const auto sums = isotypic_sums(h, rep, table);
  const auto mult = decompose(rep_character(rep, table.classes), table);
  std::vector<IsotypicComponent> out;
  for (int i = 0; i < table.count(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    out.push_back({mult[si], table.degrees[si], isotypic_projector(rep, table, i), sums[si]});
  }
  return out;
}

SpectralReport symmetry_eigenvalues(const Matrix& h, const InducedRepresentation& rep,
                                    const CharacterTable& table, double cluster_tol) {
  const auto components = isotypic_decomposition(h, rep, table);

  SpectralReport report;
  report.method = SpectralMethod::Projector;
  for (int i = 0; i < table.count(); ++i) {
    const auto& comp = components[static_cast<std::size_t>(i)];
    if (comp.multiplicity == 0) continue;
    const std::string& name = table.irrep_names[static_cast<std::size_t>(i)];

    const Matrix basis = orthonormal_range(comp.projector);
    if (basis.cols() != comp.multiplicity * comp.degree)
      throw ClusteringFailure(name + ": projector rank " + std::to_string(basis.cols()) +
                              ", expected " + std::to_string(comp.multiplicity * comp.degree));
    Matrix block = basis.transpose() * h * basis;
    block = 0.5 * (block + block.transpose());
    const auto eig = jacobi_eigen(block);

    double copies_sum = 0;
    for (const auto& [start, value] : runs_of(eig.values, comp.degree, cluster_tol, name)) {
      EigenEntry e;
      e.value = value;
      e.multiplicity = comp.degree;
      e.irrep = i;
      e.irrep_label = name;
      e.vectors = basis * eig.vectors.middleCols(start, comp.degree);
      copies_sum += value;
      report.eigenvalues.push_back(std::move(e));
    }
    report.sum_defect = std::max(report.sum_defect, std::abs(copies_sum - comp.sum));
  }
  for (const auto& e : report.eigenvalues)
    report.residual = std::max(report.residual, pair_residual(h, e));
  sort_entries(report.eigenvalues);
  return report;
}

SpectralReport trace_determinant_eigenvalues(const Matrix& h, const InducedRepresentation& rep,
                                             const CharacterTable& table) {
  const auto sums = isotypic_sums(h, rep, table);
  const auto mult = decompose(rep_character(rep, table.classes), table);

  int doubled = -1;
  for (int i = 0; i < table.count(); ++i) {
    const int n = mult[static_cast<std::size_t>(i)];
    if (n > 2 || (n == 2 && doubled >= 0))
      throw UnderdeterminedSystem(
          "trace equations plus one determinant close only one doubled irreducible");
    if (n == 2) doubled = i;
  }

  SpectralReport report;
  report.method = SpectralMethod::TraceEquations;
  auto add = [&](double value, int i) {
    const auto si = static_cast<std::size_t>(i);
    report.eigenvalues.push_back({value, table.degrees[si], i, table.irrep_names[si], Matrix()});
  };

  const double shift = 1.0;
  double known = 1.0;
  for (int i = 0; i < table.count(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    if (mult[si] != 1) continue;
    add(sums[si], i);
    known *= std::pow(sums[si] + shift, table.degrees[si]);
  }

  if (doubled >= 0) {
    const auto sd = static_cast<std::size_t>(doubled);
    if (std::abs(known) < 1e-12)
      throw UnderdeterminedSystem("a known eigenvalue equals -1; det(H + I) carries no information");
    const double ratio = det_supplement(h, shift) / known;
    const double d = table.degrees[sd];
    // (lambda_a + 1)(lambda_b + 1), taken as the positive d-th root
    const double shifted_product = std::pow(std::abs(ratio), 1.0 / d);
    const double s = sums[sd];
    const double product = shifted_product - shift * s - shift * shift;
    const double disc = s * s - 4 * product;
    if (disc < -1e-10) throw UnderdeterminedSystem("closure gives complex eigenvalues");
    const double root = std::sqrt(std::max(0.0, disc));
    add(0.5 * (s - root), doubled);
    add(0.5 * (s + root), doubled);
  }

  for (const auto& e : report.eigenvalues)
    report.residual = std::max(report.residual, eigen_residual(h, e.value));
  sort_entries(report.eigenvalues);
  return report;
}

SpectralReport dense_symmetric_spectrum(const Matrix& h, double cluster_tol) {
  const double asym = max_abs(h - h.transpose());
  if (asym > 1e-12) throw NotSymmetric("asymmetry " + std::to_string(asym));
  const auto eig = jacobi_eigen(h);

  SpectralReport report;
  report.method = SpectralMethod::DenseOracle;
  const int n = static_cast<int>(eig.values.size());
  for (int start = 0; start < n;) {
    int end = start + 1;
    while (end < n && eig.values[end] - eig.values[end - 1] <= cluster_tol) ++end;
    EigenEntry e;
    e.value = eig.values.segment(start, end - start).mean();
    e.multiplicity = end - start;
    e.vectors = eig.vectors.middleCols(start, end - start);
    report.residual = std::max(
        report.residual,
        (h * e.vectors - e.vectors * eig.values.segment(start, end - start).asDiagonal())
            .colwise().norm().maxCoeff());
    report.eigenvalues.push_back(std::move(e));
    start = end;
  }
  return report;
}

std::vector<double> char_poly_coeffs(const Matrix& h) {
  std::vector<std::complex<Real>> roots;
  if (max_abs(h - h.transpose()) <= 1e-12) {
    const auto eig = jacobi_eigen(h);
    for (double v : eig.values) roots.emplace_back(v, 0);
  } else {
    for (auto v : hessenberg_qr_eigenvalues<Real>(h.cast<Real>())) roots.push_back(v);
  }
  // coefficients of prod (x - r), highest power first
  std::vector<std::complex<Real>> c{1};
  for (const auto& r : roots) {
    c.push_back(0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= r * c[k - 1];
  }
  std::vector<double> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(static_cast<double>(c[k].real()));
  return out;
}

double triangle_f1(double m) {
  const double r3 = std::sqrt(3.0);
  return 0.5 * (2 * r3 * m * m + (9 * r3 + 2) * m + 5);
}

double triangle_f2(double m) {
  const double r3 = std::sqrt(3.0);
  return 0.5 * (18 * m * m * m - 18 * m * m + 11 * r3 * m * m + 15 * r3 * m + 5 * m + 3);
}

double triangle_f3(double m) {
  const double r3 = std::sqrt(3.0);
  const double m2 = m * m, m3 = m2 * m;
  return -27 * r3 * m3 / 2 + 21 * r3 * m2 / 4 - 27 * m2 / 4 + 3 * m / 2 + 9 * r3 * m / 4 +
         45 * m3 / 4;
}

double triangle_degenerate_mass() {
  const double r3 = std::sqrt(3.0);
  return (2 * r3 + 9) / (18 * r3 - 15);
}

TriangleSymmetricFunctions triangle_symmetric_functions(double m) {
  if (!(m > 0)) throw NonPositiveMass("central mass must be positive, got " + std::to_string(m));
  TriangleSymmetricFunctions t;
  t.m = m;
  t.f1 = triangle_f1(m);
  t.f2 = triangle_f2(m);
  t.f3 = triangle_f3(m);
  const Vector roots = cubic_roots(t.f1, t.f2, t.f3);
  t.roots.assign(roots.begin(), roots.end());
  for (double r : t.roots)
    t.cubic_residual = std::max(t.cubic_residual, std::abs(cubic_value(r, t.f1, t.f2, t.f3)));

  // The spectrum is {0, 0} plus each cubic root twice, so the characteristic
  // polynomial is x^2 (x^3 - f1 x^2 + f2 x - f3)^2.
  const auto a = char_poly_coeffs(hessian_scaled_potential(builtin_triangle_center(m)));
  t.charpoly_f1 = -a[0] / 2;
  t.charpoly_f2 = (a[1] - t.charpoly_f1 * t.charpoly_f1) / 2;
  const double magnitude = std::sqrt(std::max(0.0, a[5]));
  // a_5 = -2 f2 f3 fixes the sign that the square root loses
  const double sign = (-a[4] / t.charpoly_f2) < 0 ? -1.0 : 1.0;
  t.charpoly_f3 = sign * magnitude;

  auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
  t.route_defect = std::max({rel(t.charpoly_f1, t.f1), rel(t.charpoly_f2, t.f2),
                             rel(t.charpoly_f3, t.f3)});
  return t;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 2) throw InputError("a grid needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  out.back() = hi;
  return out;
}

std::vector<DegenerateMass> degenerate_mass_scan(double m_lo, double m_hi, int steps) {
  if (!(m_lo > 0) || !(m_lo < m_hi)) throw InputError("need 0 < m_lo < m_hi");
  const auto grid = linspace(m_lo, m_hi, steps);

  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    double lo = grid[k], hi = grid[k + 1];
    double flo = triangle_f3(lo), fhi = triangle_f3(hi);
    if (flo == 0) {
      roots.push_back(lo);
      continue;
    }
    if (flo * fhi > 0 || fhi == 0) continue;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = triangle_f3(mid);
      if (fmid == 0) {
        lo = hi = mid;
        break;
      }
      if ((fmid < 0) == (flo < 0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  if (triangle_f3(grid.back()) == 0) roots.push_back(grid.back());

  std::vector<DegenerateMass> out;
  for (double m : roots) {
    DegenerateMass d;
    d.m = m;
    auto problem = triangle_center_problem(m);
    const Matrix h = hessian_scaled_potential(problem.config);
    for (double v : dense_symmetric_spectrum(h).expanded())
      if (std::abs(v) < 1e-8) ++d.kernel_dimension;
    for (const auto& e : symmetry_eigenvalues(h, problem.rep, problem.table).eigenvalues)
      if (std::abs(e.value) < 1e-8) ++d.zero_irrep_copies;
    out.push_back(d);
  }
  return out;
}

std::vector<ScanRow> triangle_scan(double m_lo, double m_hi, int steps, unsigned threads) {
  if (!(m_lo > 0) || !(m_lo < m_hi)) throw InputError("need 0 < m_lo < m_hi");
  const auto grid = linspace(m_lo, m_hi, steps);
  std::vector<ScanRow> rows(grid.size());

  auto fill = [&](std::size_t k) {
    const double m = grid[k];
    ScanRow& r = rows[k];
    r.m = m;
    r.f1 = triangle_f1(m);
    r.f2 = triangle_f2(m);
    r.f3 = triangle_f3(m);
    const Vector roots = cubic_roots(r.f1, r.f2, r.f3);
    r.lambda3 = roots[0];
    r.lambda4 = roots[1];
    r.lambda5 = roots[2];
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
  // Each worker owns a strided subset of rows; output order is fixed by index.
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(threads);
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < grid.size(); k += threads) fill(k);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return rows;
}

}  // namespace ccsym
