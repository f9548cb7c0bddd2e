#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ccsym/errors.hpp"
#include "ccsym/spectral.hpp"

using namespace ccsym;

namespace {

const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);

std::vector<double> square_expected() {
  std::vector<double> v{0, 0, 3.0 / 8, 3 * r2 / 4, r2 / 4 + 1.0 / 8, r2 / 4 + 1.0 / 8,
                        r2 / 2 + 1.0 / 8, r2 / 2 + 1.0 / 8};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("isotypic sums of the square") {
  const auto p = square_problem();
  const auto s = isotypic_sums(hessian_scaled_potential(p.config), p.rep, p.table);
  REQUIRE(s.size() == 5);
  // one unknown per copy: chi1..chi4 once, chi5 twice
  const double total = s[0] + s[1] + s[2] + s[3] + 2 * s[4];
  CHECK(total == doctest::Approx(9 * r2 / 4 + 7.0 / 8).epsilon(1e-14));
}

TEST_CASE("trace equations of the square leave one unknown free") {
  const auto p = square_problem();
  const auto sys = trace_equation_table(hessian_scaled_potential(p.config), p.rep, p.table);
  CHECK(sys.unknowns.size() == 6);
  CHECK(sys.equations.size() == 5);
  CHECK(sys.rank_deficiency == 1);
  CHECK(sys.equations[0].trace == doctest::Approx(9 * r2 / 4 + 7.0 / 8).epsilon(1e-14));
  CHECK(sys.equations[0].coefficients == std::vector<double>{1, 1, 1, 1, 2, 2});
}

TEST_CASE("determinant supplement") {
  const Matrix d = Eigen::Vector3d(1, 2, 3).asDiagonal();
  CHECK(det_supplement(d, 1) == doctest::Approx(24));
  CHECK(det_supplement(d, 0) == doctest::Approx(6));
  const auto p = square_problem();
  CHECK(det_supplement(hessian_scaled_potential(p.config), 1) ==
        doctest::Approx(340505.0 / 32768 + 963897 * r2 / 131072).epsilon(1e-12));
}

TEST_CASE("isotypic projectors") {
  for (const auto& p : {square_problem(), triangle_center_problem(0.7)}) {
    const int n = p.rep.dim();
    const auto chi = rep_character(p.rep, p.table.classes);
    const auto mult = decompose(chi, p.table);
    Matrix total = Matrix::Zero(n, n);
    for (int i = 0; i < p.table.count(); ++i) {
      const Matrix pi = isotypic_projector(p.rep, p.table, i);
      CHECK(max_abs(pi * pi - pi) < 1e-13);
      CHECK(max_abs(pi - pi.transpose()) < 1e-13);
      CHECK(pi.trace() ==
            doctest::Approx(mult[static_cast<std::size_t>(i)] * p.table.degrees[static_cast<std::size_t>(i)]));
      total += pi;
    }
    CHECK(max_abs(total - Matrix::Identity(n, n)) < 1e-13);
  }
}

TEST_CASE("projector route on the square") {
  const auto p = square_problem();
  const Matrix h = hessian_scaled_potential(p.config);
  const auto rep = symmetry_eigenvalues(h, p.rep, p.table);
  CHECK(rep.method == SpectralMethod::Projector);
  CHECK(rep.total_multiplicity() == 8);
  CHECK(multiset_distance(rep.expanded(), square_expected()) < 1e-12);
  CHECK(rep.residual < 1e-12);
  CHECK(rep.sum_defect < 1e-12);
  for (const auto& e : rep.eigenvalues) CHECK_FALSE(e.irrep_label.empty());

  const auto td = trace_determinant_eigenvalues(h, p.rep, p.table);
  CHECK(td.method == SpectralMethod::TraceEquations);
  CHECK(multiset_distance(td.expanded(), square_expected()) < 1e-12);
}

TEST_CASE("trace and determinant route needs exactly one repeated irrep") {
  const auto p = triangle_center_problem(1);
  CHECK_THROWS_AS(trace_determinant_eigenvalues(hessian_scaled_potential(p.config), p.rep, p.table),
                  UnderdeterminedSystem);
}

TEST_CASE("multiples of the identity") {
  const auto p = triangle_center_problem(1);
  const auto rep = symmetry_eigenvalues(2.5 * Matrix::Identity(8, 8), p.rep, p.table);
  CHECK(rep.total_multiplicity() == 8);
  for (double v : rep.expanded()) CHECK(v == doctest::Approx(2.5));
}

TEST_CASE("a broken symmetry is reported") {
  const auto p = square_problem();
  Matrix h = hessian_scaled_potential(p.config);
  h(0, 2) = -h(0, 2);
  h(2, 0) = -h(2, 0);
  CHECK_THROWS_AS(isotypic_sums(h, p.rep, p.table), NotInvariant);
  CHECK_THROWS_AS(symmetry_eigenvalues(h, p.rep, p.table), NotInvariant);
}

TEST_CASE("dense oracle") {
  const auto rep = dense_symmetric_spectrum(Eigen::Vector4d(1, 1, 2, 1 + 1e-12).asDiagonal());
  REQUIRE(rep.eigenvalues.size() == 2);
  CHECK(rep.eigenvalues[0].multiplicity == 3);
  CHECK(rep.eigenvalues[1].value == doctest::Approx(2));
  CHECK(rep.method == SpectralMethod::DenseOracle);
  Matrix bad = Matrix::Identity(3, 3);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(dense_symmetric_spectrum(bad), NotSymmetric);
  CHECK(to_string(SpectralMethod::DenseOracle) == "dense-oracle");
}

TEST_CASE("characteristic polynomial coefficients") {
  const auto a = char_poly_coeffs(Eigen::Vector3d(1, 2, 3).asDiagonal());
  REQUIRE(a.size() == 3);
  CHECK(a[0] == doctest::Approx(-6));
  CHECK(a[1] == doctest::Approx(11));
  CHECK(a[2] == doctest::Approx(-6));
  Matrix rot(2, 2);
  rot << 0, 1, -1, 0;
  const auto b = char_poly_coeffs(rot);
  CHECK(std::abs(b[0]) < 1e-14);
  CHECK(b[1] == doctest::Approx(1));
}

TEST_CASE("triangle symmetric functions") {
  CHECK(triangle_f1(1) == doctest::Approx(-0.5 * char_poly_coeffs(hessian_scaled_potential(builtin_triangle_center(1)))[0]));
  const double ms = triangle_degenerate_mass();
  CHECK(ms == doctest::Approx((2 * r3 + 9) / (18 * r3 - 15)).epsilon(1e-15));
  CHECK(std::abs(triangle_f3(ms)) < 1e-12);
  CHECK(triangle_f3(0.5 * ms) * triangle_f3(2 * ms) < 0);
  CHECK_THROWS_AS(triangle_symmetric_functions(0), NonPositiveMass);
}

TEST_CASE("cubic roots agree with the projector route on a grid") {
  for (double m : linspace(0.1, 3.0, 50)) {
    const auto t = triangle_symmetric_functions(m);
    REQUIRE(t.roots.size() == 3);
    CHECK(t.cubic_residual < 1e-10);
    CHECK(t.route_defect < 1e-9);
    const auto p = triangle_center_problem(m);
    const auto rep = symmetry_eigenvalues(hessian_scaled_potential(p.config), p.rep, p.table);
    std::vector<double> two_dim;
    for (const auto& e : rep.eigenvalues)
      if (e.irrep == 2)
        for (int c = 0; c < e.multiplicity / 2; ++c) two_dim.push_back(e.value);
    CHECK(multiset_distance(two_dim, t.roots) < 1e-9);
  }
}

TEST_CASE("degenerate mass scan") {
  const auto roots = degenerate_mass_scan(0.1, 2.0, 1000);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].m - triangle_degenerate_mass()) < 1e-10);
  // the extra zero lies in the two-dimensional irrep, so it comes as a pair
  CHECK(roots[0].kernel_dimension == 4);
  CHECK(roots[0].zero_irrep_copies == 3);
  CHECK(degenerate_mass_scan(1.0, 2.0, 10).empty());
}

TEST_CASE("triangle scan") {
  const auto rows = triangle_scan(0.1, 2.0, 40, 3);
  REQUIRE(rows.size() == 40);
  CHECK(rows.front().m == doctest::Approx(0.1));
  CHECK(rows.back().m == doctest::Approx(2.0));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].m < rows[i].m);
  const auto t = triangle_symmetric_functions(rows[7].m);
  CHECK(rows[7].f2 == doctest::Approx(t.f2));
  CHECK(rows[7].lambda3 <= rows[7].lambda4);
  CHECK(rows[7].lambda4 <= rows[7].lambda5);
  const auto serial = triangle_scan(0.1, 2.0, 40, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].lambda5 == serial[i].lambda5);
}

TEST_CASE("linspace") {
  const auto g = linspace(0, 1, 5);
  CHECK(g == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  CHECK_THROWS_AS(linspace(0, 1, 1), InputError);
}

TEST_CASE("no degenerate mass above two") {
  CHECK(degenerate_mass_scan(2.0, 5.0, 1000).empty());
}

TEST_CASE("last characteristic coefficient is the squared cubic product") {
  const auto a = char_poly_coeffs(hessian_scaled_potential(builtin_triangle_center(1)));
  REQUIRE(a.size() == 8);
  CHECK(std::abs(a[5] - triangle_f3(1) * triangle_f3(1)) / std::abs(a[5]) < 1e-8);
  CHECK(std::abs(a[6]) < 1e-9);
  CHECK(std::abs(a[7]) < 1e-9);
}
