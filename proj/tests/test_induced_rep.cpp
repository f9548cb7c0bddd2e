#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ccsym/errors.hpp"
#include "ccsym/induced_rep.hpp"

using namespace ccsym;

namespace {

Eigen::Matrix2d block(const Matrix& d, int i, int j) {
  return d.block<2, 2>(2 * i, 2 * j);
}

bool only_blocks(const Matrix& d, const std::vector<std::pair<int, int>>& at) {
  const int n = static_cast<int>(d.rows() / 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool expected = false;
      for (const auto& [a, b] : at) expected = expected || (a == i && b == j);
      if (!expected && max_abs(block(d, i, j)) != 0) return false;
      if (expected && max_abs(block(d, i, j)) == 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("planar rotation and reflection") {
  CHECK(max_abs(rotation(std::numbers::pi / 2) - (Eigen::Matrix2d() << 0, -1, 1, 0).finished()) < 1e-15);
  CHECK(max_abs(reflection(std::numbers::pi / 2) - Eigen::Matrix2d(Eigen::Vector2d(-1, 1).asDiagonal())) < 1e-15);
  CHECK(max_abs(reflection(0) - Eigen::Matrix2d(Eigen::Vector2d(1, -1).asDiagonal())) == 0);
  const Eigen::Matrix2d s = reflection(0.3);
  CHECK(max_abs(s * s - Eigen::Matrix2d::Identity()) < 1e-15);
  CHECK(s.determinant() == doctest::Approx(-1));
}

TEST_CASE("square representation of the rotation a") {
  const auto p = square_problem();
  const Matrix& d = p.rep.matrix(p.group.find("a"));
  // 1-based block positions (1,4), (2,1), (3,2), (4,3)
  CHECK(only_blocks(d, {{0, 3}, {1, 0}, {2, 1}, {3, 2}}));
  CHECK(max_abs(block(d, 1, 0) - rotation(std::numbers::pi / 2)) < 1e-15);
  CHECK(max_abs(d * p.config.z() - p.config.z()) < 1e-14);
  CHECK(max_abs(p.rep.matrix(p.group.identity()) - Matrix::Identity(8, 8)) == 0);
  CHECK(p.rep.permutation(p.group.find("a")) == std::vector<int>{3, 0, 1, 2});
}

TEST_CASE("triangle rotation fixes the central body") {
  const auto p = triangle_center_problem(1.0);
  const Matrix& d = p.rep.matrix(p.group.find("R"));
  CHECK(p.rep.permutation(p.group.find("R"))[3] == 3);
  CHECK(max_abs(block(d, 3, 3) - rotation(2 * std::numbers::pi / 3)) < 1e-15);
  const Matrix& t = p.rep.matrix(p.group.find("T"));
  CHECK(p.rep.permutation(p.group.find("T"))[0] == 0);
  CHECK(max_abs(block(t, 0, 0) - reflection(0)) == 0);
}

TEST_CASE("induced characters") {
  const auto sq = square_problem();
  const auto chi4 = rep_character(sq.rep, sq.table.classes);
  const ClassFunction expected4{8, 0, 0, 0, 0};
  for (std::size_t c = 0; c < 5; ++c) CHECK(std::abs(chi4[c] - expected4[c]) < 1e-12);

  const auto tr = triangle_center_problem(0.4);
  const auto chi3 = rep_character(tr.rep, tr.table.classes);
  const ClassFunction expected3{8, -1, 0};
  for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(chi3[c] - expected3[c]) < 1e-12);
  CHECK(decompose(chi3, tr.table) == std::vector<int>{1, 1, 3});
}

TEST_CASE("a single body at the origin carries the planar representation") {
  const auto g = dihedral_group(3);
  const auto rep = induce(MassedConfiguration({1}, {{0, 0}}), g, dihedral_action(g, 0));
  const auto chi = rep_character(rep, conjugacy_classes(g));
  CHECK(chi[0] == Complex(2, 0));
  CHECK(std::abs(chi[1] - Complex(-1, 0)) < 1e-15);
  CHECK(std::abs(chi[2]) < 1e-15);
}

TEST_CASE("induced representations are homomorphisms") {
  CHECK(verify_homomorphism(square_problem().rep) <= 1e-14);
  CHECK(verify_homomorphism(triangle_center_problem(2).rep) <= 1e-14);

  const auto sq = square_problem();
  auto mats = sq.rep.matrices();
  mats[1](0, 0) += 1e-4;
  std::vector<std::vector<int>> perms;
  for (int a = 0; a < sq.group.order(); ++a) perms.push_back(sq.rep.permutation(a));
  const InducedRepresentation broken(sq.group, mats, perms);
  CHECK(verify_homomorphism(broken) >= 1e-4);
}

TEST_CASE("Hessians commute with the representation") {
  const auto sq = square_problem();
  CHECK(verify_invariance(hessian_scaled_potential(sq.config), sq.rep) <= 1e-12);
  CHECK(verify_invariance(hessian_potential(sq.config), sq.rep) <= 1e-12);
  const auto tr = triangle_center_problem(1);
  CHECK(verify_invariance(hessian_scaled_potential(tr.config), tr.rep) <= 1e-12);

  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  Matrix x(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) x(i, j) = g(rng);
  x = 0.5 * (x + x.transpose());
  CHECK(verify_invariance(x, sq.rep) > 0.1);

  Matrix avg = Matrix::Zero(8, 8);
  for (const auto& d : sq.rep.matrices()) avg += d * x * d.transpose();
  CHECK(verify_invariance(avg, sq.rep) <= 1e-12);

  CHECK_THROWS_AS(verify_invariance(Matrix::Zero(6, 6), sq.rep), DimensionMismatch);
}

TEST_CASE("symmetry matching failures") {
  const auto d4 = dihedral_group(4);
  const auto act = square_action(d4);
  const auto bent = MassedConfiguration({1, 1, 1, 1}, {{2.1, 0}, {0, 2}, {-2, 0}, {0, -2}});
  CHECK_THROWS_AS(induce(bent, d4, act), NotSymmetric);
  const auto heavy = MassedConfiguration({2, 1, 1, 1}, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}});
  CHECK_THROWS_AS(induce(heavy, d4, act), NotSymmetric);
  const auto close = MassedConfiguration({1, 1, 1, 1, 1},
                                         {{2, 0}, {0, 2}, {-2, 0}, {0, -2}, {0, 2 + 1e-6}});
  CHECK_THROWS(induce(close, d4, act, 1e-3));
}

TEST_CASE("geometric actions") {
  const auto d4 = dihedral_group(4);
  const auto act = dihedral_action(d4, std::numbers::pi / 2);
  REQUIRE(act.size() == 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK(max_abs(act.image(d4.mul(a, b)) - act.image(a) * act.image(b)) < 1e-14);

  std::map<FiniteGroup::Element, Eigen::Matrix2d> gens{{d4.find("a"), rotation(0.5)},
                                                       {d4.find("r"), reflection(0)}};
  CHECK_THROWS_AS(GeometricAction::from_generators(d4, gens), InvalidAction);
  std::map<FiniteGroup::Element, Eigen::Matrix2d> partial{{d4.find("a^2"), rotation(std::numbers::pi)}};
  CHECK_THROWS_AS(GeometricAction::from_generators(d4, partial), InvalidAction);
  std::map<FiniteGroup::Element, Eigen::Matrix2d> scaled{{d4.find("a"), 2 * rotation(std::numbers::pi / 2)},
                                                         {d4.find("r"), reflection(0)}};
  CHECK_THROWS_AS(GeometricAction::from_generators(d4, scaled), InvalidAction);
}

TEST_CASE("random symmetric configurations are symmetric") {
  std::mt19937_64 rng(9);
  for (int k = 3; k <= 6; ++k)
    for (double axis : {0.0, std::numbers::pi / 2, 0.4}) {
      const auto p = dihedral_problem(random_symmetric_configuration(k, axis, rng), k, axis);
      CHECK(verify_homomorphism(p.rep) <= 1e-12);
      CHECK(verify_invariance(hessian_potential(p.config), p.rep) <= 1e-10);
    }
}
