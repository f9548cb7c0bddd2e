#include "ccsym/induced_rep.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <string>

#include "ccsym/errors.hpp"

namespace ccsym {

Eigen::Matrix2d rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2d q;
  q << c, -s, s, c;
  return q;
}

Eigen::Matrix2d reflection(double axis) {
  const double c = std::cos(2 * axis), s = std::sin(2 * axis);
  Eigen::Matrix2d f;
  f << c, s, s, -c;
  return f;
}

namespace {

// Snap entries within 1e-15 of 0 or +-1, so that rotations by multiples of
// pi/2 are exact.
Eigen::Matrix2d snapped(Eigen::Matrix2d q) {
  for (int i = 0; i < 4; ++i) {
    double& v = q.data()[i];
    for (double target : {-1.0, 0.0, 1.0})
      if (std::abs(v - target) < 1e-15) v = target;
  }
  return q;
}

bool orthogonal(const Eigen::Matrix2d& q) {
  return (q.transpose() * q - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace

GeometricAction GeometricAction::from_generators(
    const FiniteGroup& g, const std::map<FiniteGroup::Element, Eigen::Matrix2d>& generators) {
  for (const auto& [el, q] : generators)
    if (!orthogonal(q)) throw InvalidAction("image of " + g.label(el) + " is not orthogonal");

  std::vector<std::optional<Eigen::Matrix2d>> images(static_cast<std::size_t>(g.order()));
  images[static_cast<std::size_t>(g.identity())] = Eigen::Matrix2d::Identity();
  std::deque<FiniteGroup::Element> queue{g.identity()};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& [s, q] : generators) {
      const auto y = g.mul(x, s);
      const Eigen::Matrix2d img = snapped(*images[static_cast<std::size_t>(x)] * q);
      auto& slot = images[static_cast<std::size_t>(y)];
      if (!slot) {
        slot = img;
        queue.push_back(y);
      } else if ((*slot - img).cwiseAbs().maxCoeff() > 1e-12) {
        throw InvalidAction("generator images violate a relation at " + g.label(y));
      }
    }
  }

  GeometricAction act;
  for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
    if (!images[static_cast<std::size_t>(a)])
      throw InvalidAction("generators do not reach " + g.label(a));
    act.images_.push_back(*images[static_cast<std::size_t>(a)]);
  }
  // Closure under the full table, not just generator steps.
  for (FiniteGroup::Element a = 0; a < g.order(); ++a)
    for (FiniteGroup::Element b = 0; b < g.order(); ++b)
      if ((act.image(g.mul(a, b)) - act.image(a) * act.image(b)).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidAction("images are not a homomorphism at " + g.label(a) + "*" + g.label(b));
  return act;
}

GeometricAction dihedral_action(const FiniteGroup& g, double axis) {
  if (!g.dihedral_degree()) throw UnsupportedGroup("dihedral action needs a dihedral group");
  const int k = *g.dihedral_degree();
  // element 1 is a, element k is r
  return GeometricAction::from_generators(
      g, {{1, rotation(2 * std::numbers::pi / k)}, {k, reflection(axis)}});
}

GeometricAction square_action(const FiniteGroup& d4) {
  return dihedral_action(d4, std::numbers::pi / 2);
}

GeometricAction triangle_action(const FiniteGroup& d3) { return dihedral_action(d3, 0.0); }

InducedRepresentation::InducedRepresentation(FiniteGroup group, std::vector<Matrix> matrices,
                                             std::vector<std::vector<int>> permutations)
    : group_(std::move(group)),
      matrices_(std::move(matrices)),
      permutations_(std::move(permutations)) {
  if (static_cast<int>(matrices_.size()) != group_.order() ||
      permutations_.size() != matrices_.size())
    throw DimensionMismatch("need one matrix and permutation per group element");
  const auto d = matrices_.front().rows();
  for (const auto& m : matrices_)
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("matrices differ in size");
}

InducedRepresentation induce(const MassedConfiguration& cfg, const FiniteGroup& g,
                             const GeometricAction& act, double tol) {
  if (static_cast<int>(act.size()) != g.order())
    throw InvalidAction("action does not cover the group");
  const int n = static_cast<int>(cfg.size());
  std::vector<Matrix> mats;
  std::vector<std::vector<int>> perms;

  for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
    const Eigen::Matrix2d& q = act.image(a);
    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < n; ++s) {
        const auto js = static_cast<std::size_t>(j), ss = static_cast<std::size_t>(s);
        const bool same_mass =
            std::abs(cfg.mass(ss) - cfg.mass(js)) <= tol * std::max(1.0, cfg.mass(js));
        if (!same_mass || (q * cfg.position(ss) - cfg.position(js)).norm() > tol) continue;
        if (sigma[js] >= 0)
          throw AmbiguousMatch("element " + g.label(a) + " maps bodies " +
                               std::to_string(sigma[js] + 1) + " and " + std::to_string(s + 1) +
                               " onto body " + std::to_string(j + 1));
        sigma[js] = s;
      }
      if (sigma[static_cast<std::size_t>(j)] < 0)
        throw NotSymmetric("element " + g.label(a) + " sends no body onto body " +
                           std::to_string(j + 1));
      if (hit[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])])
        throw NotSymmetric("element " + g.label(a) + " does not permute the bodies");
      hit[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] = true;
    }

    Matrix d = Matrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) d.block<2, 2>(2 * j, 2 * sigma[static_cast<std::size_t>(j)]) = q;
    mats.push_back(std::move(d));
    perms.push_back(std::move(sigma));
  }
  return InducedRepresentation(g, std::move(mats), std::move(perms));
}

ClassFunction rep_character(const InducedRepresentation& rep, const ConjugacyClasses& classes) {
  ClassFunction chi;
  for (const auto& members : classes.classes) {
    const double first = rep.matrix(members.front()).trace();
    for (auto m : members) {
      const double tr = rep.matrix(m).trace();
      if (std::abs(tr - first) > 1e-9)
        throw NotClassFunction("traces " + std::to_string(first) + " and " + std::to_string(tr) +
                               " in one class");
    }
    chi.emplace_back(first, 0.0);
  }
  return chi;
}

double verify_homomorphism(const InducedRepresentation& rep) {
  const auto& g = rep.group();
  double worst = 0.0;
  for (FiniteGroup::Element a = 0; a < g.order(); ++a)
    for (FiniteGroup::Element b = 0; b < g.order(); ++b)
      worst = std::max(worst, max_abs(rep.matrix(g.mul(a, b)) - rep.matrix(a) * rep.matrix(b)));
  return worst;
}

double verify_invariance(const Matrix& h, const InducedRepresentation& rep) {
  if (h.rows() != rep.dim() || h.cols() != rep.dim())
    throw DimensionMismatch("matrix is " + std::to_string(h.rows()) + "x" +
                            std::to_string(h.cols()) + ", representation has dimension " +
                            std::to_string(rep.dim()));
  double worst = 0.0;
  for (const auto& d : rep.matrices()) worst = std::max(worst, max_abs(h * d - d * h));
  return worst;
}

MassedConfiguration random_symmetric_configuration(int k, double axis, std::mt19937_64& rng) {
  if (k < 3) throw InvalidOrder("dihedral degree must be at least 3");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Real> masses;
  std::vector<PlanarPoint> points;
  auto place = [&](double radius, double angle, double mass) {
    masses.push_back(mass);
    points.push_back({Real(radius * std::cos(angle)), Real(radius * std::sin(angle))});
  };

  const double sector = std::numbers::pi / k;
  if (unit(rng) < 0.5) place(0.0, 0.0, 0.5 + 1.5 * unit(rng));

  const int axis_orbits = 1 + (unit(rng) < 0.5 ? 1 : 0);
  const bool generic = unit(rng) < 0.7;
  double radius = 0.6;
  for (int o = 0; o < axis_orbits + (generic ? 1 : 0); ++o) {
    radius += 0.5 + 0.5 * unit(rng);
    const double mass = 0.5 + 1.5 * unit(rng);
    if (o < axis_orbits) {
      // either family of reflection axes
      const double start = axis + (unit(rng) < 0.5 ? 0.0 : sector);
      for (int j = 0; j < k; ++j) place(radius, start + 2 * sector * j, mass);
    } else {
      const double offset = sector * (0.2 + 0.6 * unit(rng));
      for (int j = 0; j < k; ++j) {
        place(radius, axis + offset + 2 * sector * j, mass);
        place(radius, axis - offset + 2 * sector * j, mass);
      }
    }
  }
  return MassedConfiguration(std::move(masses), std::move(points));
}

SymmetricProblem square_problem() {
  auto cfg = builtin_square();
  auto g = dihedral_group(4);
  auto table = character_table(g);
  auto rep = induce(cfg, g, square_action(g));
  return {std::move(cfg), std::move(g), std::move(table), std::move(rep)};
}

SymmetricProblem triangle_center_problem(double m) {
  auto cfg = builtin_triangle_center(m);
  auto g = dihedral_group(3, DihedralLabels::Triangle);
  auto table = character_table(g);
  auto rep = induce(cfg, g, triangle_action(g));
  return {std::move(cfg), std::move(g), std::move(table), std::move(rep)};
}

SymmetricProblem dihedral_problem(MassedConfiguration cfg, int k, double axis, double tol) {
  auto g = dihedral_group(k);
  auto table = character_table(g);
  auto rep = induce(cfg, g, dihedral_action(g, axis), tol);
  return {std::move(cfg), std::move(g), std::move(table), std::move(rep)};
}

}  // namespace ccsym
