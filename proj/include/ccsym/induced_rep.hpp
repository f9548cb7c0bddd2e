#pragma once

#include <map>
#include <random>
#include <vector>

#include "ccsym/groups.hpp"
#include "ccsym/linalg.hpp"
#include "ccsym/nbody.hpp"

namespace ccsym {

/// Rotation by `theta` radians.
Eigen::Matrix2d rotation(double theta);

/// Reflection across the line through the origin at angle `axis` radians.
/// axis = pi/2 gives diag(-1, 1); axis = 0 gives diag(1, -1).
Eigen::Matrix2d reflection(double axis);

/// Planar orthogonal image of every group element.
class GeometricAction {
 public:
  /// Extends generator images multiplicatively over the whole group. Throws
  /// InvalidAction when an image is not orthogonal, the generators do not
  /// reach every element, or a group relation is violated.
  static GeometricAction from_generators(
      const FiniteGroup& g, const std::map<FiniteGroup::Element, Eigen::Matrix2d>& generators);

  const Eigen::Matrix2d& image(FiniteGroup::Element a) const {
    return images_[static_cast<std::size_t>(a)];
  }
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<Eigen::Matrix2d> images_;
};

/// a -> R(2 pi / k), r -> reflection across the axis at `axis` radians.
GeometricAction dihedral_action(const FiniteGroup& g, double axis);

/// D4 acting on the square: r is reflection across the y-axis.
GeometricAction square_action(const FiniteGroup& d4);

/// D3 acting on the triangle: T is reflection across the x-axis.
GeometricAction triangle_action(const FiniteGroup& d3);

/// Orthogonal 2n x 2n representation on configuration space. For element A
/// with planar image Q and body permutation sigma, block (j, sigma(j)) is Q,
/// so that Q q_sigma(j) = q_j.
class InducedRepresentation {
 public:
  InducedRepresentation(FiniteGroup group, std::vector<Matrix> matrices,
                        std::vector<std::vector<int>> permutations);

  const FiniteGroup& group() const { return group_; }
  int dim() const { return static_cast<int>(matrices_.front().rows()); }
  int bodies() const { return dim() / 2; }
  const Matrix& matrix(FiniteGroup::Element a) const {
    return matrices_[static_cast<std::size_t>(a)];
  }
  const std::vector<int>& permutation(FiniteGroup::Element a) const {
    return permutations_[static_cast<std::size_t>(a)];
  }
  const std::vector<Matrix>& matrices() const { return matrices_; }

 private:
  FiniteGroup group_;
  std::vector<Matrix> matrices_;
  std::vector<std::vector<int>> permutations_;
};

/// Throws NotSymmetric if some element maps a body onto no body of equal mass
/// within `tol`, AmbiguousMatch if it maps onto more than one.
InducedRepresentation induce(const MassedConfiguration& cfg, const FiniteGroup& g,
                             const GeometricAction& act, double tol = 1e-9);

/// Trace of each representation matrix, one value per conjugacy class.
/// Throws NotClassFunction if traces within a class disagree beyond 1e-9.
ClassFunction rep_character(const InducedRepresentation& rep, const ConjugacyClasses& classes);

/// max over (A, B) of max|D(AB) - D(A) D(B)|
double verify_homomorphism(const InducedRepresentation& rep);

/// max over A of max|H D(A) - D(A) H|. Throws DimensionMismatch.
double verify_invariance(const Matrix& h, const InducedRepresentation& rep);

/// Square with D4 and triangle-plus-center with D3, in the conventions used
/// throughout the library.
struct SymmetricProblem {
  MassedConfiguration config;
  FiniteGroup group;
  CharacterTable table;
  InducedRepresentation rep;
};

SymmetricProblem square_problem();
SymmetricProblem triangle_center_problem(double m);
/// Configuration with D_k symmetry; `axis` is the reflection axis in radians.
SymmetricProblem dihedral_problem(MassedConfiguration cfg, int k, double axis, double tol = 1e-9);

/// Random configuration with D_k symmetry about a reflection axis at angle
/// `axis`: an optional central body, one or two orbits of k bodies on
/// reflection axes and up to one generic orbit of 2k bodies. Orbit radii are
/// separated so that no two bodies come close; masses are constant per orbit.
MassedConfiguration random_symmetric_configuration(int k, double axis, std::mt19937_64& rng);

}  // namespace ccsym
