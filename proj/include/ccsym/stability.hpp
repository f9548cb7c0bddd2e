#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccsym/groups.hpp"
#include "ccsym/induced_rep.hpp"
#include "ccsym/nbody.hpp"
#include "ccsym/spectral.hpp"

namespace ccsym {

/// Linearized rotating-frame flow d/dt (dx, dx') = A (dx, dx'), with
/// A = [[0, I], [omega^2 I + M^-1 HessU, 2 omega J_n]] and J = [[0, 1], [-1, 0]]
/// repeated per body.
struct RotatingFrameLinearization {
  Real omega = 0;
  int n = 0;
  MatrixL a_full;   // 4n x 4n
  MatrixL hess_u;   // 2n x 2n
  VectorL masses;   // per coordinate
};

/// Throws NotCentered when the center of mass is off the origin, otherwise
/// NotCentral when the configuration fails the central check.
RotatingFrameLinearization linearize(const MassedConfiguration& cfg, double tol = 1e-9);

/// J_n as a 2n x 2n matrix.
MatrixL rotation_generator(int n);

struct FullSpectrum {
  std::vector<Complex> eigenvalues;  // sorted by real, then imaginary part
  double residual = 0;               // max over eigenvalues of sigma_min(A - lambda I)
};

/// Dense Francis QR on the full matrix, in extended precision. Throws
/// ConvergenceFailure.
FullSpectrum full_spectrum(const RotatingFrameLinearization& lin);

struct BlockMember {
  int irrep = -1;
  std::string irrep_label;
  double value = 0;  // eigenvalue of the mass-weighted Hessian
  int dimension = 0;
};

struct ReducedBlock {
  std::vector<BlockMember> members;
  Matrix basis;                      // 2n x 2k, mass-weighted position coordinates
  MatrixL l;                         // 2k x 2k restriction of M^-1/2 HessU M^-1/2
  MatrixL j_hat;                     // 2k x 2k restriction of J_n
  MatrixL block;                     // 4k x 4k first-order system
  std::vector<Complex> eigenvalues;  // sorted
};

/// Splits position space into the smallest J_n-invariant sums of isotypic
/// eigenspaces of the mass-weighted Hessian M^-1/2 HessU M^-1/2 and returns
/// one first-order block per piece. For equal masses the weighted Hessian is
/// HessU itself. Throws MixedMassOrbit when the representation does not
/// commute with the mass matrix.
std::vector<ReducedBlock> reduced_blocks(const MassedConfiguration& cfg,
                                         const InducedRepresentation& rep,
                                         const CharacterTable& table, double tol = 1e-8);

/// All block eigenvalues, sorted.
std::vector<Complex> block_spectrum(const std::vector<ReducedBlock>& blocks);

struct TriangleHessUClosedForms {
  double lambda1 = 0, lambda2 = 0, lambda4 = 0, lambda5 = 0;  // lambda3 = 0
};

TriangleHessUClosedForms triangle_hessU_closed_forms(double m);

struct HessUReport {
  SpectralReport spectrum;
  std::optional<double> closed_form_defect;  // triangle family only
};

/// Symmetry-reduced spectrum of HessU. When `triangle_mass` is given the
/// closed forms of the triangle family are compared against it.
HessUReport hessU_reduced_eigenvalues(const MassedConfiguration& cfg,
                                      const InducedRepresentation& rep,
                                      const CharacterTable& table,
                                      std::optional<double> triangle_mass = std::nullopt);

struct StabilityReport {
  double omega = 0;
  std::vector<Complex> eigenvalues;
  int zero = 0;
  int elliptic = 0;
  int hyperbolic = 0;
  int elliptic_dimension = 0;
  std::string verdict;  // "unstable" or "spectrally-stable-candidate"
  double symmetry_defect = 0;  // worst distance to the conj / negation images
};

/// Throws AsymmetricSpectrum when the spectrum is not closed under
/// conjugation and negation within 10 tol_real.
StabilityReport classify(const std::vector<Complex>& spectrum, double tol_zero = 1e-8,
                         double tol_real = 1e-8);

}  // namespace ccsym
