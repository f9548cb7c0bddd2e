#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "ccsym/linalg.hpp"

namespace ccsym {

/// Pairwise distances below this are collisions.
inline constexpr double kCollisionDistance = 1e-9;

struct PlanarPoint {
  Real x = 0;
  Real y = 0;
};

enum class MassPolicy {
  StrictlyPositive,
  AllowZero,  // massless bodies, for potential-only evaluation
};

/// Point masses in the plane (G = 1). Positions and masses are held in
/// extended precision so that built-in configurations such as the
/// equilateral triangle are exact to the last bit of a long double.
class MassedConfiguration {
 public:
  MassedConfiguration(std::vector<Real> masses, std::vector<PlanarPoint> positions,
                      MassPolicy policy = MassPolicy::StrictlyPositive);

  std::size_t size() const { return masses_.size(); }
  double mass(std::size_t i) const { return static_cast<double>(masses_[i]); }
  Eigen::Vector2d position(std::size_t i) const;
  /// (x1, y1, ..., xn, yn)
  Vector z() const { return z_.cast<double>(); }
  std::vector<double> masses() const;

  const std::vector<Real>& masses_extended() const { return masses_; }
  const VectorL& z_extended() const { return z_; }

  /// True when some body was admitted with zero mass.
  bool has_massless_body() const { return massless_; }

  /// Center of mass; the origin for every built-in configuration.
  Eigen::Vector2d center_of_mass() const;

 private:
  std::vector<Real> masses_;
  VectorL z_;
  bool massless_ = false;
};

/// Four unit masses on the square of circumradius 2: z = (2,0,0,2,-2,0,0,-2).
MassedConfiguration builtin_square();

/// Unit masses on the unit-circumradius equilateral triangle, plus a body of
/// mass m at the origin. m = 0 is admitted and flagged as massless.
MassedConfiguration builtin_triangle_center(double m);

/// I = 1/2 sum m_i |q_i|^2
double moment_of_inertia(const MassedConfiguration& cfg);

/// U = sum_{i<j} m_i m_j / |q_i - q_j|
double potential(const MassedConfiguration& cfg);

/// Block i is sum_{j != i} m_i m_j (q_j - q_i) / |q_j - q_i|^3.
Vector grad_potential(const MassedConfiguration& cfg);

Matrix hessian_potential(const MassedConfiguration& cfg);

/// Hessian of z -> sqrt(2 I(z)) U(z), assembled analytically by the chain rule.
Matrix hessian_scaled_potential(const MassedConfiguration& cfg);

struct CentralConfigReport {
  double lambda = 0;         // stored as omega^2 > 0
  double residual_norm = 0;  // worst per-body defect |lambda m_i q_i + F_i|
  double tolerance = 0;
  bool is_central = false;
  bool centered = false;     // center of mass within tolerance of the origin
  std::optional<double> omega;
};

/// Least-squares fit of lambda m_i q_i = -F_i over all bodies.
CentralConfigReport central_config_check(const MassedConfiguration& cfg, double tol = 1e-9);

/// Angular velocity of the relative equilibrium. Throws NotCentered when the
/// center of mass is away from the origin, otherwise NotCentral when the
/// configuration fails the check.
double angular_velocity(const MassedConfiguration& cfg, double tol = 1e-9);

/// Mass vector repeated per coordinate: (m1, m1, m2, m2, ...).
Vector mass_diagonal(const MassedConfiguration& cfg);

/// Gradient of z -> sqrt(2 I(z)) U(z).
Vector grad_scaled_potential(const MassedConfiguration& cfg);

/// Same masses, new flattened positions.
MassedConfiguration moved(const MassedConfiguration& cfg, const Vector& z);

/// n bodies with masses in [0.5, 2] and positions in [-2, 2]^2, pairwise at
/// least 0.3 apart.
MassedConfiguration random_configuration(int n, std::mt19937_64& rng);

/// Relative disagreement (max abs difference over max abs entry) between the
/// analytic derivatives and fourth-order central differences with step h.
struct DerivativeCheck {
  double gradient = 0;         // grad U against differences of U
  double hessian = 0;          // HessU against differences of grad U
  double scaled_gradient = 0;  // against differences of sqrt(2I) U
  double scaled_hessian = 0;   // against differences of the scaled gradient
  double symmetry = 0;         // max |H - H^T| over both Hessians
};

DerivativeCheck check_derivatives(const MassedConfiguration& cfg, double h = 1e-5);

/// Extended-precision variants used by the stability analysis.
namespace extended {
Real potential(const MassedConfiguration& cfg);
VectorL grad_potential(const MassedConfiguration& cfg);
MatrixL hessian_potential(const MassedConfiguration& cfg);
MatrixL hessian_scaled_potential(const MassedConfiguration& cfg);
/// Least-squares lambda (= omega^2) in extended precision.
Real central_lambda(const MassedConfiguration& cfg);
}  // namespace extended

}  // namespace ccsym
