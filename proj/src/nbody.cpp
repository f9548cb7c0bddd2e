#include "ccsym/nbody.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "ccsym/errors.hpp"

namespace ccsym {

namespace {

using Vec2L = Eigen::Matrix<Real, 2, 1>;
using Mat2L = Eigen::Matrix<Real, 2, 2>;

Vec2L body(const VectorL& z, std::size_t i) {
  return z.segment<2>(static_cast<Eigen::Index>(2 * i));
}

}  // namespace

MassedConfiguration::MassedConfiguration(std::vector<Real> masses,
                                         std::vector<PlanarPoint> positions,
                                         MassPolicy policy)
    : masses_(std::move(masses)) {
  if (masses_.size() != positions.size())
    throw InputError("got " + std::to_string(masses_.size()) + " masses for " +
                     std::to_string(positions.size()) + " positions");
  if (masses_.empty()) throw InputError("configuration has no bodies");

  for (std::size_t i = 0; i < masses_.size(); ++i) {
    const Real m = masses_[i];
    if (!std::isfinite(static_cast<double>(m)))
      throw InputError("mass of body " + std::to_string(i + 1) + " is not finite");
    if (m < 0 || (m == 0 && policy == MassPolicy::StrictlyPositive))
      throw NonPositiveMass("body " + std::to_string(i + 1) + " has mass " +
                            std::to_string(static_cast<double>(m)));
    if (m == 0) massless_ = true;
  }

  z_.resize(static_cast<Eigen::Index>(2 * positions.size()));
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!std::isfinite(static_cast<double>(positions[i].x)) ||
        !std::isfinite(static_cast<double>(positions[i].y)))
      throw InputError("position of body " + std::to_string(i + 1) + " is not finite");
    z_[static_cast<Eigen::Index>(2 * i)] = positions[i].x;
    z_[static_cast<Eigen::Index>(2 * i + 1)] = positions[i].y;
  }

  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if ((body(z_, i) - body(z_, j)).norm() < kCollisionDistance)
        throw CollisionError("bodies " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) + " coincide");
}

Eigen::Vector2d MassedConfiguration::position(std::size_t i) const {
  return body(z_, i).cast<double>();
}

std::vector<double> MassedConfiguration::masses() const {
  return {masses_.begin(), masses_.end()};
}

Eigen::Vector2d MassedConfiguration::center_of_mass() const {
  Vec2L acc = Vec2L::Zero();
  Real total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    acc += masses_[i] * body(z_, i);
    total += masses_[i];
  }
  if (total == 0) return Eigen::Vector2d::Zero();
  return (acc / total).cast<double>();
}

MassedConfiguration builtin_square() {
  return MassedConfiguration({1, 1, 1, 1}, {{2, 0}, {0, 2}, {-2, 0}, {0, -2}});
}

MassedConfiguration builtin_triangle_center(double m) {
  if (m < 0) throw NonPositiveMass("central mass " + std::to_string(m));
  const Real half_root3 = std::sqrt(Real(3)) / 2;
  return MassedConfiguration({1, 1, 1, Real(m)},
                             {{1, 0}, {-0.5L, half_root3}, {-0.5L, -half_root3}, {0, 0}},
                             MassPolicy::AllowZero);
}

Vector mass_diagonal(const MassedConfiguration& cfg) {
  Vector d(static_cast<Eigen::Index>(2 * cfg.size()));
  for (std::size_t i = 0; i < cfg.size(); ++i)
    d.segment<2>(static_cast<Eigen::Index>(2 * i)).setConstant(cfg.mass(i));
  return d;
}

namespace extended {

namespace {

VectorL mass_diagonal_l(const MassedConfiguration& cfg) {
  VectorL d(static_cast<Eigen::Index>(2 * cfg.size()));
  for (std::size_t i = 0; i < cfg.size(); ++i)
    d.segment<2>(static_cast<Eigen::Index>(2 * i)).setConstant(cfg.masses_extended()[i]);
  return d;
}

Real inertia(const MassedConfiguration& cfg) {
  const VectorL& z = cfg.z_extended();
  return Real(0.5) * (mass_diagonal_l(cfg).array() * z.array().square()).sum();
}

}  // namespace

Real potential(const MassedConfiguration& cfg) {
  const auto& m = cfg.masses_extended();
  const VectorL& z = cfg.z_extended();
  Real u = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.size(); ++j)
      u += m[i] * m[j] / (body(z, i) - body(z, j)).norm();
  return u;
}

VectorL grad_potential(const MassedConfiguration& cfg) {
  const auto& m = cfg.masses_extended();
  const VectorL& z = cfg.z_extended();
  VectorL g = VectorL::Zero(z.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      const Vec2L d = body(z, j) - body(z, i);
      const Real r = d.norm();
      const Vec2L f = m[i] * m[j] * d / (r * r * r);
      g.segment<2>(static_cast<Eigen::Index>(2 * i)) += f;
      g.segment<2>(static_cast<Eigen::Index>(2 * j)) -= f;
    }
  }
  return g;
}

MatrixL hessian_potential(const MassedConfiguration& cfg) {
  const auto& m = cfg.masses_extended();
  const VectorL& z = cfg.z_extended();
  const auto n = static_cast<Eigen::Index>(2 * cfg.size());
  MatrixL h = MatrixL::Zero(n, n);
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      const Vec2L d = body(z, j) - body(z, i);
      const Real r2 = d.squaredNorm();
      const Real r = std::sqrt(r2);
      const Real r3 = r2 * r;
      const Mat2L block =
          m[i] * m[j] * (Mat2L::Identity() / r3 - 3 * d * d.transpose() / (r3 * r2));
      const auto bi = static_cast<Eigen::Index>(2 * i);
      const auto bj = static_cast<Eigen::Index>(2 * j);
      h.block<2, 2>(bi, bj) += block;
      h.block<2, 2>(bj, bi) += block;
      h.block<2, 2>(bi, bi) -= block;
      h.block<2, 2>(bj, bj) -= block;
    }
  }
  return h;
}

MatrixL hessian_scaled_potential(const MassedConfiguration& cfg) {
  const VectorL mdiag = mass_diagonal_l(cfg);
  const Real i_val = inertia(cfg);
  if (!(i_val > 0)) throw InputError("moment of inertia vanishes");
  const Real s = std::sqrt(2 * i_val);
  const VectorL mz = mdiag.cwiseProduct(cfg.z_extended());

  const Real u = extended::potential(cfg);
  const VectorL gu = extended::grad_potential(cfg);
  const MatrixL hu = extended::hessian_potential(cfg);

  const VectorL gs = mz / s;
  MatrixL hs = -mz * mz.transpose() / (s * s * s);
  hs.diagonal() += mdiag / s;

  MatrixL h = s * hu + gs * gu.transpose() + gu * gs.transpose() + u * hs;
  return Real(0.5) * (h + h.transpose());
}

Real central_lambda(const MassedConfiguration& cfg) {
  const VectorL mz = mass_diagonal_l(cfg).cwiseProduct(cfg.z_extended());
  const Real denom = mz.squaredNorm();
  if (denom == 0) return 0;
  return -mz.dot(extended::grad_potential(cfg)) / denom;
}

}  // namespace extended

double moment_of_inertia(const MassedConfiguration& cfg) {
  const VectorL& z = cfg.z_extended();
  Real acc = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    acc += cfg.masses_extended()[i] * body(z, i).squaredNorm();
  return static_cast<double>(acc / 2);
}

double potential(const MassedConfiguration& cfg) {
  return static_cast<double>(extended::potential(cfg));
}

Vector grad_potential(const MassedConfiguration& cfg) {
  return extended::grad_potential(cfg).cast<double>();
}

Matrix hessian_potential(const MassedConfiguration& cfg) {
  return extended::hessian_potential(cfg).cast<double>();
}

Matrix hessian_scaled_potential(const MassedConfiguration& cfg) {
  return extended::hessian_scaled_potential(cfg).cast<double>();
}

Vector grad_scaled_potential(const MassedConfiguration& cfg) {
  const VectorL& z = cfg.z_extended();
  VectorL mz(z.size());
  for (std::size_t i = 0; i < cfg.size(); ++i)
    mz.segment<2>(static_cast<Eigen::Index>(2 * i)) = cfg.masses_extended()[i] * body(z, i);
  const Real s = std::sqrt(mz.dot(z));
  return (s * extended::grad_potential(cfg) + extended::potential(cfg) * mz / s).cast<double>();
}

MassedConfiguration moved(const MassedConfiguration& cfg, const Vector& z) {
  if (z.size() != static_cast<Eigen::Index>(2 * cfg.size()))
    throw InputError("position vector has the wrong length");
  std::vector<PlanarPoint> q;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    q.push_back({z[static_cast<Eigen::Index>(2 * i)], z[static_cast<Eigen::Index>(2 * i + 1)]});
  return MassedConfiguration(cfg.masses_extended(), std::move(q),
                             cfg.has_massless_body() ? MassPolicy::AllowZero
                                                     : MassPolicy::StrictlyPositive);
}

MassedConfiguration random_configuration(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0), mass(0.5, 2.0);
  std::vector<Real> m;
  std::vector<PlanarPoint> q;
  while (static_cast<int>(q.size()) < n) {
    const PlanarPoint p{coord(rng), coord(rng)};
    bool clear = true;
    for (const auto& o : q) clear = clear && std::hypot(double(p.x - o.x), double(p.y - o.y)) >= 0.3;
    if (!clear) continue;
    q.push_back(p);
    m.push_back(mass(rng));
  }
  return MassedConfiguration(std::move(m), std::move(q));
}

namespace {

Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& z, double h) {
  Vector g(z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    auto at = [&](double t) {
      Vector w = z;
      w[k] += t;
      return f(w);
    };
    g[k] = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
  }
  return g;
}

Matrix fd_jacobian(const std::function<Vector(const Vector&)>& f, const Vector& z, double h) {
  Matrix jac(z.size(), z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    auto at = [&](double t) {
      Vector w = z;
      w[k] += t;
      return f(w);
    };
    jac.col(k) = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
  }
  return jac;
}

double relative(const Matrix& analytic, const Matrix& numeric) {
  return max_abs(analytic - numeric) / std::max(max_abs(analytic), 1e-300);
}

}  // namespace

DerivativeCheck check_derivatives(const MassedConfiguration& cfg, double h) {
  const Vector z = cfg.z();
  auto u = [&](const Vector& w) { return potential(moved(cfg, w)); };
  auto gu = [&](const Vector& w) { return grad_potential(moved(cfg, w)); };
  auto f = [&](const Vector& w) {
    const auto c = moved(cfg, w);
    return std::sqrt(2 * moment_of_inertia(c)) * potential(c);
  };
  auto gf = [&](const Vector& w) { return grad_scaled_potential(moved(cfg, w)); };

  DerivativeCheck out;
  const Matrix hu = hessian_potential(cfg);
  const Matrix hf = hessian_scaled_potential(cfg);
  out.gradient = relative(grad_potential(cfg), fd_gradient(u, z, h));
  out.hessian = relative(hu, fd_jacobian(gu, z, h));
  out.scaled_gradient = relative(grad_scaled_potential(cfg), fd_gradient(f, z, h));
  out.scaled_hessian = relative(hf, fd_jacobian(gf, z, h));
  out.symmetry = std::max(max_abs(hu - hu.transpose()), max_abs(hf - hf.transpose()));
  return out;
}

CentralConfigReport central_config_check(const MassedConfiguration& cfg, double tol) {
  CentralConfigReport rep;
  rep.tolerance = tol;
  const Real lambda = extended::central_lambda(cfg);
  const VectorL g = extended::grad_potential(cfg);
  const VectorL& z = cfg.z_extended();

  Real worst = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const Vec2L defect =
        lambda * cfg.masses_extended()[i] * body(z, i) + g.segment<2>(static_cast<Eigen::Index>(2 * i));
    worst = std::max(worst, defect.norm());
  }
  rep.lambda = static_cast<double>(lambda);
  rep.residual_norm = static_cast<double>(worst);
  rep.is_central = rep.residual_norm <= tol;
  rep.centered = cfg.center_of_mass().norm() <= tol;
  if (rep.is_central && rep.centered && lambda > 0)
    rep.omega = static_cast<double>(std::sqrt(lambda));
  return rep;
}

double angular_velocity(const MassedConfiguration& cfg, double tol) {
  const CentralConfigReport rep = central_config_check(cfg, tol);
  // A translated central configuration fails the fit about the origin, so
  // the center of mass is checked first to report the actual cause.
  if (!rep.centered)
    throw NotCentered("center of mass is " + std::to_string(cfg.center_of_mass().norm()) +
                      " from the origin");
  if (!rep.is_central)
    throw NotCentral("residual " + std::to_string(rep.residual_norm) + " exceeds " +
                     std::to_string(tol));
  if (!rep.omega) throw NotCentral("multiplier is not positive");
  return *rep.omega;
}

}  // namespace ccsym
