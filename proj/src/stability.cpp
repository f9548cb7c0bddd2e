#include "ccsym/stability.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "ccsym/errors.hpp"

namespace ccsym {

namespace {

VectorL coordinate_masses(const MassedConfiguration& cfg) {
  VectorL d(static_cast<Eigen::Index>(2 * cfg.size()));
  for (std::size_t i = 0; i < cfg.size(); ++i)
    d.segment<2>(static_cast<Eigen::Index>(2 * i)).setConstant(cfg.masses_extended()[i]);
  return d;
}

MatrixL first_order_block(Real omega, const MatrixL& k, const MatrixL& j) {
  const auto d = k.rows();
  MatrixL a = MatrixL::Zero(2 * d, 2 * d);
  a.topRightCorner(d, d).setIdentity();
  a.bottomLeftCorner(d, d) = k;
  a.bottomLeftCorner(d, d).diagonal().array() += omega * omega;
  a.bottomRightCorner(d, d) = 2 * omega * j;
  return a;
}

std::vector<Complex> to_double(const std::vector<std::complex<Real>>& values) {
  std::vector<Complex> out;
  for (const auto& v : values)
    out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  sort_complex(out);
  return out;
}

// Union-find over eigenspace indices.
struct Partition {
  std::vector<int> parent;
  explicit Partition(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

MatrixL rotation_generator(int n) {
  MatrixL j = MatrixL::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

RotatingFrameLinearization linearize(const MassedConfiguration& cfg, double tol) {
  if (cfg.has_massless_body())
    throw NonPositiveMass("the linearization divides by every mass");
  const auto check = central_config_check(cfg, tol);
  if (!check.centered) throw NotCentered("center of mass is away from the origin");
  if (!check.is_central)
    throw NotCentral("residual " + std::to_string(check.residual_norm) + " exceeds " +
                     std::to_string(tol));
  const Real lambda = extended::central_lambda(cfg);
  if (!(lambda > 0)) throw NotCentral("multiplier is not positive");

  RotatingFrameLinearization lin;
  lin.omega = std::sqrt(lambda);
  lin.n = static_cast<int>(cfg.size());
  lin.hess_u = extended::hessian_potential(cfg);
  lin.masses = coordinate_masses(cfg);
  const MatrixL k = lin.masses.cwiseInverse().asDiagonal() * lin.hess_u;
  lin.a_full = first_order_block(lin.omega, k, rotation_generator(lin.n));
  return lin;
}

FullSpectrum full_spectrum(const RotatingFrameLinearization& lin) {
  FullSpectrum out;
  out.eigenvalues = to_double(hessenberg_qr_eigenvalues<Real>(lin.a_full));
  const Matrix a = lin.a_full.cast<double>();
  for (const auto& v : out.eigenvalues) out.residual = std::max(out.residual, eigen_residual(a, v));
  return out;
}

std::vector<ReducedBlock> reduced_blocks(const MassedConfiguration& cfg,
                                         const InducedRepresentation& rep,
                                         const CharacterTable& table, double tol) {
  const RotatingFrameLinearization lin = linearize(cfg);
  const Matrix mdiag = lin.masses.cast<double>().asDiagonal();
  for (const auto& d : rep.matrices())
    if (max_abs(d * mdiag - mdiag * d) > 1e-12)
      throw MixedMassOrbit("the representation moves bodies of unequal mass onto each other");

  // Mass-weighted coordinates make the reduction exact for unequal masses:
  // A is similar to [[0, I], [omega^2 I + K, 2 omega J]] with
  // K = M^-1/2 HessU M^-1/2, because M commutes with J.
  const VectorL w = lin.masses.cwiseSqrt().cwiseInverse();
  const MatrixL k = w.asDiagonal() * lin.hess_u * w.asDiagonal();
  const MatrixL j = rotation_generator(lin.n);
  const Matrix kd = k.cast<double>();
  const Matrix jd = j.cast<double>();

  const SpectralReport spec = symmetry_eigenvalues(0.5 * (kd + kd.transpose()), rep, table);
  const auto& entries = spec.eigenvalues;
  const int count = static_cast<int>(entries.size());

  Partition part(count);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const auto& ea = entries[static_cast<std::size_t>(a)];
      const auto& eb = entries[static_cast<std::size_t>(b)];
      // Copies of one irrep with equal values form a single eigenspace.
      if (ea.irrep == eb.irrep && std::abs(ea.value - eb.value) <= tol) part.join(a, b);
      if (max_abs(eb.vectors.transpose() * jd * ea.vectors) > tol ||
          max_abs(ea.vectors.transpose() * jd * eb.vectors) > tol)
        part.join(a, b);
    }
  }

  std::vector<ReducedBlock> blocks;
  for (int root = 0; root < count; ++root) {
    if (part.find(root) != root) continue;
    ReducedBlock blk;
    int cols = 0;
    for (int a = 0; a < count; ++a)
      if (part.find(a) == root) cols += entries[static_cast<std::size_t>(a)].multiplicity;
    blk.basis.resize(kd.rows(), cols);
    int at = 0;
    for (int a = 0; a < count; ++a) {
      if (part.find(a) != root) continue;
      const auto& e = entries[static_cast<std::size_t>(a)];
      blk.members.push_back({e.irrep, e.irrep_label, e.value, e.multiplicity});
      blk.basis.middleCols(at, e.multiplicity) = e.vectors;
      at += e.multiplicity;
    }

    // Orthonormality errors enter defective eigenvalues under a square root,
    // so the basis is re-orthonormalized in extended precision.
    Eigen::HouseholderQR<MatrixL> qr(blk.basis.cast<Real>());
    const MatrixL q = qr.householderQ() * MatrixL::Identity(kd.rows(), cols);
    blk.l = q.transpose() * k * q;
    blk.l = Real(0.5) * (blk.l + blk.l.transpose());
    blk.j_hat = q.transpose() * j * q;
    blk.block = first_order_block(lin.omega, blk.l, blk.j_hat);

    Eigen::EigenSolver<MatrixL> solver(blk.block, false);
    if (solver.info() != Eigen::Success) throw ConvergenceFailure("block eigensolver failed");
    std::vector<std::complex<Real>> values(solver.eigenvalues().begin(),
                                           solver.eigenvalues().end());
    blk.eigenvalues = to_double(values);
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

std::vector<Complex> block_spectrum(const std::vector<ReducedBlock>& blocks) {
  std::vector<Complex> out;
  for (const auto& b : blocks) out.insert(out.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  sort_complex(out);
  return out;
}

TriangleHessUClosedForms triangle_hessU_closed_forms(double m) {
  const double r3 = std::sqrt(3.0);
  TriangleHessUClosedForms c;
  c.lambda1 = 2 * r3 / 3 + 2 * m;
  c.lambda2 = -r3 / 3 - m;
  const double root = std::sqrt(3 - 18 * r3 * m + 1377 * m * m) / 12;
  c.lambda4 = r3 / 12 + 5 * m / 4 + root;
  c.lambda5 = r3 / 12 + 5 * m / 4 - root;
  return c;
}

HessUReport hessU_reduced_eigenvalues(const MassedConfiguration& cfg,
                                      const InducedRepresentation& rep,
                                      const CharacterTable& table,
                                      std::optional<double> triangle_mass) {
  HessUReport out;
  out.spectrum = symmetry_eigenvalues(hessian_potential(cfg), rep, table);
  if (triangle_mass) {
    const auto c = triangle_hessU_closed_forms(*triangle_mass);
    std::vector<double> expected{c.lambda1, c.lambda2, 0, 0, c.lambda4, c.lambda4,
                                 c.lambda5, c.lambda5};
    std::sort(expected.begin(), expected.end());
    out.closed_form_defect = multiset_distance(out.spectrum.expanded(), expected);
  }
  return out;
}

StabilityReport classify(const std::vector<Complex>& spectrum, double tol_zero,
                         double tol_real) {
  if (spectrum.size() % 2 != 0) throw AsymmetricSpectrum("odd number of eigenvalues");
  std::vector<Complex> conj, neg;
  for (const auto& v : spectrum) {
    conj.push_back(std::conj(v));
    neg.push_back(-v);
  }
  StabilityReport r;
  r.symmetry_defect =
      std::max(multiset_distance(spectrum, conj), multiset_distance(spectrum, neg));
  if (r.symmetry_defect > 10 * tol_real)
    throw AsymmetricSpectrum("spectrum is off its conjugate/negated image by " +
                             std::to_string(r.symmetry_defect));

  r.eigenvalues = spectrum;
  sort_complex(r.eigenvalues);
  for (const auto& v : r.eigenvalues) {
    if (std::abs(v) <= tol_zero)
      ++r.zero;
    else if (std::abs(v.real()) <= tol_real)
      ++r.elliptic;
    else
      ++r.hyperbolic;
  }
  r.elliptic_dimension = r.elliptic;
  r.verdict = r.hyperbolic > 0 ? "unstable" : "spectrally-stable-candidate";
  return r;
}

}  // namespace ccsym
