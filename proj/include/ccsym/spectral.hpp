#pragma once

#include <string>
#include <vector>

#include "ccsym/groups.hpp"
#include "ccsym/induced_rep.hpp"
#include "ccsym/linalg.hpp"

namespace ccsym {

/// Absolute tolerance for grouping the d_i copies of an isotypic eigenvalue.
inline constexpr double kClusterTolerance = 1e-8;

/// Largest commutator |H D(A) - D(A) H| accepted as invariance.
inline constexpr double kInvarianceTolerance = 1e-8;

enum class SpectralMethod { TraceEquations, Projector, DenseOracle };

/// "trace-equations", "projector" or "dense-oracle".
std::string to_string(SpectralMethod m);

struct EigenEntry {
  double value = 0;
  int multiplicity = 1;
  int irrep = -1;           // index into the character table, -1 if unlabelled
  std::string irrep_label;  // "chi3", or empty
  Matrix vectors;           // 2n x multiplicity, orthonormal; empty for trace routes
};

struct SpectralReport {
  SpectralMethod method = SpectralMethod::Projector;
  std::vector<EigenEntry> eigenvalues;  // ascending by value, ties by irrep
  double residual = 0;                  // max |H v - lambda v| over reported pairs
  double sum_defect = 0;                // max_i |sum of copies in i - S_i|, projector route

  /// Every eigenvalue repeated by its multiplicity, ascending.
  std::vector<double> expanded() const;
  int total_multiplicity() const;
};

/// S_i = (chi_i, A -> Tr(H D(A))): the sum of the eigenvalues of H in isotypic
/// component i, one per irreducible copy. Throws NotInvariant when H does not
/// commute with the representation within `tol`.
std::vector<double> isotypic_sums(const Matrix& h, const InducedRepresentation& rep,
                                  const CharacterTable& table,
                                  double tol = kInvarianceTolerance);

struct TraceEquation {
  int cls = 0;
  std::string class_name;
  double trace = 0;                   // Tr(H D(A)) for A in the class
  std::vector<double> coefficients;   // chi of the unknown's irrep on the class
};

/// One equation per conjugacy class; the unknowns are one eigenvalue per
/// irreducible copy, numbered lambda1, lambda2, ... in irrep order.
struct TraceSystem {
  std::vector<std::string> unknowns;
  std::vector<int> unknown_irrep;
  std::vector<TraceEquation> equations;
  int rank_deficiency = 0;  // unknowns minus independent equations
};

TraceSystem trace_equation_table(const Matrix& h, const InducedRepresentation& rep,
                                 const CharacterTable& table,
                                 double tol = kInvarianceTolerance);

/// det(H + shift I)
double det_supplement(const Matrix& h, double shift);

/// P_i = (d_i / |G|) sum_A conj(chi_i(A)) D(A)
Matrix isotypic_projector(const InducedRepresentation& rep, const CharacterTable& table,
                          int irrep);

struct IsotypicComponent {
  int multiplicity = 0;
  int degree = 0;
  Matrix projector;
  double sum = 0;
};

std::vector<IsotypicComponent> isotypic_decomposition(const Matrix& h,
                                                      const InducedRepresentation& rep,
                                                      const CharacterTable& table);

/// Restricts H to an orthonormal basis of each range(P_i) and diagonalizes
/// the block. Throws NotInvariant, or ClusteringFailure when a block's
/// spectrum does not split into runs of d_i equal values.
SpectralReport symmetry_eigenvalues(const Matrix& h, const InducedRepresentation& rep,
                                    const CharacterTable& table,
                                    double cluster_tol = kClusterTolerance);

/// Trace equations closed by det(H + I) when exactly one irrep occurs twice
/// and all others at most once (the square). Throws UnderdeterminedSystem
/// for any other multiplicity pattern.
SpectralReport trace_determinant_eigenvalues(const Matrix& h, const InducedRepresentation& rep,
                                             const CharacterTable& table);

/// Cyclic Jacobi oracle. Throws NotSymmetric when |H - H^T| exceeds 1e-12.
SpectralReport dense_symmetric_spectrum(const Matrix& h, double cluster_tol = kClusterTolerance);

/// Monic characteristic polynomial lambda^N + a_1 lambda^(N-1) + ... + a_N,
/// expanded from the eigenvalues. Returns (a_1, ..., a_N).
std::vector<double> char_poly_coeffs(const Matrix& h);

// Triangle with a central mass m.

double triangle_f1(double m);
double triangle_f2(double m);
double triangle_f3(double m);
/// The positive root of f3: (2 sqrt3 + 9) / (18 sqrt3 - 15).
double triangle_degenerate_mass();

struct TriangleSymmetricFunctions {
  double m = 0;
  double f1 = 0, f2 = 0, f3 = 0;
  std::vector<double> roots;  // lambda3 <= lambda4 <= lambda5
  double cubic_residual = 0;  // max |p(root)|

  // Same functions recovered from a_1, a_2, a_5, a_6 of the scaled Hessian.
  double charpoly_f1 = 0, charpoly_f2 = 0, charpoly_f3 = 0;
  double route_defect = 0;  // max relative difference between the two routes
};

/// Throws NonPositiveMass for m <= 0.
TriangleSymmetricFunctions triangle_symmetric_functions(double m);

struct DegenerateMass {
  double m = 0;
  int kernel_dimension = 0;   // eigenvalues of H below 1e-8 in absolute value
  int zero_irrep_copies = 0;  // zero entries in the symmetry-reduced report
};

/// Sign changes of f3 on `steps` evenly spaced points of [m_lo, m_hi], each
/// refined by bisection to 1e-12.
std::vector<DegenerateMass> degenerate_mass_scan(double m_lo, double m_hi, int steps);

struct ScanRow {
  double m = 0;
  double lambda3 = 0, lambda4 = 0, lambda5 = 0;
  double f1 = 0, f2 = 0, f3 = 0;
};

/// Rows in ascending m, evaluated on up to `threads` workers (0 = hardware
/// concurrency).
std::vector<ScanRow> triangle_scan(double m_lo, double m_hi, int steps, unsigned threads = 0);

/// Evenly spaced grid including both ends.
std::vector<double> linspace(double lo, double hi, int steps);

}  // namespace ccsym
