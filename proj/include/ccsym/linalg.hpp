#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ccsym {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Extended precision is used wherever defective (Jordan) eigenvalues must be
// resolved: their perturbation grows like the square root of the rounding
// error in the matrix entries.
using Real = long double;
using MatrixL = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorL = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;

/// Largest absolute entry.
double max_abs(const Matrix& m);

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // column k pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Only the upper
/// triangle is trusted; the caller checks symmetry.
SymmetricEigen jacobi_eigen(const Matrix& a, int max_sweeps = 100);

/// Eigenvalues of a general real matrix: balancing, reduction to upper
/// Hessenberg form, then Francis double-shift QR. Throws ConvergenceFailure
/// if an eigenvalue needs more than 30 max(10, n) iterations.
template <class T>
std::vector<std::complex<T>> hessenberg_qr_eigenvalues(
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> a);

extern template std::vector<std::complex<double>> hessenberg_qr_eigenvalues(
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>);
extern template std::vector<std::complex<long double>>
hessenberg_qr_eigenvalues(
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>);

/// Orthonormal basis for the column space of `m` by pivoted modified
/// Gram-Schmidt; columns whose residual norm falls below `threshold` are
/// treated as dependent.
Matrix orthonormal_range(const Matrix& m, double threshold = 1e-8);

/// Smallest singular value of (a - lambda I), i.e. the best eigenpair residual
/// achievable for `lambda`.
double eigen_residual(const Matrix& a, Complex lambda);

/// Distance between two multisets of complex numbers: greedy nearest-pair
/// matching, returning the largest matched distance. Infinite when the sizes
/// differ.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Same for real multisets (sorted elementwise comparison).
double multiset_distance(std::span<const double> a, std::span<const double> b);

/// Orders complex numbers by real part, then imaginary part, after rounding
/// both to `resolution` so that tiny numerical noise does not reorder ties.
void sort_complex(std::vector<Complex>& values, double resolution = 1e-9);

}  // namespace ccsym
