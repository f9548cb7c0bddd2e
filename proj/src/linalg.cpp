#include "ccsym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ccsym/errors.hpp"

namespace ccsym {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

SymmetricEigen jacobi_eigen(const Matrix& input, int max_sweeps) {
  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw DimensionMismatch("jacobi_eigen needs a square matrix");

  Matrix a = input.triangularView<Eigen::Upper>();
  a = a.selfadjointView<Eigen::Upper>();
  Matrix v = Matrix::Identity(n, n);

  SymmetricEigen out;
  const double scale = std::max(a.norm(), std::numeric_limits<double>::min());
  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * scale) {
      out.sweeps = sweep;
      break;
    }
    if (sweep == max_sweeps)
      throw ConvergenceFailure("Jacobi sweeps exhausted");

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;

        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto i, auto j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

namespace {

template <class T>
using Dense = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
T copy_sign(T magnitude, T sign) {
  return sign >= T(0) ? std::abs(magnitude) : -std::abs(magnitude);
}

template <class T>
void balance(Dense<T>& a) {
  constexpr T radix = 2;
  constexpr T sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      T r = 0, c = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == T(0) || r == T(0)) continue;
      T g = r / radix;
      T f = 1;
      const T s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < T(0.95) * s) {
        done = false;
        g = T(1) / f;
        a.row(i) *= g;
        a.col(i) *= f;
      }
    }
  }
}

// Gaussian elimination with pivoting to upper Hessenberg form.
template <class T>
void reduce_to_hessenberg(Dense<T>& a) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    T x = 0;
    Eigen::Index i = m;
    for (Eigen::Index j = m; j < n; ++j) {
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        i = j;
      }
    }
    if (i != m) {
      a.row(i).swap(a.row(m));
      a.col(i).swap(a.col(m));
    }
    if (x == T(0)) continue;
    for (i = m + 1; i < n; ++i) {
      T y = a(i, m - 1);
      if (y == T(0)) continue;
      y /= x;
      a(i, m - 1) = y;
      for (Eigen::Index j = m; j < n; ++j) a(i, j) -= y * a(m, j);
      for (Eigen::Index j = 0; j < n; ++j) a(j, m) += y * a(j, i);
    }
  }
  for (Eigen::Index i = 2; i < n; ++i)
    for (Eigen::Index j = 0; j + 1 < i; ++j) a(i, j) = 0;
}

}  // namespace

template <class T>
std::vector<std::complex<T>> hessenberg_qr_eigenvalues(Dense<T> mat) {
  const int n = static_cast<int>(mat.rows());
  if (mat.cols() != n) throw DimensionMismatch("eigenvalues need a square matrix");
  std::vector<std::complex<T>> out(static_cast<std::size_t>(n));
  if (n == 0) return out;

  balance(mat);
  reduce_to_hessenberg(mat);

  // The QR sweep below is written with 1-based indices.
  auto a = [&mat](int i, int j) -> T& { return mat(i - 1, j - 1); };
  std::vector<T> wr(n + 1), wi(n + 1);

  T anorm = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

  // Clustered and defective eigenvalues converge linearly, so the budget
  // scales with the order as in LAPACK.
  const int max_its = 30 * std::max(10, n);
  int nn = n;
  T t = 0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        T s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == T(0)) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0;
          break;
        }
      }
      if (l < 1) l = 1;
      T x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0;
        --nn;
      } else {
        T y = a(nn - 1, nn - 1);
        T w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          T p = T(0.5) * (y - x);
          T q = p * p + w;
          T z = std::sqrt(std::abs(q));
          x += t;
          if (q >= T(0)) {
            z = p + copy_sign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != T(0)) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn] = z;
            wi[nn - 1] = -z;
          }
          nn -= 2;
        } else {
          if (its == max_its)
            throw ConvergenceFailure("Hessenberg QR did not converge");
          if (its > 0 && its % 10 == 0) {
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            T s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = T(0.75) * s;
            w = T(-0.4375) * s * s;
          }
          ++its;
          int m = nn - 2;
          T p = 0, q = 0, r = 0, z = 0;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            T s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            T u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            T v = std::abs(p) *
                  (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0;
            if (i != m + 2) a(i, i - 3) = 0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != T(0)) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            T s = copy_sign(std::sqrt(p * p + q * q + r * r), p);
            if (s == T(0)) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (nn >= 1 && l < nn - 1);
  }

  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = {wr[i], wi[i]};
  return out;
}

template std::vector<std::complex<double>> hessenberg_qr_eigenvalues(Dense<double>);
template std::vector<std::complex<long double>> hessenberg_qr_eigenvalues(
    Dense<long double>);

Matrix orthonormal_range(const Matrix& m, double threshold) {
  const Eigen::Index rows = m.rows();
  Matrix residual = m;
  std::vector<Vector> basis;
  std::vector<bool> used(static_cast<std::size_t>(m.cols()), false);

  while (true) {
    Eigen::Index best = -1;
    double best_norm = threshold;
    for (Eigen::Index c = 0; c < residual.cols(); ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      const double nrm = residual.col(c).norm();
      if (nrm > best_norm) {
        best_norm = nrm;
        best = c;
      }
    }
    if (best < 0) break;
    used[static_cast<std::size_t>(best)] = true;

    Vector q = residual.col(best);
    // second pass restores orthogonality lost to cancellation
    for (const auto& b : basis) q -= b.dot(q) * b;
    q.normalize();
    for (Eigen::Index c = 0; c < residual.cols(); ++c)
      if (!used[static_cast<std::size_t>(c)])
        residual.col(c) -= q.dot(residual.col(c)) * q;
    basis.push_back(std::move(q));
  }

  Matrix out(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = basis[k];
  return out;
}

double eigen_residual(const Matrix& a, Complex lambda) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd shifted = a.cast<Complex>();
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
  return svd.singularValues()(n - 1);
}

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> taken(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (taken[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    taken[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

double multiset_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

void sort_complex(std::vector<Complex>& values, double resolution) {
  auto key = [resolution](double v) { return std::round(v / resolution); };
  std::stable_sort(values.begin(), values.end(), [&](const Complex& x, const Complex& y) {
    const double rx = key(x.real()), ry = key(y.real());
    if (rx != ry) return rx < ry;
    return key(x.imag()) < key(y.imag());
  });
}

}  // namespace ccsym
