// Small dense complex linear algebra helpers shared by the finite and
// compact-group code.

#ifndef GROUPSTAR_LINALG_HPP_
#define GROUPSTAR_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace groupstar {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using MatrixFamily = std::vector<Matrix>;

inline Matrix dagger(const Matrix& m) { return m.adjoint(); }

// Largest |a_ij - b_ij|; infinity when the shapes differ.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

// Seeded source of test data. Real and imaginary parts are independent and
// uniform in [-1, 1].
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  cplx complex() {
    const double re = uniform();
    const double im = uniform();
    return {re, im};
  }

  Matrix matrix(Eigen::Index dim) {
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = complex();
    return m;
  }

  std::vector<cplx> vector(std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& x : v) x = complex();
    return v;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace groupstar

#endif  // GROUPSTAR_LINALG_HPP_
