// Star products on SU(2) from its defining (spin 1/2) representation.
//
// Elements are parameterized by Euler angles theta in [0, pi], phi in
// [0, 2 pi), psi in [0, 4 pi) with Cayley-Klein parameters
//   alpha = cos(theta/2) e^{i(phi+psi)/2},  beta = sin(theta/2) e^{i(phi-psi)/2},
// and matrix [[alpha, beta], [-conj(beta), conj(alpha)]]. The Haar measure is
// sin(theta) dtheta dphi dpsi, so the group volume is 16 pi^2.
//
// Kernels take (g1, g2, g3) with g1, g2 the inputs and g3 the output:
//   (f1 * f2)(g) = integral K(g1, g2, g) f1(g1) f2(g2) dmu(g1) dmu(g2).

#ifndef GROUPSTAR_SU2_HPP_
#define GROUPSTAR_SU2_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "groupstar/error.hpp"
#include "groupstar/linalg.hpp"
#include "groupstar/star.hpp"

namespace groupstar::su2 {

using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kVolume = 16.0 * std::numbers::pi * std::numbers::pi;

struct SU2Element {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  cplx alpha = 1.0;
  cplx beta = 0.0;

  Matrix2 matrix() const {
    Matrix2 m;
    m << alpha, beta, -std::conj(beta), std::conj(alpha);
    return m;
  }

  // Conjugate transpose, [[conj(alpha), -beta], [conj(beta), alpha]].
  Matrix2 inverse_matrix() const {
    Matrix2 m;
    m << std::conj(alpha), -beta, std::conj(beta), alpha;
    return m;
  }
};

namespace detail {

inline double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

inline SU2Element from_canonical(double theta, double phi, double psi) {
  SU2Element g;
  g.theta = theta;
  g.phi = phi;
  g.psi = psi;
  g.alpha = std::polar(std::cos(theta / 2.0), (phi + psi) / 2.0);
  g.beta = std::polar(std::sin(theta / 2.0), (phi - psi) / 2.0);
  return g;
}

}  // namespace detail

// Angles outside the canonical ranges are reduced without changing the
// group element.
inline SU2Element su2_element(double theta, double phi, double psi) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(psi))
    throw NonFiniteInput("Euler angles must be finite");
  constexpr double pi = std::numbers::pi;
  if (theta >= 0.0 && theta <= pi && phi >= 0.0 && phi < 2.0 * pi && psi >= 0.0 && psi < 4.0 * pi)
    return detail::from_canonical(theta, phi, psi);

  const cplx alpha = std::cos(theta / 2.0) * std::exp(cplx(0.0, (phi + psi) / 2.0));
  const cplx beta = std::sin(theta / 2.0) * std::exp(cplx(0.0, (phi - psi) / 2.0));
  const double t = 2.0 * std::atan2(std::abs(beta), std::abs(alpha));
  const double a = std::abs(alpha) > 0.0 ? std::arg(alpha) : 0.0;
  const double b = std::abs(beta) > 0.0 ? std::arg(beta) : 0.0;
  // phi + psi = 2a and phi - psi = 2b, each modulo 4 pi. Shifting phi and
  // psi together by 2 pi, or psi alone by 4 pi, leaves alpha and beta fixed.
  double p = a + b;
  double s = a - b;
  const double shift = std::floor(p / (2.0 * pi)) * 2.0 * pi;
  p -= shift;
  s -= shift;
  p = detail::wrap(p, 2.0 * pi);
  s = detail::wrap(s, 4.0 * pi);
  return detail::from_canonical(t, p, s);
}

// ---------------------------------------------------------------------------
// Quadrature

struct HaarGrid {
  std::size_t n_theta = 0;
  std::size_t n_phi = 0;
  std::size_t n_psi = 0;
  std::vector<SU2Element> nodes;  // theta-major, then phi, then psi
  std::vector<double> weights;
  double volume = 0.0;

  std::size_t size() const { return nodes.size(); }
};

inline constexpr std::size_t kMinThetaNodes = 1;
inline constexpr std::size_t kMinPhiNodes = 2;
inline constexpr std::size_t kMinPsiNodes = 3;

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = z;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Gauss-Legendre in cos(theta), periodic trapezoid in phi and psi. Exact for
// integrands built from at most two j = 1/2 matrix elements per variable.
inline HaarGrid haar_grid(std::size_t n_theta = 8, std::size_t n_phi = 8, std::size_t n_psi = 8) {
  if (n_theta < kMinThetaNodes || n_phi < kMinPhiNodes || n_psi < kMinPsiNodes)
    throw InsufficientNodes("node counts (" + std::to_string(n_theta) + "," + std::to_string(n_phi) + "," +
                            std::to_string(n_psi) + ") are below the minimum (" +
                            std::to_string(kMinThetaNodes) + "," + std::to_string(kMinPhiNodes) + "," +
                            std::to_string(kMinPsiNodes) + ")");
  constexpr double pi = std::numbers::pi;
  std::vector<double> x;
  std::vector<double> wx;
  gauss_legendre(n_theta, x, wx);
  HaarGrid grid;
  grid.n_theta = n_theta;
  grid.n_phi = n_phi;
  grid.n_psi = n_psi;
  const double w_phi = 2.0 * pi / static_cast<double>(n_phi);
  const double w_psi = 4.0 * pi / static_cast<double>(n_psi);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = std::acos(std::clamp(x[i], -1.0, 1.0));
    for (std::size_t j = 0; j < n_phi; ++j)
      for (std::size_t k = 0; k < n_psi; ++k) {
        grid.nodes.push_back(
            detail::from_canonical(theta, w_phi * static_cast<double>(j), w_psi * static_cast<double>(k)));
        grid.weights.push_back(wx[i] * w_phi * w_psi);
      }
  }
  for (double w : grid.weights) grid.volume += w;
  return grid;
}

// Integral of fn over the grid.
template <typename Fn>
auto integrate(const HaarGrid& grid, Fn&& fn) {
  using R = decltype(fn(grid.nodes.front()));
  R acc{};
  for (std::size_t i = 0; i < grid.size(); ++i) acc += grid.weights[i] * fn(grid.nodes[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Symbols and reconstruction

inline void check_2x2(const Matrix& A) {
  if (A.rows() != 2 || A.cols() != 2) throw ShapeMismatch("SU(2) operators are 2x2");
}

// f_A(g) = Tr(A g)
inline cplx su2_symbol(const Matrix& A, const SU2Element& g) {
  check_2x2(A);
  const Matrix2 m = g.matrix();
  return A(0, 0) * m(0, 0) + A(0, 1) * m(1, 0) + A(1, 0) * m(0, 1) + A(1, 1) * m(1, 1);
}

// Symbol of the dual scheme, (2/V) Tr(A g^-1).
inline cplx su2_dual_symbol(const Matrix& A, const SU2Element& g) {
  check_2x2(A);
  const Matrix2 m = g.inverse_matrix();
  return 2.0 / kVolume * (A(0, 0) * m(0, 0) + A(0, 1) * m(1, 0) + A(1, 0) * m(0, 1) + A(1, 1) * m(1, 1));
}

inline cplx su2_symbol(const Matrix& A, const SU2Element& g, Scheme scheme) {
  return scheme == Scheme::Dual ? su2_dual_symbol(A, g) : su2_symbol(A, g);
}

inline std::vector<cplx> sample(const HaarGrid& grid, const std::function<cplx(const SU2Element&)>& fn) {
  std::vector<cplx> out;
  out.reserve(grid.size());
  for (const auto& g : grid.nodes) out.push_back(fn(g));
  return out;
}

inline std::vector<cplx> sample_symbol(const HaarGrid& grid, const Matrix& A, Scheme scheme = Scheme::Primary) {
  check_2x2(A);
  return sample(grid, [&](const SU2Element& g) { return su2_symbol(A, g, scheme); });
}

inline void check_samples(const HaarGrid& grid, const std::vector<cplx>& f) {
  if (f.size() != grid.size())
    throw GridMismatch("function has " + std::to_string(f.size()) + " samples, grid has " +
                       std::to_string(grid.size()) + " nodes");
}

// Primary: A = (2/V) integral f(g) g^-1. Dual: A = integral f(g) g.
inline Matrix su2_reconstruct(const std::vector<cplx>& f, const HaarGrid& grid, Scheme scheme = Scheme::Primary) {
  check_samples(grid, f);
  Matrix2 acc = Matrix2::Zero();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Matrix2 q = scheme == Scheme::Dual ? grid.nodes[i].matrix() : grid.nodes[i].inverse_matrix();
    acc += (grid.weights[i] * f[i]) * q;
  }
  if (scheme != Scheme::Dual) acc *= 2.0 / kVolume;
  return Matrix(acc);
}

// ---------------------------------------------------------------------------
// Kernels

namespace detail {

inline cplx trace_product(const Matrix2& a, const Matrix2& b) {
  return a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
}

}  // namespace detail

// Primary: (4/V^2) Tr(g1^-1 g2^-1 g3). Dual: (2/V) Tr(g1 g2 g3^-1).
inline cplx su2_kernel(const SU2Element& g1, const SU2Element& g2, const SU2Element& g3, Scheme scheme) {
  if (scheme == Scheme::Dual)
    return 2.0 / kVolume * detail::trace_product(g1.matrix() * g2.matrix(), g3.inverse_matrix());
  return 4.0 / (kVolume * kVolume) * detail::trace_product(g1.inverse_matrix() * g2.inverse_matrix(), g3.matrix());
}

// (4/V^2) Tr(g3^-1 g2^-1 g1). Read with g1 as the output and (g3, g2) as the (left, right) inputs it is a
// star-product kernel.
inline cplx su2_kernel_reversed_primary(const SU2Element& g1, const SU2Element& g2, const SU2Element& g3) {
  return 4.0 / (kVolume * kVolume) * detail::trace_product(g3.inverse_matrix() * g2.inverse_matrix(), g1.matrix());
}

// K(g1, g2, g3) - K(g2, g1, g3): (4/V^2) Tr([g1^-1, g2^-1] g3) for the
// primary scheme and (2/V) Tr([g1, g2] g3^-1) for the dual one.
inline cplx su2_lie_kernel(const SU2Element& g1, const SU2Element& g2, const SU2Element& g3, Scheme scheme) {
  if (scheme == Scheme::Dual) {
    const Matrix2 a = g1.matrix();
    const Matrix2 b = g2.matrix();
    return 2.0 / kVolume * detail::trace_product(a * b - b * a, g3.inverse_matrix());
  }
  const Matrix2 a = g1.inverse_matrix();
  const Matrix2 b = g2.inverse_matrix();
  return 4.0 / (kVolume * kVolume) * detail::trace_product(a * b - b * a, g3.matrix());
}

// Dual Lie kernel expanded in Cayley-Klein parameters.
inline cplx su2_dual_lie_expansion(const SU2Element& g1, const SU2Element& g2, const SU2Element& g3) {
  const cplx a1 = g1.alpha, b1 = g1.beta, a2 = g2.alpha, b2 = g2.beta, a3 = g3.alpha, b3 = g3.beta;
  const cplx A1 = std::conj(a1), B1 = std::conj(b1), A2 = std::conj(a2), B2 = std::conj(b2);
  const cplx A3 = std::conj(a3), B3 = std::conj(b3);
  return 2.0 / kVolume *
         ((b2 * B1 - b1 * B2) * A3 + (a1 * b2 - a2 * b1 + b1 * A2 - b2 * A1) * B3 -
          b3 * (B2 * a1 - A1 * B2 + A2 * B1 - B1 * a2) + a3 * (B2 * b1 - B1 * b2));
}

// Variant with the A1 B2 and A2 B1 signs exchanged in the beta3 term. It
// does not equal the trace form; kept for comparison.
inline cplx su2_dual_lie_expansion_alt(const SU2Element& g1, const SU2Element& g2, const SU2Element& g3) {
  const cplx a1 = g1.alpha, b1 = g1.beta, a2 = g2.alpha, b2 = g2.beta, a3 = g3.alpha, b3 = g3.beta;
  const cplx A1 = std::conj(a1), B1 = std::conj(b1), A2 = std::conj(a2), B2 = std::conj(b2);
  const cplx A3 = std::conj(a3), B3 = std::conj(b3);
  return 2.0 / kVolume *
         ((b2 * B1 - b1 * B2) * A3 + (a1 * b2 - a2 * b1 + b1 * A2 - b2 * A1) * B3 -
          b3 * (B2 * a1 - A2 * B1 + A1 * B2 - B1 * a2) + a3 * (B2 * b1 - B1 * b2));
}

enum class KernelForm { Star, Lie };

// Double quadrature of the kernel against f1 (left) and f2 (right) at g.
inline cplx su2_star(const std::vector<cplx>& f1, const std::vector<cplx>& f2, const SU2Element& g,
                     const HaarGrid& grid, Scheme scheme, KernelForm form = KernelForm::Star) {
  check_samples(grid, f1);
  check_samples(grid, f2);
  const std::size_t n = grid.size();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx wi = grid.weights[i] * f1[i];
    if (wi == 0.0) continue;
    cplx row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx k = form == KernelForm::Lie ? su2_lie_kernel(grid.nodes[i], grid.nodes[j], g, scheme)
                                             : su2_kernel(grid.nodes[i], grid.nodes[j], g, scheme);
      row += grid.weights[j] * f2[j] * k;
    }
    acc += wi * row;
  }
  return acc;
}

inline SU2Element random_element(RandomSource& rng) {
  const double theta = std::acos(rng.uniform(-1.0, 1.0));
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double psi = rng.uniform(0.0, 4.0 * std::numbers::pi);
  return su2_element(theta, phi, psi);
}

// |sum of weights - 16 pi^2|
inline double volume_residual(const HaarGrid& grid) { return std::abs(grid.volume - kVolume); }

// Worst deviation of the 16 integrals of u_ab(g) conj(u_cd(g)) from
// (V/2) delta_ac delta_bd.
inline double orthogonality_residual(const HaarGrid& grid) {
  double worst = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const cplx v = integrate(grid, [&](const SU2Element& g) {
            const Matrix2 m = g.matrix();
            return cplx(m(a, b) * std::conj(m(c, d)));
          });
          const double expected = (a == c && b == d) ? kVolume / 2.0 : 0.0;
          worst = std::max(worst, std::abs(v - expected));
        }
  return worst;
}

}  // namespace groupstar::su2

#endif  // GROUPSTAR_SU2_HPP_
