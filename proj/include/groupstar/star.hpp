// Quantizer/dequantizer pairs on finite groups and the star-product kernels
// they induce.
//
// Symbols are f_A(g_k) = Tr(A U(g_k)) and the reconstruction is
// A = sum_k f_A(g_k) D(g_k). The kernel K[x][y][z] = Tr(D(y) D(z) U(x))
// turns operator multiplication into (f * h)(x) = sum_{y,z} K[x][y][z] f(y) h(z).
// The output index always comes first.

#ifndef GROUPSTAR_STAR_HPP_
#define GROUPSTAR_STAR_HPP_

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupstar/error.hpp"
#include "groupstar/group.hpp"
#include "groupstar/group_function.hpp"
#include "groupstar/linalg.hpp"
#include "groupstar/representation.hpp"

namespace groupstar {

enum class Scheme { Primary, Dual, Custom };

inline std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Primary: return "primary";
    case Scheme::Dual: return "dual";
    case Scheme::Custom: return "custom";
  }
  return {};
}

inline std::optional<Scheme> parse_scheme(std::string_view s) {
  if (s == "primary") return Scheme::Primary;
  if (s == "dual") return Scheme::Dual;
  if (s == "custom") return Scheme::Custom;
  return std::nullopt;
}

struct QuantizerPair {
  GroupPtr group;  // null for custom families not tied to a group
  Scheme scheme = Scheme::Custom;
  std::string irrep_label;
  MatrixFamily U;  // dequantizer
  MatrixFamily D;  // quantizer

  std::size_t size() const { return U.size(); }
  Eigen::Index dim() const { return U.empty() ? 0 : U.front().rows(); }
};

// Dense N x N x N complex array, row-major in (first, second, third).
struct Tensor3 {
  std::size_t n = 0;
  std::vector<cplx> data;

  Tensor3() = default;
  explicit Tensor3(std::size_t n_) : n(n_), data(n_ * n_ * n_, 0.0) {}

  cplx& operator()(std::size_t a, std::size_t b, std::size_t c) { return data[(a * n + b) * n + c]; }
  const cplx& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data[(a * n + b) * n + c];
  }
};

inline double max_abs_diff(const Tensor3& a, const Tensor3& b) { return max_abs_diff(a.data, b.data); }

enum class KernelScheme { Primary, Dual, Custom, Pointwise, Convolution, Combination };
enum class KernelKind { Star, Lie, Jordan };

inline std::string to_string(KernelScheme s) {
  switch (s) {
    case KernelScheme::Primary: return "primary";
    case KernelScheme::Dual: return "dual";
    case KernelScheme::Custom: return "custom";
    case KernelScheme::Pointwise: return "pointwise";
    case KernelScheme::Convolution: return "convolution";
    case KernelScheme::Combination: return "combination";
  }
  return {};
}

inline std::optional<KernelScheme> parse_kernel_scheme(std::string_view s) {
  for (auto k : {KernelScheme::Primary, KernelScheme::Dual, KernelScheme::Custom,
                 KernelScheme::Pointwise, KernelScheme::Convolution, KernelScheme::Combination})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::Star: return "star";
    case KernelKind::Lie: return "lie";
    case KernelKind::Jordan: return "jordan";
  }
  return {};
}

inline std::optional<KernelKind> parse_kernel_kind(std::string_view s) {
  if (s == "star") return KernelKind::Star;
  if (s == "lie") return KernelKind::Lie;
  if (s == "jordan") return KernelKind::Jordan;
  return std::nullopt;
}

// K[x][y][z] with x the output point.
struct StarKernel {
  GroupPtr group;
  Tensor3 tensor;
  KernelScheme scheme = KernelScheme::Custom;
  KernelKind kind = KernelKind::Star;
  bool deformed = false;
  std::string irrep_label;
  Eigen::Index dim = 0;
  // Constant multiplying the trace/character factor: (N_s/N)^2 for primary,
  // N_s/N for dual, 1 otherwise.
  double normalization = 1.0;

  std::size_t order() const { return tensor.n; }
  const cplx& operator()(std::size_t x, std::size_t y, std::size_t z) const { return tensor(x, y, z); }
};

inline QuantizerPair quantizer_pair(const Irrep& r, Scheme scheme, double tol = 1e-10) {
  if (!r.group) throw InvalidIrrep("irrep has no group");
  const auto rep = validate_irrep(*r.group, r, tol);
  if (!rep.passed())
    throw InvalidIrrep("irrep '" + r.label + "' fails validation (worst residual " +
                       std::to_string(rep.worst()) + ")");
  const double c = static_cast<double>(r.dim()) / static_cast<double>(r.group->order());
  QuantizerPair p;
  p.group = r.group;
  p.irrep_label = r.label;
  switch (scheme) {
    case Scheme::Primary:
      p.scheme = Scheme::Primary;
      for (const auto& u : r.matrices) {
        p.U.push_back(u);
        p.D.push_back(c * dagger(u));
      }
      break;
    case Scheme::Dual:
      p.scheme = Scheme::Dual;
      for (const auto& u : r.matrices) {
        p.U.push_back(c * dagger(u));
        p.D.push_back(u);
      }
      break;
    case Scheme::Custom:
      throw InvalidIrrep("quantizer_pair builds primary or dual pairs; use custom_pair");
  }
  return p;
}

// Accepts an arbitrary operator family when Tr(U_i D_j) = delta_ij.
inline QuantizerPair custom_pair(MatrixFamily U, MatrixFamily D, GroupPtr group = nullptr,
                                 double tol = 1e-12) {
  if (U.empty() || U.size() != D.size())
    throw ShapeMismatch("quantizer and dequantizer families must be non-empty and equally long");
  const Eigen::Index d = U.front().rows();
  for (std::size_t k = 0; k < U.size(); ++k)
    if (U[k].rows() != d || U[k].cols() != d || D[k].rows() != d || D[k].cols() != d)
      throw ShapeMismatch("operator " + std::to_string(k) + " is not " + std::to_string(d) + "x" +
                          std::to_string(d));
  if (group && group->order() != U.size())
    throw ShapeMismatch("family length does not match the group order");
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = 0; j < D.size(); ++j) {
      const cplx t = (U[i] * D[j]).trace();
      const double residual = std::abs(t - (i == j ? 1.0 : 0.0));
      if (residual > tol) throw OrthogonalityViolation(i, j, residual);
    }
  QuantizerPair p;
  p.group = std::move(group);
  p.scheme = Scheme::Custom;
  p.U = std::move(U);
  p.D = std::move(D);
  return p;
}

inline GroupFunction symbol(const QuantizerPair& p, const Matrix& A) {
  if (A.rows() != p.dim() || A.cols() != p.dim())
    throw ShapeMismatch("operator is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                        ", pair acts on dimension " + std::to_string(p.dim()));
  GroupFunction f(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) f[k] = (A * p.U[k]).trace();
  return f;
}

inline Matrix reconstruct(const QuantizerPair& p, const GroupFunction& f) {
  if (f.size() != p.size())
    throw LengthMismatch("function has " + std::to_string(f.size()) + " values, pair has " +
                         std::to_string(p.size()) + " operators");
  Matrix A = Matrix::Zero(p.dim(), p.dim());
  for (std::size_t k = 0; k < p.size(); ++k) A += f[k] * p.D[k];
  return A;
}

namespace detail {

// Tr(M N) without forming the product.
inline cplx trace_of_product(const Matrix& m, const Matrix& n) {
  return (m.array() * n.transpose().array()).sum();
}

inline double pair_normalization(const QuantizerPair& p) {
  if (!p.group || p.scheme == Scheme::Custom) return 1.0;
  const double c = static_cast<double>(p.dim()) / static_cast<double>(p.group->order());
  return p.scheme == Scheme::Primary ? c * c : c;
}

inline KernelScheme kernel_scheme(Scheme s) {
  switch (s) {
    case Scheme::Primary: return KernelScheme::Primary;
    case Scheme::Dual: return KernelScheme::Dual;
    case Scheme::Custom: return KernelScheme::Custom;
  }
  return KernelScheme::Custom;
}

inline StarKernel kernel_with_insert(const QuantizerPair& p, const Matrix* k) {
  const std::size_t n = p.size();
  StarKernel K;
  K.group = p.group;
  K.tensor = Tensor3(n);
  K.scheme = kernel_scheme(p.scheme);
  K.kind = KernelKind::Star;
  K.deformed = k != nullptr;
  K.irrep_label = p.irrep_label;
  K.dim = p.dim();
  K.normalization = pair_normalization(p);
  for (std::size_t y = 0; y < n; ++y) {
    const Matrix left = k ? Matrix(p.D[y] * *k) : p.D[y];
    for (std::size_t z = 0; z < n; ++z) {
      const Matrix dd = left * p.D[z];
      for (std::size_t x = 0; x < n; ++x) K.tensor(x, y, z) = trace_of_product(dd, p.U[x]);
    }
  }
  return K;
}

}  // namespace detail

inline StarKernel star_kernel(const QuantizerPair& p) { return detail::kernel_with_insert(p, nullptr); }

// Kernel of the deformed operator product A k B.
inline StarKernel k_deformed_kernel(const QuantizerPair& p, const Matrix& k) {
  if (k.rows() != p.dim() || k.cols() != p.dim())
    throw ShapeMismatch("deformation matrix must be " + std::to_string(p.dim()) + "x" +
                        std::to_string(p.dim()));
  return detail::kernel_with_insert(p, &k);
}

inline GroupFunction star_apply(const StarKernel& K, const GroupFunction& f, const GroupFunction& h) {
  const std::size_t n = K.order();
  if (f.size() != n || h.size() != n)
    throw LengthMismatch("star_apply expects functions of length " + std::to_string(n));
  GroupFunction out(n);
  for (std::size_t x = 0; x < n; ++x) {
    cplx s = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      cplx row = 0.0;
      for (std::size_t z = 0; z < n; ++z) row += K(x, y, z) * h[z];
      s += row * f[y];
    }
    out[x] = s;
  }
  return out;
}

// C[x][y][z] = K[x][y][z] - K[x][z][y]
inline StarKernel lie_kernel(const StarKernel& K) {
  StarKernel C = K;
  C.kind = KernelKind::Lie;
  const std::size_t n = K.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) C.tensor(x, y, z) = K(x, y, z) - K(x, z, y);
  return C;
}

// J[x][y][z] = (K[x][y][z] + K[x][z][y]) / 2
inline StarKernel jordan_kernel(const StarKernel& K) {
  StarKernel J = K;
  J.kind = KernelKind::Jordan;
  const std::size_t n = K.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) J.tensor(x, y, z) = 0.5 * (K(x, y, z) + K(x, z, y));
  return J;
}

// a[a][s][c] = Tr(u(g_a) k u(g_s) u(g_c)^-1) / N_s, with k = identity when absent.
inline Tensor3 algebra_structure_constants(const Irrep& r, const std::optional<Matrix>& k = std::nullopt) {
  const std::size_t n = r.matrices.size();
  const Eigen::Index d = r.dim();
  if (k && (k->rows() != d || k->cols() != d))
    throw ShapeMismatch("deformation matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  Tensor3 a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix left = k ? Matrix(r.matrices[i] * *k) : r.matrices[i];
    for (std::size_t s = 0; s < n; ++s) {
      const Matrix ls = left * r.matrices[s];
      for (std::size_t c = 0; c < n; ++c)
        a(i, s, c) = detail::trace_of_product(ls, dagger(r.matrices[c])) / static_cast<double>(d);
    }
  }
  return a;
}

struct ReferenceKernels {
  StarKernel pointwise;
  StarKernel convolution;
};

// Pointwise product and group convolution (f * h)(x) = sum_{yz = x} f(y) h(z).
inline ReferenceKernels reference_kernels(const GroupPtr& g) {
  const std::size_t n = g->order();
  ReferenceKernels out;
  out.pointwise.group = g;
  out.pointwise.tensor = Tensor3(n);
  out.pointwise.scheme = KernelScheme::Pointwise;
  out.convolution.group = g;
  out.convolution.tensor = Tensor3(n);
  out.convolution.scheme = KernelScheme::Convolution;
  for (std::size_t x = 0; x < n; ++x) out.pointwise.tensor(x, x, x) = 1.0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) out.convolution.tensor(g->multiply(y, z), y, z) = 1.0;
  return out;
}

// K1 + lambda K2 on the same group.
inline StarKernel combine_kernels(const StarKernel& K1, const StarKernel& K2, double lambda) {
  if (K1.order() != K2.order() || (K1.group && K2.group && !(*K1.group == *K2.group)))
    throw GroupMismatch("kernels live on different groups");
  StarKernel out = K1;
  out.scheme = KernelScheme::Combination;
  out.normalization = 1.0;
  out.irrep_label.clear();
  for (std::size_t i = 0; i < out.tensor.data.size(); ++i)
    out.tensor.data[i] = K1.tensor.data[i] + lambda * K2.tensor.data[i];
  return out;
}

// The character form used in worked examples: P[a][b][k] =
// prefactor * chi(g_a g_b g_k^-1), inputs first and output last. With
// prefactor N_s/N it is the dual-scheme kernel with its indices rotated.
inline Tensor3 character_kernel_output_last(const Irrep& r, double prefactor) {
  const auto& g = *r.group;
  const GroupFunction chi = character(r);
  const std::size_t n = g.order();
  Tensor3 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k)
        t(a, b, k) = prefactor * chi[g.multiply(g.multiply(a, b), g.inverse(k))];
  return t;
}

// Reorders K[x][y][z] into T[y][z][x] (output last).
inline Tensor3 output_last(const Tensor3& K) {
  Tensor3 t(K.n);
  for (std::size_t x = 0; x < K.n; ++x)
    for (std::size_t y = 0; y < K.n; ++y)
      for (std::size_t z = 0; z < K.n; ++z) t(y, z, x) = K(x, y, z);
  return t;
}

inline Tensor3 output_first(const Tensor3& T) {
  Tensor3 k(T.n);
  for (std::size_t x = 0; x < T.n; ++x)
    for (std::size_t y = 0; y < T.n; ++y)
      for (std::size_t z = 0; z < T.n; ++z) k(x, y, z) = T(y, z, x);
  return k;
}

}  // namespace groupstar

#endif  // GROUPSTAR_STAR_HPP_
