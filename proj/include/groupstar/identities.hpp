// Numerical checks of character identities and star-product properties.
//
// Every check returns an IdentityReport carrying the worst residual instead
// of throwing, so callers can aggregate results.

#ifndef GROUPSTAR_IDENTITIES_HPP_
#define GROUPSTAR_IDENTITIES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "groupstar/error.hpp"
#include "groupstar/group.hpp"
#include "groupstar/linalg.hpp"
#include "groupstar/representation.hpp"
#include "groupstar/star.hpp"

namespace groupstar {

struct IdentityReport {
  std::string name;
  std::string group;
  std::string irrep;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string prefactor;
  // Residual under the alternative prefactor reading, when that
  // differs from the one used for max_residual.
  std::optional<double> alt_prefactor_residual;
  std::string note;
  bool pass = false;
};

inline IdentityReport finish(IdentityReport r) {
  r.pass = std::isfinite(r.max_residual) && r.max_residual <= r.tolerance;
  return r;
}

enum class CharacterIdentity { Eq24, Eq25, Eq27, Weyl };

inline std::string to_string(CharacterIdentity w) {
  switch (w) {
    case CharacterIdentity::Eq24: return "eq24";
    case CharacterIdentity::Eq25: return "eq25";
    case CharacterIdentity::Eq27: return "eq27";
    case CharacterIdentity::Weyl: return "weyl";
  }
  return {};
}

inline IdentityReport verify_character_identity(const Irrep& r, CharacterIdentity which, double tol) {
  const GroupTable& g = *r.group;
  const std::size_t n = g.order();
  const GroupFunction chi = character(r);
  const double ratio = static_cast<double>(r.dim()) / static_cast<double>(n);
  auto mul = [&](Element a, Element b) { return g.multiply(a, b); };
  auto inv = [&](Element a) { return g.inverse(a); };

  IdentityReport rep;
  rep.name = to_string(which);
  rep.group = g.name();
  rep.irrep = r.label;
  rep.tolerance = tol;

  switch (which) {
    case CharacterIdentity::Eq24: {
      // (N_s/N)^2 sum_{k,s} chi(k) chi(s) chi(x k^-1 s^-1) = chi(x)
      rep.prefactor = "N_s^2/N^2";
      for (Element x = 0; x < n; ++x) {
        cplx s = 0.0;
        for (Element k = 0; k < n; ++k)
          for (Element t = 0; t < n; ++t) s += chi[k] * chi[t] * chi[mul(mul(x, inv(k)), inv(t))];
        rep.max_residual = std::max(rep.max_residual, std::abs(ratio * ratio * s - chi[x]));
      }
      rep.alt_prefactor_residual = rep.max_residual;
      break;
    }
    case CharacterIdentity::Eq25: {
      // (N_s/N)^2 sum_{k,k'} chi(k^-1) chi(k'^-1) chi(k k' s^-1) = chi(s^-1)
      rep.prefactor = "(N_s/N)^2";
      for (Element s = 0; s < n; ++s) {
        cplx acc = 0.0;
        for (Element k = 0; k < n; ++k)
          for (Element kp = 0; kp < n; ++kp)
            acc += chi[inv(k)] * chi[inv(kp)] * chi[mul(mul(k, kp), inv(s))];
        rep.max_residual = std::max(rep.max_residual, std::abs(ratio * ratio * acc - chi[inv(s)]));
      }
      rep.alt_prefactor_residual = rep.max_residual;
      break;
    }
    case CharacterIdentity::Eq27: {
      // (N_s/N)^2 sum_{k,k'} chi(k) chi(h k') chi(s k^-1 k'^-1) = chi(h s)
      rep.prefactor = "N_s^2/N^2";
      rep.note = "summed over all (k, k'); no constraint on the indices";
      for (Element h = 0; h < n; ++h)
        for (Element s = 0; s < n; ++s) {
          cplx acc = 0.0;
          for (Element k = 0; k < n; ++k)
            for (Element kp = 0; kp < n; ++kp)
              acc += chi[k] * chi[mul(h, kp)] * chi[mul(mul(s, inv(k)), inv(kp))];
          rep.max_residual = std::max(rep.max_residual, std::abs(ratio * ratio * acc - chi[mul(h, s)]));
        }
      rep.alt_prefactor_residual = rep.max_residual;
      break;
    }
    case CharacterIdentity::Weyl: {
      // chi(s) chi(t) = (N_s/N) sum_r chi(s r^-1 t r); the alternative reading uses N/N_s.
      rep.prefactor = "N_s/N";
      double alt = 0.0;
      for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t) {
          cplx acc = 0.0;
          for (Element q = 0; q < n; ++q) acc += chi[mul(mul(mul(s, inv(q)), t), q)];
          const cplx lhs = chi[s] * chi[t];
          rep.max_residual = std::max(rep.max_residual, std::abs(lhs - ratio * acc));
          alt = std::max(alt, std::abs(lhs - acc / ratio));
        }
      rep.alt_prefactor_residual = alt;
      rep.note = "alt: prefactor N/N_s";
      break;
    }
  }
  return finish(rep);
}

// f_A * f_B against f_{A k B} for random A, B (k = identity when absent).
inline IdentityReport verify_closure(const QuantizerPair& p, int trials, std::uint64_t seed, double tol,
                                     const std::optional<Matrix>& k = std::nullopt) {
  IdentityReport rep;
  rep.name = k ? "closure_deformed" : "closure";
  rep.group = p.group ? p.group->name() : std::string();
  rep.irrep = p.irrep_label;
  rep.tolerance = tol;
  rep.prefactor = to_string(p.scheme);
  const StarKernel K = k ? k_deformed_kernel(p, *k) : star_kernel(p);
  RandomSource rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Matrix A = rng.matrix(p.dim());
    const Matrix B = rng.matrix(p.dim());
    const Matrix AB = k ? Matrix(A * *k * B) : Matrix(A * B);
    const GroupFunction got = star_apply(K, symbol(p, A), symbol(p, B));
    rep.max_residual = std::max(rep.max_residual, max_abs_diff(got, symbol(p, AB)));
  }
  return finish(rep);
}

// reconstruct(symbol(A)) against A for random A.
inline IdentityReport verify_roundtrip(const QuantizerPair& p, int trials, std::uint64_t seed, double tol) {
  IdentityReport rep;
  rep.name = "roundtrip";
  rep.group = p.group ? p.group->name() : std::string();
  rep.irrep = p.irrep_label;
  rep.tolerance = tol;
  rep.prefactor = to_string(p.scheme);
  RandomSource rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Matrix A = rng.matrix(p.dim());
    rep.max_residual = std::max(rep.max_residual, max_abs_diff(reconstruct(p, symbol(p, A)), A));
  }
  return finish(rep);
}

inline IdentityReport verify_associativity(const StarKernel& K, int trials, std::uint64_t seed, double tol) {
  IdentityReport rep;
  rep.name = "assoc";
  rep.group = K.group ? K.group->name() : std::string();
  rep.irrep = K.irrep_label;
  rep.tolerance = tol;
  rep.prefactor = to_string(K.scheme);
  RandomSource rng(seed);
  for (int t = 0; t < trials; ++t) {
    const GroupFunction f(rng.vector(K.order()));
    const GroupFunction g(rng.vector(K.order()));
    const GroupFunction h(rng.vector(K.order()));
    const GroupFunction left = star_apply(K, star_apply(K, f, g), h);
    const GroupFunction right = star_apply(K, f, star_apply(K, g, h));
    rep.max_residual = std::max(rep.max_residual, max_abs_diff(left, right));
  }
  return finish(rep);
}

// Jacobi identity for the bracket [f, g] = star_apply(C, f, g).
inline IdentityReport verify_jacobi(const StarKernel& C, int trials, std::uint64_t seed, double tol) {
  IdentityReport rep;
  rep.name = "jacobi";
  rep.group = C.group ? C.group->name() : std::string();
  rep.irrep = C.irrep_label;
  rep.tolerance = tol;
  RandomSource rng(seed);
  for (int t = 0; t < trials; ++t) {
    const GroupFunction f(rng.vector(C.order()));
    const GroupFunction g(rng.vector(C.order()));
    const GroupFunction h(rng.vector(C.order()));
    const GroupFunction a = star_apply(C, f, star_apply(C, g, h));
    const GroupFunction b = star_apply(C, g, star_apply(C, h, f));
    const GroupFunction c = star_apply(C, h, star_apply(C, f, g));
    for (std::size_t x = 0; x < C.order(); ++x)
      rep.max_residual = std::max(rep.max_residual, std::abs(a[x] + b[x] + c[x]));
  }
  return finish(rep);
}

// Jordan identity (f o g) o (f o f) = f o (g o (f o f)).
inline IdentityReport verify_jordan_identity(const StarKernel& J, int trials, std::uint64_t seed, double tol) {
  IdentityReport rep;
  rep.name = "jordan";
  rep.group = J.group ? J.group->name() : std::string();
  rep.irrep = J.irrep_label;
  rep.tolerance = tol;
  RandomSource rng(seed);
  for (int t = 0; t < trials; ++t) {
    const GroupFunction f(rng.vector(J.order()));
    const GroupFunction g(rng.vector(J.order()));
    const GroupFunction ff = star_apply(J, f, f);
    const GroupFunction left = star_apply(J, star_apply(J, f, g), ff);
    const GroupFunction right = star_apply(J, f, star_apply(J, g, ff));
    rep.max_residual = std::max(rep.max_residual, max_abs_diff(left, right));
  }
  return finish(rep);
}

// Largest |K[x][y][z] - sign K[x][z][y]|; sign = +1 tests symmetry, -1 antisymmetry.
inline double swap_symmetry_residual(const StarKernel& K, double sign) {
  double r = 0.0;
  const std::size_t n = K.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) r = std::max(r, std::abs(K(x, y, z) - sign * K(x, z, y)));
  return r;
}

struct CompatibilityEntry {
  double lambda = 0.0;
  IdentityReport report;
};

inline std::vector<CompatibilityEntry> check_compatibility(const StarKernel& K1, const StarKernel& K2,
                                                           const std::vector<double>& lambdas, int trials,
                                                           std::uint64_t seed, double tol) {
  if (K1.order() != K2.order() || (K1.group && K2.group && !(*K1.group == *K2.group)))
    throw GroupMismatch("compatibility needs two kernels on the same group");
  std::vector<CompatibilityEntry> out;
  for (double lambda : lambdas) {
    IdentityReport rep = verify_associativity(combine_kernels(K1, K2, lambda), trials, seed, tol);
    rep.name = "compat";
    rep.note = "lambda=" + std::to_string(lambda);
    out.push_back({lambda, rep});
  }
  return out;
}

// True iff chi(g1 g2 g3^-1) = chi(g2 g1 g3^-1) for every triple.
inline bool abelian_condition(const Irrep& r, double tol = 1e-12) {
  const GroupTable& g = *r.group;
  const GroupFunction chi = character(r);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Element c = 0; c < g.order(); ++c) {
        const cplx lhs = chi[g.multiply(g.multiply(a, b), g.inverse(c))];
        const cplx rhs = chi[g.multiply(g.multiply(b, a), g.inverse(c))];
        if (std::abs(lhs - rhs) > tol) return false;
      }
  return true;
}

// Orthonormal basis (columns) of the span of the symbols of all operators,
// i.e. of the matrix-coefficient functions g -> U(g)_{ba}.
inline Matrix symbol_span_basis(const QuantizerPair& p) {
  const Eigen::Index d = p.dim();
  Matrix B(static_cast<Eigen::Index>(p.size()), d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      Matrix E = Matrix::Zero(d, d);
      E(a, b) = 1.0;
      const GroupFunction f = symbol(p, E);
      for (std::size_t k = 0; k < p.size(); ++k) B(static_cast<Eigen::Index>(k), a * d + b) = f[k];
    }
  Eigen::ColPivHouseholderQR<Matrix> qr(B);
  const Eigen::Index rank = qr.rank();
  Matrix Q = qr.householderQ();
  return Q.leftCols(rank);
}

// Distance (max-norm) of v from the span of the orthonormal columns of Q.
inline double projection_residual(const Matrix& Q, const GroupFunction& v) {
  Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) x(static_cast<Eigen::Index>(k)) = v[k];
  const Eigen::VectorXcd r = x - Q * (Q.adjoint() * x);
  return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

struct ProjectionReport {
  IdentityReport report;
  GroupFunction product;
  Eigen::Index span_dimension = 0;
};

// f * h must lie in the span of the pair's matrix-coefficient symbols.
inline ProjectionReport projection_property(const StarKernel& K, const QuantizerPair& p, const GroupFunction& f,
                                            const GroupFunction& h, double tol) {
  if (K.order() != p.size() || (K.group && p.group && !(*K.group == *p.group)))
    throw GroupMismatch("kernel and pair live on different groups");
  ProjectionReport out;
  out.product = star_apply(K, f, h);
  const Matrix Q = symbol_span_basis(p);
  out.span_dimension = Q.cols();
  out.report.name = "projection";
  out.report.group = p.group ? p.group->name() : std::string();
  out.report.irrep = p.irrep_label;
  out.report.tolerance = tol;
  out.report.max_residual = projection_residual(Q, out.product);
  out.report = finish(out.report);
  return out;
}

// ---------------------------------------------------------------------------
// C3v Lie relations in the basis
//   y1 = g2 - g3, y2 = g4, y3 = g5, y4 = g1, y5 = g2 + g3, y6 = g4 + g5 + g6.

struct RelationCheck {
  std::string relation;
  double rep_residual = 0.0;      // in the 2D irrep
  double algebra_residual = 0.0;  // in the group algebra C[G]
  bool holds_in_rep = false;
  bool holds_in_algebra = false;
  std::string note;
};

struct LieRelationsReport {
  std::vector<RelationCheck> relations;
  // central[i] for y_{i+1}: commutes with all y_j in the 2D irrep.
  std::vector<bool> central_in_rep;
  std::vector<bool> central_in_algebra;
  // expansion[i][j] = coefficients of [y_{i+1}, y_{j+1}] in (y1, y2, y3, y4),
  // which is a basis of the 2x2 matrices in the 2D irrep.
  std::vector<std::vector<std::vector<cplx>>> expansion;
  double y23_commutator_trace = 0.0;  // |Tr [y2, y3]|
  double minus_y5_trace = 0.0;        // Tr(-y5), real
  bool y23_discrepancy_flagged = false;
  double tolerance = 0.0;
  bool pass = false;
};

namespace detail {

using AlgebraElement = std::vector<cplx>;  // coefficients over group elements

inline AlgebraElement convolve(const GroupTable& g, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out(g.order(), 0.0);
  for (Element y = 0; y < g.order(); ++y)
    for (Element z = 0; z < g.order(); ++z) out[g.multiply(y, z)] += a[y] * b[z];
  return out;
}

inline AlgebraElement algebra_commutator(const GroupTable& g, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement ab = convolve(g, a, b);
  const AlgebraElement ba = convolve(g, b, a);
  for (std::size_t k = 0; k < ab.size(); ++k) ab[k] -= ba[k];
  return ab;
}

inline Matrix image(const Irrep& r, const AlgebraElement& a) {
  Matrix m = Matrix::Zero(r.dim(), r.dim());
  for (std::size_t k = 0; k < a.size(); ++k) m += a[k] * r.matrices[k];
  return m;
}

}  // namespace detail

inline LieRelationsReport c3v_lie_relations(double tol) {
  const GroupPtr g = make_group(builtin_group(BuiltinGroup::C3v));
  const Irrep r = builtin_irrep(g, "2d");
  using detail::AlgebraElement;
  auto elem = [&](std::initializer_list<std::pair<Element, double>> terms) {
    AlgebraElement a(g->order(), 0.0);
    for (auto [e, c] : terms) a[e] += c;
    return a;
  };
  const std::vector<AlgebraElement> y = {
      elem({{1, 1.0}, {2, -1.0}}),          elem({{3, 1.0}}),
      elem({{4, 1.0}}),                     elem({{0, 1.0}}),
      elem({{1, 1.0}, {2, 1.0}}),           elem({{3, 1.0}, {4, 1.0}, {5, 1.0}})};
  std::vector<Matrix> ym;
  for (const auto& a : y) ym.push_back(detail::image(r, a));

  LieRelationsReport rep;
  rep.tolerance = tol;

  auto combo = [&](std::initializer_list<std::pair<int, double>> terms) {
    AlgebraElement a(g->order(), 0.0);
    for (auto [i, c] : terms)
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += c * y[static_cast<std::size_t>(i)][k];
    return a;
  };
  auto check = [&](const std::string& text, int i, int j, const AlgebraElement& rhs) {
    RelationCheck c;
    c.relation = text;
    const Matrix lhs_m = ym[static_cast<std::size_t>(i)] * ym[static_cast<std::size_t>(j)] -
                         ym[static_cast<std::size_t>(j)] * ym[static_cast<std::size_t>(i)];
    c.rep_residual = max_abs_diff(lhs_m, detail::image(r, rhs));
    const AlgebraElement lhs_a =
        detail::algebra_commutator(*g, y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
    c.algebra_residual = max_abs_diff(lhs_a, rhs);
    c.holds_in_rep = c.rep_residual <= tol;
    c.holds_in_algebra = c.algebra_residual <= tol;
    if (c.holds_in_rep && !c.holds_in_algebra) c.note = "holds only modulo the kernel of the 2D irrep";
    if (!c.holds_in_rep) c.note = "does not hold in the 2D irrep";
    rep.relations.push_back(c);
  };
  // Indices are 0-based: y1 -> 0.
  check("[y1,y2] = 2y2 + 4y3 - 2y6", 0, 1, combo({{1, 2.0}, {2, 4.0}, {5, -2.0}}));
  check("[y2,y3] = -y5", 1, 2, combo({{4, -1.0}}));
  check("[y3,y1] = 2y3 + 4y2 - 2y6", 2, 0, combo({{2, 2.0}, {1, 4.0}, {5, -2.0}}));
  check("[y1,y6] = 0", 0, 5, combo({}));
  check("[y2,y6] = 0", 1, 5, combo({}));
  check("[y3,y6] = 0", 2, 5, combo({}));

  for (std::size_t i = 0; i < y.size(); ++i) {
    bool in_rep = true;
    bool in_alg = true;
    for (std::size_t j = 0; j < y.size(); ++j) {
      in_rep = in_rep && (ym[i] * ym[j] - ym[j] * ym[i]).cwiseAbs().maxCoeff() <= tol;
      const auto c = detail::algebra_commutator(*g, y[i], y[j]);
      for (const auto& v : c) in_alg = in_alg && std::abs(v) <= tol;
    }
    rep.central_in_rep.push_back(in_rep);
    rep.central_in_algebra.push_back(in_alg);
  }

  // Expansion in the basis (y1, y2, y3, y4) of M_2(C).
  Matrix basis(4, 4);
  for (int b = 0; b < 4; ++b) {
    const Matrix& m = ym[static_cast<std::size_t>(b)];
    basis.col(b) << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  }
  const Eigen::FullPivLU<Matrix> lu(basis);
  rep.expansion.assign(6, std::vector<std::vector<cplx>>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const Matrix c = ym[i] * ym[j] - ym[j] * ym[i];
      Eigen::VectorXcd v(4);
      v << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
      const Eigen::VectorXcd coef = lu.solve(v);
      rep.expansion[i][j].assign(coef.data(), coef.data() + coef.size());
    }

  rep.y23_commutator_trace = std::abs((ym[1] * ym[2] - ym[2] * ym[1]).trace());
  rep.minus_y5_trace = (-ym[4]).trace().real();
  rep.y23_discrepancy_flagged = rep.y23_commutator_trace <= tol && std::abs(rep.minus_y5_trace) > tol;
  if (rep.y23_discrepancy_flagged)
    rep.relations[1].note = "trace obstruction: Tr[y2,y3] = 0 but Tr(-y5) = " + std::to_string(rep.minus_y5_trace);

  rep.pass = rep.relations[0].holds_in_rep && rep.central_in_rep[3] && rep.central_in_rep[4] &&
             rep.central_in_rep[5] && rep.y23_discrepancy_flagged;
  return rep;
}

// ---------------------------------------------------------------------------
// Comparing character tables and kernels of two groups of the same order.

struct ClassMatching {
  std::vector<std::size_t> class_map;  // class of A -> class of B
  std::vector<std::size_t> row_map;    // irrep row of A -> irrep row of B
};

// All class bijections (respecting class sizes) under which the two tables
// have the same rows. Rows are paired greedily, which is exact because the
// rows of a character table are distinct.
inline std::vector<ClassMatching> match_character_tables(const CharacterTable& a, const CharacterTable& b,
                                                         double tol = 1e-12) {
  std::vector<ClassMatching> out;
  const auto& ca = a.group->classes();
  const auto& cb = b.group->classes();
  if (ca.size() != cb.size() || a.rows.size() != b.rows.size()) return out;
  std::vector<std::size_t> perm(cb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool sizes = true;
    for (std::size_t c = 0; c < ca.size() && sizes; ++c) sizes = ca[c].size() == cb[perm[c]].size();
    if (!sizes) continue;
    std::vector<std::size_t> row_map(a.rows.size());
    std::vector<bool> used(b.rows.size(), false);
    bool ok = true;
    for (std::size_t ra = 0; ra < a.rows.size() && ok; ++ra) {
      ok = false;
      for (std::size_t rb = 0; rb < b.rows.size() && !ok; ++rb) {
        if (used[rb]) continue;
        bool same = true;
        for (std::size_t c = 0; c < ca.size() && same; ++c)
          same = std::abs(a.at_class(ra, c) - b.at_class(rb, perm[c])) <= tol;
        if (same) {
          used[rb] = true;
          row_map[ra] = rb;
          ok = true;
        }
      }
    }
    if (ok) out.push_back({perm, row_map});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct KernelMatchResult {
  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<Element> best_bijection;  // element of A -> element of B
  std::size_t candidates = 0;
};

// Smallest max_{x,y,z} |Ka[x][y][z] - Kb[s(x)][s(y)][s(z)]| over element
// bijections s that send each class of A onto its matched class of B.
inline KernelMatchResult best_kernel_matching(const StarKernel& ka, const StarKernel& kb,
                                              const std::vector<ClassMatching>& matchings) {
  KernelMatchResult res;
  if (ka.order() != kb.order() || !ka.group || !kb.group) return res;
  const auto& ca = ka.group->classes();
  const auto& cb = kb.group->classes();
  const std::size_t n = ka.order();
  for (const auto& m : matchings) {
    // One permutation per class, advanced odometer-style.
    std::vector<std::vector<Element>> images;
    for (std::size_t c = 0; c < ca.size(); ++c) {
      auto v = cb[m.class_map[c]];
      std::sort(v.begin(), v.end());
      images.push_back(v);
    }
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (c == ca.size()) {
        std::vector<Element> s(n);
        for (std::size_t cc = 0; cc < ca.size(); ++cc)
          for (std::size_t i = 0; i < ca[cc].size(); ++i) s[ca[cc][i]] = images[cc][i];
        ++res.candidates;
        double worst = 0.0;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
              worst = std::max(worst, std::abs(ka(x, y, z) - kb(s[x], s[y], s[z])));
        if (worst < res.best_residual) {
          res.best_residual = worst;
          res.best_bijection = s;
        }
        return;
      }
      do {
        rec(c + 1);
      } while (std::next_permutation(images[c].begin(), images[c].end()));
    };
    rec(0);
  }
  return res;
}

}  // namespace groupstar

#endif  // GROUPSTAR_IDENTITIES_HPP_
