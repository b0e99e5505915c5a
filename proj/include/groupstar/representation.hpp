// Unitary irreducible representations of the builtin groups, characters and
// character tables.

#ifndef GROUPSTAR_REPRESENTATION_HPP_
#define GROUPSTAR_REPRESENTATION_HPP_

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "groupstar/error.hpp"
#include "groupstar/group.hpp"
#include "groupstar/group_function.hpp"
#include "groupstar/linalg.hpp"

namespace groupstar {

using GroupPtr = std::shared_ptr<const GroupTable>;

inline GroupPtr make_group(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

// matrices[k] = u(g_k). One-dimensional irreps hold 1x1 matrices.
struct Irrep {
  GroupPtr group;
  std::string label;
  MatrixFamily matrices;

  Eigen::Index dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

struct ValidationReport {
  double homomorphism_residual = 0.0;
  double unitarity_residual = 0.0;
  double orthogonality_residual = 0.0;
  double irreducibility_residual = 0.0;
  double tolerance = 0.0;

  bool homomorphism_ok() const { return homomorphism_residual <= tolerance; }
  bool unitarity_ok() const { return unitarity_residual <= tolerance; }
  bool orthogonality_ok() const { return orthogonality_residual <= tolerance; }
  bool irreducibility_ok() const { return irreducibility_residual <= tolerance; }
  bool passed() const {
    return homomorphism_ok() && unitarity_ok() && orthogonality_ok() && irreducibility_ok();
  }
  double worst() const {
    return std::max({homomorphism_residual, unitarity_residual, orthogonality_residual,
                     irreducibility_residual});
  }
};

namespace pauli {

inline Matrix s0() { return Matrix::Identity(2, 2); }
inline Matrix s1() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
inline Matrix s2() {
  Matrix m(2, 2);
  m << 0.0, cplx(0, -1), cplx(0, 1), 0.0;
  return m;
}
inline Matrix s3() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

namespace detail {

inline MatrixFamily one_dimensional(std::initializer_list<double> values) {
  MatrixFamily out;
  for (double v : values) out.push_back(Matrix::Constant(1, 1, v));
  return out;
}

inline Matrix diag2(cplx a, cplx b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline Matrix antidiag2(cplx a, cplx b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = a;
  m(1, 0) = b;
  return m;
}

}  // namespace detail

inline std::vector<std::string> builtin_irrep_labels(BuiltinGroup g) {
  switch (g) {
    case BuiltinGroup::Z2: return {"triv", "sign"};
    case BuiltinGroup::Q8: return {"triv", "1d_2", "1d_3", "1d_4", "2d"};
    case BuiltinGroup::D4: return {"2d", "triv", "1d_2", "1d_3", "1d_4"};
    case BuiltinGroup::C3v: return {"triv", "sign", "2d"};
  }
  return {};
}

// Irreps of a builtin group. `group` must be one of the builtin tables (its
// name() identifies which).
inline Irrep builtin_irrep(const GroupPtr& group, std::string_view label) {
  const auto which = parse_builtin_group(group->name());
  if (!which) throw UnknownLabel("group '" + group->name() + "' has no builtin irreps");
  const std::complex<double> i(0.0, 1.0);
  using namespace pauli;
  MatrixFamily m;
  switch (*which) {
    case BuiltinGroup::Z2:
      if (label == "triv") m = detail::one_dimensional({1, 1});
      if (label == "sign") m = detail::one_dimensional({1, -1});
      break;
    case BuiltinGroup::Q8:
      // Element order (E, P, K, L, M, K', L', M').
      if (label == "triv") m = detail::one_dimensional({1, 1, 1, 1, 1, 1, 1, 1});
      if (label == "1d_2") m = detail::one_dimensional({1, 1, -1, 1, -1, -1, 1, -1});
      if (label == "1d_3") m = detail::one_dimensional({1, 1, 1, -1, -1, 1, -1, -1});
      if (label == "1d_4") m = detail::one_dimensional({1, 1, -1, -1, 1, -1, -1, 1});
      // M = KL forces M = -i s3 once K = i s1 and L = i s2.
      if (label == "2d")
        m = {s0(), -s0(), i * s1(), i * s2(), -i * s3(), -i * s1(), -i * s2(), i * s3()};
      break;
    case BuiltinGroup::D4:
      // Element order (E, C4, C4^2, C4^3, S1, S2, s13, s24).
      if (label == "2d")
        m = {s0(), i * s3(), -s0(), -i * s3(), -s1(), s1(), -s2(), s2()};
      if (label == "triv") m = detail::one_dimensional({1, 1, 1, 1, 1, 1, 1, 1});
      if (label == "1d_2") m = detail::one_dimensional({1, -1, 1, -1, -1, -1, 1, 1});
      if (label == "1d_3") m = detail::one_dimensional({1, -1, 1, -1, 1, 1, -1, -1});
      if (label == "1d_4") m = detail::one_dimensional({1, 1, 1, 1, -1, -1, -1, -1});
      break;
    case BuiltinGroup::C3v: {
      if (label == "triv") m = detail::one_dimensional({1, 1, 1, 1, 1, 1});
      if (label == "sign") m = detail::one_dimensional({1, 1, 1, -1, -1, -1});
      if (label == "2d") {
        const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        m = {s0(),
             detail::diag2(w, std::conj(w)),
             detail::diag2(w * w, std::conj(w * w)),
             s1(),
             detail::antidiag2(w, std::conj(w)),
             detail::antidiag2(w * w, std::conj(w * w))};
      }
      break;
    }
  }
  if (m.empty())
    throw UnknownLabel("no irrep '" + std::string(label) + "' for group " + group->name());
  return Irrep{group, std::string(label), std::move(m)};
}

inline Irrep builtin_irrep(BuiltinGroup g, std::string_view label) {
  return builtin_irrep(make_group(builtin_group(g)), label);
}

inline std::vector<Irrep> builtin_irreps(const GroupPtr& group) {
  const auto which = parse_builtin_group(group->name());
  if (!which) throw UnknownLabel("group '" + group->name() + "' has no builtin irreps");
  std::vector<Irrep> out;
  for (const auto& label : builtin_irrep_labels(*which)) out.push_back(builtin_irrep(group, label));
  return out;
}

inline void check_shapes(const GroupTable& g, const Irrep& r) {
  if (r.matrices.size() != g.order())
    throw DimensionMismatch("irrep '" + r.label + "' has " + std::to_string(r.matrices.size()) +
                            " matrices for a group of order " + std::to_string(g.order()));
  const Eigen::Index d = r.dim();
  if (d == 0) throw DimensionMismatch("irrep '" + r.label + "' has empty matrices");
  for (const auto& m : r.matrices)
    if (m.rows() != d || m.cols() != d)
      throw DimensionMismatch("irrep '" + r.label + "' mixes matrix shapes");
}

inline GroupFunction character(const Irrep& r) {
  GroupFunction chi(r.matrices.size());
  for (std::size_t k = 0; k < r.matrices.size(); ++k) chi[k] = r.matrices[k].trace();
  return chi;
}

inline ValidationReport validate_irrep(const GroupTable& g, const Irrep& r, double tol) {
  check_shapes(g, r);
  const std::size_t n = g.order();
  const Eigen::Index d = r.dim();
  ValidationReport rep;
  rep.tolerance = tol;
  const Matrix id = Matrix::Identity(d, d);
  for (std::size_t a = 0; a < n; ++a) {
    rep.unitarity_residual =
        std::max(rep.unitarity_residual, max_abs_diff(r.matrices[a] * dagger(r.matrices[a]), id));
    for (std::size_t b = 0; b < n; ++b)
      rep.homomorphism_residual =
          std::max(rep.homomorphism_residual,
                   max_abs_diff(r.matrices[a] * r.matrices[b], r.matrices[g.multiply(a, b)]));
  }
  const double scale = static_cast<double>(n) / static_cast<double>(d);
  for (Eigen::Index m = 0; m < d; ++m)
    for (Eigen::Index nn = 0; nn < d; ++nn)
      for (Eigen::Index al = 0; al < d; ++al)
        for (Eigen::Index be = 0; be < d; ++be) {
          cplx s = 0.0;
          for (std::size_t k = 0; k < n; ++k)
            s += r.matrices[k](m, nn) * std::conj(r.matrices[k](al, be));
          const double expected = (m == al && nn == be) ? scale : 0.0;
          rep.orthogonality_residual = std::max(rep.orthogonality_residual, std::abs(s - expected));
        }
  const GroupFunction chi = character(r);
  double norm = 0.0;
  for (const auto& c : chi.values) norm += std::norm(c);
  rep.irreducibility_residual = std::abs(norm - static_cast<double>(n));
  return rep;
}

struct CharacterTable {
  GroupPtr group;
  std::vector<std::string> labels;
  std::vector<GroupFunction> rows;
  // First element of each conjugacy class, in class order.
  std::vector<Element> class_representatives;

  // Value of row `r` on class `c`.
  cplx at_class(std::size_t r, std::size_t c) const { return rows[r][class_representatives[c]]; }
};

inline CharacterTable character_table(const GroupPtr& g, const std::vector<Irrep>& irreps,
                                      double tol = 1e-10) {
  CharacterTable t;
  t.group = g;
  for (const auto& cls : g->classes()) t.class_representatives.push_back(cls.front());
  for (const auto& r : irreps) {
    if (!r.group || !(*r.group == *g))
      throw GroupMismatch("irrep '" + r.label + "' belongs to a different group");
    const auto rep = validate_irrep(*g, r, tol);
    if (!rep.passed())
      throw InvalidIrrep("irrep '" + r.label + "' fails validation (worst residual " +
                         std::to_string(rep.worst()) + ")");
    t.labels.push_back(r.label);
    t.rows.push_back(character(r));
  }
  return t;
}

// (1/N) sum_k chi_a(g_k) conj(chi_b(g_k))
inline cplx character_inner(const GroupFunction& a, const GroupFunction& b) {
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * std::conj(b[k]);
  return s / static_cast<double>(a.size());
}

}  // namespace groupstar

#endif  // GROUPSTAR_REPRESENTATION_HPP_
