// JSON documents for groups, irreps, kernels, functions and SU(2) samples.
//
// Complex numbers are two-element [re, im] arrays. Floating-point values are
// written with 17 significant digits so that every double round-trips.

#ifndef GROUPSTAR_IO_HPP_
#define GROUPSTAR_IO_HPP_

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "groupstar/error.hpp"
#include "groupstar/group.hpp"
#include "groupstar/identities.hpp"
#include "groupstar/representation.hpp"
#include "groupstar/star.hpp"
#include "groupstar/su2.hpp"

namespace groupstar::io {

using json = nlohmann::json;

namespace detail {

inline void emit(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        emit(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw IoError("cannot serialize a non-finite number");
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

// Deterministic serialization: sorted keys, 17 significant digits, trailing newline.
inline std::string dump(const json& j) {
  std::string out;
  detail::emit(j, out);
  out += '\n';
  return out;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed document: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline json load(const std::string& path) { return parse(read_file(path)); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("field '") + key + "': " + e.what());
  }
}

// --- complex values ------------------------------------------------------

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IoError("complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw IoError("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw IoError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

// --- groups ----------------------------------------------------------------

inline json group_to_json(const GroupTable& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.table();
  j["names"] = g.names();
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

inline GroupTable group_from_json(const json& j) {
  const auto order = field<std::size_t>(j, "order");
  const auto table = field<CayleyTable>(j, "table");
  if (table.size() != order) throw IoError("table has " + std::to_string(table.size()) + " rows, order is " +
                                           std::to_string(order));
  std::vector<std::string> names;
  if (j.contains("names")) names = field<std::vector<std::string>>(j, "names");
  std::string name;
  if (j.contains("name")) name = field<std::string>(j, "name");
  GroupTable g = build_group(table, names, name);
  // A name only identifies a builtin group when the table agrees with it.
  if (auto b = parse_builtin_group(name); b && !(builtin_group(*b) == g))
    return build_group(table, names, "");
  return g;
}

// A group reference is either a builtin name or an inline group document.
inline json group_ref(const GroupTable& g) {
  if (parse_builtin_group(g.name())) return g.name();
  return group_to_json(g);
}

inline GroupPtr resolve_group(const json& j) {
  if (j.is_string()) {
    const auto b = parse_builtin_group(j.get<std::string>());
    if (!b) throw IoError("unknown builtin group '" + j.get<std::string>() + "'");
    return make_group(builtin_group(*b));
  }
  return make_group(group_from_json(j));
}

// --- irreps ----------------------------------------------------------------

inline json irrep_to_json(const Irrep& r) {
  json j;
  j["group"] = group_ref(*r.group);
  j["dim"] = r.dim();
  j["label"] = r.label;
  json ms = json::array();
  for (const auto& m : r.matrices) ms.push_back(to_json(m));
  j["matrices"] = ms;
  return j;
}

inline Irrep irrep_from_json(const json& j) {
  Irrep r;
  r.group = resolve_group(j.at("group"));
  r.label = field<std::string>(j, "label");
  const auto dim = field<Eigen::Index>(j, "dim");
  const json& ms = j.at("matrices");
  if (!ms.is_array()) throw IoError("'matrices' must be an array");
  for (const auto& m : ms) r.matrices.push_back(matrix_from_json(m));
  for (const auto& m : r.matrices)
    if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("matrix shape disagrees with 'dim'");
  check_shapes(*r.group, r);
  return r;
}

// --- functions and kernels ---------------------------------------------

inline json function_to_json(const GroupFunction& f) {
  json vals = json::array();
  for (const auto& v : f.values) vals.push_back(to_json(v));
  return json{{"values", vals}};
}

inline GroupFunction function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw IoError("function document needs a 'values' array");
  GroupFunction f;
  for (const auto& v : j["values"]) f.values.push_back(complex_from_json(v));
  return f;
}

inline constexpr const char* kOutputFirst = "output,left,right";
inline constexpr const char* kOutputLast = "left,right,output";

inline json tensor_to_json(const Tensor3& t) {
  json a = json::array();
  for (std::size_t i = 0; i < t.n; ++i) {
    json b = json::array();
    for (std::size_t k = 0; k < t.n; ++k) {
      json c = json::array();
      for (std::size_t l = 0; l < t.n; ++l) c.push_back(to_json(t(i, k, l)));
      b.push_back(c);
    }
    a.push_back(b);
  }
  return a;
}

inline Tensor3 tensor_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("tensor must be a non-empty nested array");
  const std::size_t n = j.size();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw IoError("tensor is not N x N x N");
    for (std::size_t k = 0; k < n; ++k) {
      if (!j[i][k].is_array() || j[i][k].size() != n) throw IoError("tensor is not N x N x N");
      for (std::size_t l = 0; l < n; ++l) t(i, k, l) = complex_from_json(j[i][k][l]);
    }
  }
  return t;
}

// `output_last` writes T[left][right][output] instead of the internal order.
inline json kernel_to_json(const StarKernel& K, bool output_last_order = false) {
  json j;
  j["group"] = K.group ? group_ref(*K.group) : json(nullptr);
  j["scheme"] = to_string(K.scheme);
  j["kind"] = to_string(K.kind);
  j["deformed"] = K.deformed;
  j["irrep"] = K.irrep_label;
  j["dim"] = K.dim;
  j["normalization"] = K.normalization;
  j["index_order"] = output_last_order ? kOutputLast : kOutputFirst;
  j["tensor"] = tensor_to_json(output_last_order ? output_last(K.tensor) : K.tensor);
  return j;
}

inline StarKernel kernel_from_json(const json& j) {
  StarKernel K;
  if (!j.is_object()) throw IoError("kernel document must be an object");
  if (j.contains("group") && !j["group"].is_null()) K.group = resolve_group(j["group"]);
  const auto scheme = parse_kernel_scheme(field<std::string>(j, "scheme"));
  if (!scheme) throw IoError("unknown kernel scheme");
  K.scheme = *scheme;
  const auto kind = j.contains("kind") ? parse_kernel_kind(field<std::string>(j, "kind")) : KernelKind::Star;
  if (!kind) throw IoError("unknown kernel kind");
  K.kind = *kind;
  if (j.contains("deformed")) K.deformed = field<bool>(j, "deformed");
  if (j.contains("irrep")) K.irrep_label = field<std::string>(j, "irrep");
  K.dim = field<Eigen::Index>(j, "dim");
  if (j.contains("normalization")) K.normalization = field<double>(j, "normalization");
  const std::string order = j.contains("index_order") ? field<std::string>(j, "index_order") : kOutputFirst;
  if (order != kOutputFirst && order != kOutputLast) throw IoError("unknown index_order '" + order + "'");
  const Tensor3 t = tensor_from_json(j.at("tensor"));
  K.tensor = order == kOutputLast ? output_first(t) : t;
  if (K.group && K.group->order() != K.tensor.n)
    throw IoError("tensor size does not match the group order");
  return K;
}

inline json report_to_json(const IdentityReport& r) {
  json j;
  j["name"] = r.name;
  j["group"] = r.group;
  j["irrep"] = r.irrep;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["prefactor"] = r.prefactor;
  j["alt_prefactor_residual"] =
      r.alt_prefactor_residual ? json(*r.alt_prefactor_residual) : json(nullptr);
  j["note"] = r.note;
  j["pass"] = r.pass;
  return j;
}

// --- SU(2) samples -------------------------------------------------------

struct SampledFunction {
  std::size_t n_theta = 0;
  std::size_t n_phi = 0;
  std::size_t n_psi = 0;
  std::vector<su2::SU2Element> points;
  std::vector<cplx> values;
};

inline json samples_to_json(const su2::HaarGrid& grid, const std::vector<cplx>& values) {
  su2::check_samples(grid, values);
  json j;
  j["grid"] = json{{"n_theta", grid.n_theta}, {"n_phi", grid.n_phi}, {"n_psi", grid.n_psi}};
  json s = json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& g = grid.nodes[i];
    s.push_back(json::array({g.theta, g.phi, g.psi, to_json(values[i])}));
  }
  j["samples"] = s;
  return j;
}

// Reads samples and checks that they sit on the nodes of the described grid.
inline std::vector<cplx> samples_from_json(const json& j, const su2::HaarGrid& grid, double tol = 1e-12) {
  const json& gd = j.at("grid");
  if (field<std::size_t>(gd, "n_theta") != grid.n_theta || field<std::size_t>(gd, "n_phi") != grid.n_phi ||
      field<std::size_t>(gd, "n_psi") != grid.n_psi)
    throw GridMismatch("sampled function was taken on a different grid");
  const json& s = j.at("samples");
  if (!s.is_array() || s.size() != grid.size()) throw GridMismatch("sample count does not match the grid");
  std::vector<cplx> values;
  values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const json& rec = s[i];
    if (!rec.is_array() || rec.size() != 4) throw IoError("samples are [theta, phi, psi, [re, im]] records");
    const auto& node = grid.nodes[i];
    if (std::abs(rec[0].get<double>() - node.theta) > tol || std::abs(rec[1].get<double>() - node.phi) > tol ||
        std::abs(rec[2].get<double>() - node.psi) > tol)
      throw GridMismatch("sample " + std::to_string(i) + " is not at the matching grid node");
    values.push_back(complex_from_json(rec[3]));
  }
  return values;
}

inline su2::HaarGrid grid_from_samples(const json& j) {
  const json& gd = j.at("grid");
  return su2::haar_grid(field<std::size_t>(gd, "n_theta"), field<std::size_t>(gd, "n_phi"),
                        field<std::size_t>(gd, "n_psi"));
}

}  // namespace groupstar::io

#endif  // GROUPSTAR_IO_HPP_
