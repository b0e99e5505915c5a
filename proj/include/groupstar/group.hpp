// Finite groups as validated Cayley tables.
//
// Elements are 0-based indices; element k is displayed as names()[k], which
// defaults to the 1-based "g1".."gN".

#ifndef GROUPSTAR_GROUP_HPP_
#define GROUPSTAR_GROUP_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupstar/error.hpp"

namespace groupstar {

using Element = std::size_t;
using CayleyTable = std::vector<std::vector<Element>>;
using Partition = std::vector<std::vector<Element>>;

class GroupTable;
GroupTable build_group(const CayleyTable& table, std::vector<std::string> names = {},
                       std::string name = {});

class GroupTable {
 public:
  std::size_t order() const { return table_.size(); }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inverses_[a]; }
  const CayleyTable& table() const { return table_; }
  const std::vector<Element>& inverses() const { return inverses_; }
  const std::vector<std::string>& names() const { return names_; }
  const Partition& classes() const { return classes_; }
  // Builtin name ("Z2", "Q8", ...) or empty for user tables.
  const std::string& name() const { return name_; }

  std::size_t class_of(Element a) const { return class_index_[a]; }

  // h g h^-1
  Element conjugate(Element g, Element h) const {
    return table_[table_[h][g]][inverses_[h]];
  }

  std::size_t element_order(Element a) const {
    std::size_t n = 1;
    for (Element p = a; p != identity_; p = table_[p][a]) ++n;
    return n;
  }

  std::optional<Element> find(std::string_view element_name) const {
    auto it = std::find(names_.begin(), names_.end(), element_name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
  }

  // Tables compare equal when they describe the same multiplication on the
  // same indices; names are display-only.
  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.table_ == b.table_;
  }

 private:
  friend GroupTable build_group(const CayleyTable&, std::vector<std::string>, std::string);
  GroupTable() = default;

  CayleyTable table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
  Partition classes_;
  std::vector<std::size_t> class_index_;
  std::string name_;
};

namespace detail {

inline bool is_permutation_of_range(const std::vector<Element>& v) {
  std::vector<bool> seen(v.size(), false);
  for (Element x : v) {
    if (x >= v.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace detail

// Conjugacy classes by direct enumeration. Classes are ordered by their
// smallest element and each class is sorted.
inline Partition conjugacy_classes(const CayleyTable& table, const std::vector<Element>& inverses) {
  const std::size_t n = table.size();
  std::vector<bool> assigned(n, false);
  Partition classes;
  for (Element g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      Element c = table[table[h][g]][inverses[h]];
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline Partition conjugacy_classes(const GroupTable& g) {
  return conjugacy_classes(g.table(), g.inverses());
}

inline GroupTable build_group(const CayleyTable& table, std::vector<std::string> names,
                              std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw NotAGroup("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                      " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw NotAGroup("entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!detail::is_permutation_of_range(table[i]))
      throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Element> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = table[i][j];
    if (!detail::is_permutation_of_range(col))
      throw NotAGroup("column " + std::to_string(j) + " is not a permutation");
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i) ok = table[e][i] == i && table[i][e] == i;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no two-sided identity element");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAGroup("associativity fails at " + detail::triple(i, j, k));

  std::vector<Element> inverses(n);
  for (Element i = 0; i < n; ++i) {
    // Latin rows guarantee exactly one right inverse.
    auto it = std::find(table[i].begin(), table[i].end(), *identity);
    Element inv = static_cast<Element>(it - table[i].begin());
    if (table[inv][i] != *identity)
      throw NotAGroup("element " + std::to_string(i) + " has no two-sided inverse");
    inverses[i] = inv;
  }

  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
  } else if (names.size() != n) {
    throw NotAGroup("expected " + std::to_string(n) + " element names, got " +
                    std::to_string(names.size()));
  }

  GroupTable g;
  g.table_ = table;
  g.identity_ = *identity;
  g.inverses_ = std::move(inverses);
  g.names_ = std::move(names);
  g.name_ = std::move(name);
  g.classes_ = conjugacy_classes(g.table_, g.inverses_);
  g.class_index_.assign(n, 0);
  for (std::size_t c = 0; c < g.classes_.size(); ++c)
    for (Element e : g.classes_[c]) g.class_index_[e] = c;
  return g;
}

enum class BuiltinGroup { Z2, Q8, D4, C3v };

inline constexpr std::array<BuiltinGroup, 4> kBuiltinGroups = {
    BuiltinGroup::Z2, BuiltinGroup::Q8, BuiltinGroup::D4, BuiltinGroup::C3v};

inline std::string to_string(BuiltinGroup g) {
  switch (g) {
    case BuiltinGroup::Z2: return "Z2";
    case BuiltinGroup::Q8: return "Q8";
    case BuiltinGroup::D4: return "D4";
    case BuiltinGroup::C3v: return "C3v";
  }
  return {};
}

inline std::optional<BuiltinGroup> parse_builtin_group(std::string_view s) {
  for (BuiltinGroup g : kBuiltinGroups)
    if (to_string(g) == s) return g;
  return std::nullopt;
}

// Multiplication tables:
//  Z2  {I, P}.
//  Q8  (E, P, K, L, M, K', L', M') with KL = M, LK = M', P central of order 2
//      and primed elements equal to P times the unprimed ones.
//  D4  (E, C4, C4^2, C4^3, S1, S2, s13, s24), the square-symmetry table
//      with rows g1..g8.
//  C3v (e, r, r^2, s, sr, sr^2) in the order of the 2D matrix listing:
//      diag(1,1), diag(w,w^-1), diag(w^2,w^-2) and three antidiagonals.
inline GroupTable builtin_group(BuiltinGroup which) {
  switch (which) {
    case BuiltinGroup::Z2:
      return build_group({{0, 1}, {1, 0}}, {"I", "P"}, "Z2");
    case BuiltinGroup::Q8:
      return build_group({{0, 1, 2, 3, 4, 5, 6, 7},
                          {1, 0, 5, 6, 7, 2, 3, 4},
                          {2, 5, 1, 4, 6, 0, 7, 3},
                          {3, 6, 7, 1, 2, 4, 0, 5},
                          {4, 7, 3, 5, 1, 6, 2, 0},
                          {5, 2, 0, 7, 3, 1, 4, 6},
                          {6, 3, 4, 0, 5, 7, 1, 2},
                          {7, 4, 6, 2, 0, 3, 5, 1}},
                         {"E", "P", "K", "L", "M", "K'", "L'", "M'"}, "Q8");
    case BuiltinGroup::D4:
      return build_group({{0, 1, 2, 3, 4, 5, 6, 7},
                          {1, 2, 3, 0, 7, 6, 4, 5},
                          {2, 3, 0, 1, 5, 4, 7, 6},
                          {3, 0, 1, 2, 6, 7, 5, 4},
                          {4, 6, 5, 7, 0, 2, 1, 3},
                          {5, 7, 4, 6, 2, 0, 3, 1},
                          {6, 5, 7, 4, 3, 1, 0, 2},
                          {7, 4, 6, 5, 1, 3, 2, 0}},
                         {"E", "C4", "C4^2", "C4^3", "S1", "S2", "s13", "s24"}, "D4");
    case BuiltinGroup::C3v:
      return build_group({{0, 1, 2, 3, 4, 5},
                          {1, 2, 0, 4, 5, 3},
                          {2, 0, 1, 5, 3, 4},
                          {3, 5, 4, 0, 2, 1},
                          {4, 3, 5, 1, 0, 2},
                          {5, 4, 3, 2, 1, 0}},
                         {"g1", "g2", "g3", "g4", "g5", "g6"}, "C3v");
  }
  throw UnknownLabel("unknown builtin group");
}

// The set G with the shifted product a * b = a g0^-1 b. Its identity is g0
// and a -> a g0^-1 is an isomorphism onto the original group.
inline GroupTable relabel_by_shift(const GroupTable& g, Element g0) {
  if (g0 >= g.order())
    throw IndexOutOfRange("shift element " + std::to_string(g0) + " outside group of order " +
                          std::to_string(g.order()));
  const Element g0_inv = g.inverse(g0);
  CayleyTable t(g.order(), std::vector<Element>(g.order()));
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) t[a][b] = g.multiply(g.multiply(a, g0_inv), b);
  return build_group(t, g.names());
}

}  // namespace groupstar

#endif  // GROUPSTAR_GROUP_HPP_
