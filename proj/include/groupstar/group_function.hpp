#ifndef GROUPSTAR_GROUP_FUNCTION_HPP_
#define GROUPSTAR_GROUP_FUNCTION_HPP_

#include <cstddef>
#include <vector>

#include "groupstar/linalg.hpp"

namespace groupstar {

// A complex function on a finite group; values[k] = f(g_k).
struct GroupFunction {
  std::vector<cplx> values;

  GroupFunction() = default;
  explicit GroupFunction(std::vector<cplx> v) : values(std::move(v)) {}
  explicit GroupFunction(std::size_t n, cplx fill = 0.0) : values(n, fill) {}

  std::size_t size() const { return values.size(); }
  cplx& operator[](std::size_t k) { return values[k]; }
  const cplx& operator[](std::size_t k) const { return values[k]; }

  friend bool operator==(const GroupFunction&, const GroupFunction&) = default;
};

inline double max_abs_diff(const GroupFunction& a, const GroupFunction& b) {
  return max_abs_diff(a.values, b.values);
}

}  // namespace groupstar

#endif  // GROUPSTAR_GROUP_FUNCTION_HPP_
