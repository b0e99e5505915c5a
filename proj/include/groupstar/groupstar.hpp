#ifndef GROUPSTAR_GROUPSTAR_HPP_
#define GROUPSTAR_GROUPSTAR_HPP_

#include "groupstar/error.hpp"
#include "groupstar/linalg.hpp"
#include "groupstar/group.hpp"
#include "groupstar/group_function.hpp"
#include "groupstar/representation.hpp"
#include "groupstar/star.hpp"
#include "groupstar/identities.hpp"
#include "groupstar/su2.hpp"
#include "groupstar/io.hpp"

#endif  // GROUPSTAR_GROUPSTAR_HPP_
