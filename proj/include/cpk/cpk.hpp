#ifndef CPK_CPK_HPP
#define CPK_CPK_HPP

#include "cpk/asteroidal.hpp"
#include "cpk/c1p.hpp"
#include "cpk/central_path.hpp"
#include "cpk/error.hpp"
#include "cpk/families.hpp"
#include "cpk/graph.hpp"
#include "cpk/harness.hpp"
#include "cpk/path_ecc.hpp"
#include "cpk/star_c1p.hpp"

#endif  // CPK_CPK_HPP
