#pragma once

#include "bsymb/linalg.hpp"

namespace bsymb {

/// Built-in reference matrices over GF(2): the columns are ordered point
/// configurations whose cyclic windows are independent.

/// Ordered points of PG(2, 2), window 3; n in 3..7.
MatGF pg22_reference(int n);

/// Ordered points of PG(3, 2), window 4; n in {5, 7, 8, 10, 13, 15}. The
/// 15-column matrix also carries valid prefixes for n in
/// {4, 6, 9, 11, 12, 14}: the first n columns are an ordered configuration.
MatGF pg32_reference(int n);

}  // namespace bsymb
