#pragma once

#include "stringy/sectors.hpp"

#include <vector>

namespace stringy {

// E-polynomial of the orbifold model itself: L^{n+2} (1+L)^{n-1}.
LPoly untwisted_e(int n);

struct StringyResult {
  int n = 0;
  LPoly untwisted;
  std::vector<Sector> sectors;
  LPoly total;
};

// Stringy E-polynomial of the n-th relative symmetric product of the
// double-point degeneration: untwisted sector plus all twisted sectors.
// When parallel is set the per-(lambda,theta) groups are evaluated
// concurrently; the result is identical either way.
StringyResult stringy_e(int n, bool parallel = false);

std::vector<std::pair<int, LPoly>> generating_table(int n_max);

} // namespace stringy
