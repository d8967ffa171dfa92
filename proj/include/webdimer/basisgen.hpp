#pragma once

#include "webdimer/tableaux.hpp"
#include "webdimer/webs.hpp"

#include <vector>

namespace wd {

// Non-crossing matching read off a 2-row standard tableau (row 1 = left ends).
Web sl2_web(const Tableau& T);
// Ordered like syt_enumerate(2, n/2).
std::vector<Web> sl2_basis(int n);

// Non-elliptic SL_3 web with T(W) = T, via the m-diagram of the Yamanouchi word:
// arcs drawn as lower semicircles, crossings resolved into H shapes.
Web sl3_growth(const Tableau& T);

// Every internal face has at least 6 sides.
bool is_non_elliptic(const Web& W);

// lambda = (1^n), n in {3,6,9,12}; ordered like syt_enumerate(3, n/3).
std::vector<Web> sl3_basis(const std::vector<int>& lambda);
std::vector<Web> sl3_basis(int n);

}  // namespace wd
