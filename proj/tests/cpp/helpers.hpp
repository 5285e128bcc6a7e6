#pragma once

#include <initializer_list>
#include <vector>

#include "rimhook/geometry.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook::test {

inline Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

inline Rpp R(const Grid& rows) { return Rpp::validate(shape_of(rows), rows); }
inline Tableau T(const Grid& rows) { return Tableau::validate(shape_of(rows), rows); }

// The running example on (4,3,1).
inline Rpp running_example() { return R({{0, 1, 2, 3}, {1, 2, 2}, {1}}); }
// The 3x3 example with one raised row.
inline Rpp bottom_row() { return R({{0, 0, 0}, {0, 0, 0}, {1, 1, 1}}); }
// The 3x3 example used for xi and RSK.
inline Rpp pak_example() { return R({{1, 1, 4}, {2, 3, 4}, {4, 4, 4}}); }
inline Tableau pak_tableau() { return T({{1, 1, 2}, {0, 1, 0}, {3, 0, 0}}); }

inline std::vector<Cell> cells(std::initializer_list<Cell> cs) { return cs; }

}  // namespace rimhook::test
