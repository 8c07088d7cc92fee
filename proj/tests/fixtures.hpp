#pragma once

#include "quadratura/geometry.hpp"

namespace quadratura::fixtures {

// The classical 11-square dissection of the 13x13 square, placements
// sorted by (row, col). Placement index k corresponds to the network
// edge variable x_{k+1} of the classical labelling.
inline Tiling patch_quilt_13() {
	Tiling t;
	t.n = 13;
	t.placements = {
	    {1, 1, 6}, {1, 7, 7}, {7, 1, 2}, {7, 3, 3}, {7, 6, 1}, {8, 6, 2},
	    {8, 8, 6}, {9, 1, 2}, {10, 3, 1}, {10, 4, 4}, {11, 1, 3},
	};
	return t;
}

inline Tiling four_units() {
	return Tiling{2, {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}}};
}

// 3x3 split into a 2x2 and five units.
inline Tiling three_by_three() {
	return Tiling{3, {{1, 1, 1}, {1, 2, 2}, {2, 1, 1}, {3, 1, 1}, {3, 2, 1}, {3, 3, 1}}};
}

}  // namespace quadratura::fixtures
