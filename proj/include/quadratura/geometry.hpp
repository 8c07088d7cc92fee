#pragma once

#include <compare>
#include <string>
#include <vector>

namespace quadratura {

// One constituent square: (row, col) is the top-left cell, 1-based with
// row 1 at the top. The square occupies rows row..row+size-1 and columns
// col..col+size-1.
struct Placement {
	int row = 0;
	int col = 0;
	int size = 0;

	auto operator<=>(const Placement&) const = default;
};

// A dissection of an n x n square into smaller integer squares.
struct Tiling {
	int n = 0;
	std::vector<Placement> placements;

	auto operator<=>(const Tiling&) const = default;
};

// (size, count) pairs, strictly increasing in size.
struct SizeCount {
	int size = 0;
	int count = 0;

	auto operator<=>(const SizeCount&) const = default;
};
using SizeMultiset = std::vector<SizeCount>;

enum class ViolationKind { OutOfBounds, Overlap, Gap, SizeTooLarge, SizeTooSmall };

struct Violation {
	ViolationKind kind;
	std::string message;
	// Indices into Tiling::placements of the offending placement(s);
	// empty for Gap, which names a cell instead.
	std::vector<int> placements;
	int row = 0;  // offending cell for Overlap/Gap
	int col = 0;
};

struct ValidationReport {
	bool ok = false;
	std::vector<Violation> violations;
};

// Checks all Tiling invariants with an explicit occupancy grid.
// Violations are data, not errors; only n out of range throws.
ValidationReport validate(const Tiling& t);

// Throws InvalidTiling unless validate(t).ok.
void require_valid(const Tiling& t);

SizeMultiset multiset(const Tiling& t);

// Formats a multiset as "1^2 2^3 ...".
std::string format_multiset(const SizeMultiset& ms);

// Enlarges t by the integer factor k >= 2.
Tiling scale(const Tiling& t, int k);

// All 8 dihedral images of t, placements sorted by (row, col, size).
std::vector<Tiling> dihedral_images(const Tiling& t);

// Lexicographically least tiling among the 8 dihedral images.
Tiling canonical_form(const Tiling& t);

// n lines of n cell labels; each cell carries the size of its covering
// square, right-aligned in fixed-width columns, single space separators.
std::string render_ascii(const Tiling& t);

// Tiling file format: optional '#' comment lines, a header "n <N>", then
// one "<row> <col> <size>" line per placement.
// parse_tiling only parses; read_tiling additionally validates.
Tiling parse_tiling(const std::string& text);
Tiling read_tiling(const std::string& text);
std::string write_tiling(const Tiling& t);

}  // namespace quadratura
