#include "quadratura/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "quadratura/errors.hpp"

namespace quadratura {

namespace {

constexpr int kMaxSide = 1 << 15;

void check_side(int n) {
	if (n < 2 || n > kMaxSide) {
		throw InvalidParameter("outer side length must satisfy 2 <= n <= 2^15, got " +
		                       std::to_string(n));
	}
}

std::string placement_str(const Placement& p) {
	return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")x" +
	       std::to_string(p.size);
}

}  // namespace

ValidationReport validate(const Tiling& t) {
	check_side(t.n);
	ValidationReport report;
	const int n = t.n;

	// -1 = empty, otherwise index of the covering placement.
	std::vector<int> grid(static_cast<size_t>(n) * n, -1);

	for (int idx = 0; idx < static_cast<int>(t.placements.size()); ++idx) {
		const Placement& p = t.placements[idx];
		if (p.size < 1) {
			report.violations.push_back({ViolationKind::SizeTooSmall,
			                             "placement " + placement_str(p) + " has size < 1",
			                             {idx}});
			continue;
		}
		if (p.size > n - 1) {
			report.violations.push_back(
			    {ViolationKind::SizeTooLarge,
			     "placement " + placement_str(p) + " exceeds maximum size " +
			         std::to_string(n - 1),
			     {idx}});
			continue;
		}
		if (p.row < 1 || p.col < 1 || p.row + p.size - 1 > n || p.col + p.size - 1 > n) {
			report.violations.push_back({ViolationKind::OutOfBounds,
			                             "placement " + placement_str(p) + " leaves the " +
			                                 std::to_string(n) + "x" + std::to_string(n) +
			                                 " frame",
			                             {idx}});
			continue;
		}
		for (int r = p.row; r < p.row + p.size; ++r) {
			for (int c = p.col; c < p.col + p.size; ++c) {
				int& cell = grid[static_cast<size_t>(r - 1) * n + (c - 1)];
				if (cell >= 0) {
					report.violations.push_back(
					    {ViolationKind::Overlap,
					     "placements " + placement_str(t.placements[cell]) + " and " +
					         placement_str(p) + " both cover cell (" + std::to_string(r) +
					         "," + std::to_string(c) + ")",
					     {cell, idx},
					     r,
					     c});
				} else {
					cell = idx;
				}
			}
		}
	}

	for (int r = 1; r <= n; ++r) {
		for (int c = 1; c <= n; ++c) {
			if (grid[static_cast<size_t>(r - 1) * n + (c - 1)] < 0) {
				report.violations.push_back({ViolationKind::Gap,
				                             "cell (" + std::to_string(r) + "," +
				                                 std::to_string(c) + ") is uncovered",
				                             {},
				                             r,
				                             c});
			}
		}
	}

	report.ok = report.violations.empty();
	return report;
}

void require_valid(const Tiling& t) {
	ValidationReport report = validate(t);
	if (!report.ok) {
		throw InvalidTiling(report.violations.front().message);
	}
}

SizeMultiset multiset(const Tiling& t) {
	require_valid(t);
	std::vector<int> sizes;
	sizes.reserve(t.placements.size());
	for (const Placement& p : t.placements) {
		sizes.push_back(p.size);
	}
	std::sort(sizes.begin(), sizes.end());
	SizeMultiset ms;
	for (int s : sizes) {
		if (!ms.empty() && ms.back().size == s) {
			++ms.back().count;
		} else {
			ms.push_back({s, 1});
		}
	}
	return ms;
}

std::string format_multiset(const SizeMultiset& ms) {
	std::string out;
	for (const SizeCount& sc : ms) {
		if (!out.empty()) {
			out += ' ';
		}
		out += std::to_string(sc.size) + "^" + std::to_string(sc.count);
	}
	return out;
}

Tiling scale(const Tiling& t, int k) {
	require_valid(t);
	if (k < 2) {
		throw InvalidParameter("scale factor must be >= 2, got " + std::to_string(k));
	}
	Tiling out;
	out.n = t.n * k;
	out.placements.reserve(t.placements.size());
	for (const Placement& p : t.placements) {
		out.placements.push_back({k * (p.row - 1) + 1, k * (p.col - 1) + 1, k * p.size});
	}
	return out;
}

std::vector<Tiling> dihedral_images(const Tiling& t) {
	const int n = t.n;
	// Each transform maps a placement's occupied block to its image block
	// and returns the image's top-left corner.
	auto apply = [&](int which, const Placement& p) -> Placement {
		const int r = p.row, c = p.col, s = p.size;
		const int rr = n + 2 - r - s;  // mirrored row of the block
		const int cc = n + 2 - c - s;
		switch (which) {
			case 0: return {r, c, s};
			case 1: return {c, rr, s};    // rotate 90 cw
			case 2: return {rr, cc, s};   // rotate 180
			case 3: return {cc, r, s};    // rotate 270 cw
			case 4: return {r, cc, s};    // horizontal mirror
			case 5: return {rr, c, s};    // vertical mirror
			case 6: return {c, r, s};     // transpose
			default: return {cc, rr, s};  // anti-transpose
		}
	};
	std::vector<Tiling> images;
	images.reserve(8);
	for (int which = 0; which < 8; ++which) {
		Tiling img;
		img.n = n;
		img.placements.reserve(t.placements.size());
		for (const Placement& p : t.placements) {
			img.placements.push_back(apply(which, p));
		}
		std::sort(img.placements.begin(), img.placements.end());
		images.push_back(std::move(img));
	}
	return images;
}

Tiling canonical_form(const Tiling& t) {
	require_valid(t);
	std::vector<Tiling> images = dihedral_images(t);
	return *std::min_element(images.begin(), images.end());
}

std::string render_ascii(const Tiling& t) {
	require_valid(t);
	const int n = t.n;
	std::vector<int> label(static_cast<size_t>(n) * n, 0);
	int max_size = 1;
	for (const Placement& p : t.placements) {
		max_size = std::max(max_size, p.size);
		for (int r = p.row; r < p.row + p.size; ++r) {
			for (int c = p.col; c < p.col + p.size; ++c) {
				label[static_cast<size_t>(r - 1) * n + (c - 1)] = p.size;
			}
		}
	}
	const int width = static_cast<int>(std::to_string(max_size).size());
	std::string out;
	for (int r = 0; r < n; ++r) {
		for (int c = 0; c < n; ++c) {
			std::string cell = std::to_string(label[static_cast<size_t>(r) * n + c]);
			if (c > 0) {
				out += ' ';
			}
			out.append(width - cell.size(), ' ');
			out += cell;
		}
		out += '\n';
	}
	return out;
}

Tiling parse_tiling(const std::string& text) {
	std::istringstream in(text);
	std::string line;
	Tiling t;
	bool have_n = false;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		size_t first = line.find_first_not_of(" \t\r");
		if (first == std::string::npos || line[first] == '#') {
			continue;
		}
		std::istringstream fields(line);
		if (!have_n) {
			std::string key;
			int n = 0;
			if (!(fields >> key >> n) || key != "n") {
				throw ParseError("line " + std::to_string(lineno) +
				                 ": expected header 'n <N>'");
			}
			std::string rest;
			if (fields >> rest) {
				throw ParseError("line " + std::to_string(lineno) +
				                 ": trailing data after header");
			}
			t.n = n;
			have_n = true;
			continue;
		}
		Placement p;
		if (!(fields >> p.row >> p.col >> p.size)) {
			throw ParseError("line " + std::to_string(lineno) +
			                 ": expected '<row> <col> <size>'");
		}
		std::string rest;
		if (fields >> rest) {
			throw ParseError("line " + std::to_string(lineno) +
			                 ": trailing data after placement");
		}
		t.placements.push_back(p);
	}
	if (!have_n) {
		throw ParseError("missing 'n <N>' header");
	}
	return t;
}

Tiling read_tiling(const std::string& text) {
	Tiling t = parse_tiling(text);
	require_valid(t);
	return t;
}

std::string write_tiling(const Tiling& t) {
	require_valid(t);
	std::vector<Placement> sorted = t.placements;
	std::sort(sorted.begin(), sorted.end());
	std::string out = "n " + std::to_string(t.n) + "\n";
	for (const Placement& p : sorted) {
		out += std::to_string(p.row) + " " + std::to_string(p.col) + " " +
		       std::to_string(p.size) + "\n";
	}
	return out;
}

}  // namespace quadratura
