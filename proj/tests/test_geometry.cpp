#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "quadratura/errors.hpp"
#include "quadratura/geometry.hpp"
#include "quadratura/solver.hpp"

using namespace quadratura;

namespace {

bool has_violation(const ValidationReport& report, ViolationKind kind) {
	return std::any_of(report.violations.begin(), report.violations.end(),
	                   [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("validate accepts the classical 13x13 dissection") {
	CHECK(validate(fixtures::patch_quilt_13()).ok);
}

TEST_CASE("validate accepts the four-unit tiling of n=2") {
	CHECK(validate(fixtures::four_units()).ok);
}

TEST_CASE("validate rejects the full-size square") {
	Tiling t{2, {{1, 1, 2}}};
	ValidationReport report = validate(t);
	CHECK_FALSE(report.ok);
	CHECK(has_violation(report, ViolationKind::SizeTooLarge));
}

TEST_CASE("validate reports gaps") {
	Tiling t{3, {{1, 1, 2}, {1, 3, 1}}};
	ValidationReport report = validate(t);
	CHECK_FALSE(report.ok);
	CHECK(has_violation(report, ViolationKind::Gap));
}

TEST_CASE("validate reports overlaps and out-of-bounds placements") {
	ValidationReport overlap = validate(Tiling{3, {{1, 1, 2}, {2, 2, 2}}});
	CHECK(has_violation(overlap, ViolationKind::Overlap));

	ValidationReport oob = validate(Tiling{4, {{3, 3, 3}}});
	CHECK(has_violation(oob, ViolationKind::OutOfBounds));

	ValidationReport tiny = validate(Tiling{3, {{1, 1, 0}}});
	CHECK(has_violation(tiny, ViolationKind::SizeTooSmall));
}

TEST_CASE("side lengths below 2 are rejected everywhere") {
	CHECK_THROWS_AS(validate(Tiling{1, {}}), InvalidParameter);
	CHECK_THROWS_AS(validate(Tiling{0, {}}), InvalidParameter);
}

TEST_CASE("multiset of the 13x13 dissection") {
	SizeMultiset ms = multiset(fixtures::patch_quilt_13());
	CHECK(ms == SizeMultiset{{1, 2}, {2, 3}, {3, 2}, {4, 1}, {6, 2}, {7, 1}});
	CHECK(format_multiset(ms) == "1^2 2^3 3^2 4^1 6^2 7^1");
}

TEST_CASE("multiset of small tilings") {
	CHECK(multiset(fixtures::four_units()) == SizeMultiset{{1, 4}});
	CHECK(multiset(scale(fixtures::four_units(), 3)) == SizeMultiset{{3, 4}});
}

TEST_CASE("scale maps the four-unit tiling to four 15x15 squares") {
	Tiling t = scale(fixtures::four_units(), 15);
	CHECK(t.n == 30);
	CHECK(t.placements.size() == 4);
	CHECK(validate(t).ok);
	CHECK(multiset(t) == SizeMultiset{{15, 4}});
}

TEST_CASE("scale preserves validity and placement count") {
	for (const Tiling& t : {fixtures::patch_quilt_13(), fixtures::three_by_three()}) {
		Tiling doubled = scale(t, 2);
		CHECK(validate(doubled).ok);
		CHECK(doubled.placements.size() == t.placements.size());
	}
}

TEST_CASE("scaled 13x13 dissection has the entrywise-scaled multiset") {
	Tiling doubled = scale(fixtures::patch_quilt_13(), 2);
	CHECK(doubled.n == 26);
	CHECK(multiset(doubled) ==
	      SizeMultiset{{2, 2}, {4, 3}, {6, 2}, {8, 1}, {12, 2}, {14, 1}});
}

TEST_CASE("canonical_form is idempotent and constant on the dihedral orbit") {
	for (const Tiling& t : {fixtures::patch_quilt_13(), fixtures::three_by_three()}) {
		Tiling canon = canonical_form(t);
		CHECK(canonical_form(canon) == canon);
		for (const Tiling& image : dihedral_images(t)) {
			CHECK(canonical_form(image) == canon);
		}
	}
}

TEST_CASE("canonical_form identifies mirror and rotation images") {
	const Tiling t = fixtures::patch_quilt_13();
	const std::vector<Tiling> images = dihedral_images(t);
	// images[4] is the horizontal mirror, images[1] the 90-degree rotation.
	CHECK(validate(images[4]).ok);
	CHECK(validate(images[1]).ok);
	CHECK(canonical_form(images[4]) == canonical_form(t));
	CHECK(canonical_form(images[1]) == canonical_form(t));
}

TEST_CASE("render_ascii matches the digit table of the 13x13 dissection") {
	std::string grid = render_ascii(fixtures::patch_quilt_13());
	std::vector<std::string> lines;
	std::string line;
	for (char ch : grid) {
		if (ch == '\n') {
			lines.push_back(line);
			line.clear();
		} else {
			line += ch;
		}
	}
	REQUIRE(lines.size() == 13);
	CHECK(lines[0] == "6 6 6 6 6 6 7 7 7 7 7 7 7");
	CHECK(lines[6] == "2 2 3 3 3 1 7 7 7 7 7 7 7");
	CHECK(lines[9] == "2 2 1 4 4 4 4 6 6 6 6 6 6");
	CHECK(lines[12] == "3 3 3 4 4 4 4 6 6 6 6 6 6");
}

TEST_CASE("render_ascii on tiny boards") {
	CHECK(render_ascii(fixtures::four_units()) == "1 1\n1 1\n");
	Tiling t{3, {{1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 1, 1}, {3, 1, 1}, {2, 2, 2}}};
	CHECK(render_ascii(t) == "1 1 1\n1 2 2\n1 2 2\n");
}

TEST_CASE("render_ascii uses fixed-width columns for two-digit sizes") {
	Tiling t = scale(fixtures::four_units(), 15);
	std::string grid = render_ascii(t);
	CHECK(grid.substr(0, 5) == "15 15");
}

TEST_CASE("read_tiling parses the four-unit file") {
	Tiling t = read_tiling("n 2\n1 1 1\n1 2 1\n2 1 1\n2 2 1\n");
	CHECK(t == fixtures::four_units());
}

TEST_CASE("read_tiling rejects oversized squares with InvalidTiling") {
	CHECK_THROWS_AS(read_tiling("n 3\n1 1 3\n"), InvalidTiling);
}

TEST_CASE("read_tiling reports parse errors with line numbers") {
	try {
		read_tiling("# comment\nm 2\n");
		FAIL("expected ParseError");
	} catch (const ParseError& e) {
		CHECK(std::string(e.what()).find("line 2") != std::string::npos);
	}
	CHECK_THROWS_AS(read_tiling("n 2\n1 1\n"), ParseError);
	CHECK_THROWS_AS(read_tiling(""), ParseError);
}

TEST_CASE("write/read round-trip is bit-exact on canonical files") {
	const std::string file = write_tiling(fixtures::patch_quilt_13());
	CHECK(write_tiling(read_tiling(file)) == file);
	// Comments and unsorted placements survive a read.
	Tiling t = read_tiling("# quilt\nn 2\n2 2 1\n1 1 1\n2 1 1\n1 2 1\n");
	CHECK(multiset(t) == SizeMultiset{{1, 4}});
}

TEST_CASE("geometry invariants over all tilings of the 4x4 square") {
	int count = 0;
	enumerate_all_tilings(4, [&](const Tiling& t) {
		++count;
		REQUIRE(validate(t).ok);
		long long area = 0;
		for (const SizeCount& sc : multiset(t)) {
			area += static_cast<long long>(sc.count) * sc.size * sc.size;
		}
		REQUIRE(area == 16);
		if (count % 7 == 0) {  // spot checks on a slice
			Tiling canon = canonical_form(t);
			for (const Tiling& image : dihedral_images(t)) {
				REQUIRE(canonical_form(image) == canon);
			}
			Tiling doubled = scale(t, 2);
			REQUIRE(validate(doubled).ok);
			REQUIRE(doubled.placements.size() == t.placements.size());
			const std::string file = write_tiling(t);
			REQUIRE(write_tiling(read_tiling(file)) == file);
		}
	});
	// 39 proper square tilings of the 4x4 grid (all 40 minus the full square).
	CHECK(count == 39);
}
