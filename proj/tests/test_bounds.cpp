#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "quadratura/bounds.hpp"
#include "quadratura/errors.hpp"

using namespace quadratura;

TEST_CASE("primality by trial division") {
	CHECK(is_prime(2));
	CHECK(is_prime(13));
	CHECK(is_prime(31));
	CHECK_FALSE(is_prime(1));
	CHECK_FALSE(is_prime(9));
	CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("conway_lower evaluates log2(p) for primes") {
	CHECK(conway_lower(2) == doctest::Approx(1.0).epsilon(1e-12));
	CHECK(conway_lower(13) == doctest::Approx(3.7004397181410922).epsilon(1e-9));
	const double c31 = conway_lower(31);
	CHECK(c31 == doctest::Approx(4.954196310386875).epsilon(1e-9));
	CHECK(static_cast<int>(std::ceil(c31)) == 5);
	CHECK_THROWS_AS(conway_lower(4), NotPrime);
	CHECK_THROWS_AS(conway_lower(1), NotPrime);
}

TEST_CASE("trustrum_upper evaluates 6*log2(3n-1)-10") {
	CHECK(trustrum_upper(13) == doctest::Approx(21.487565080661513).epsilon(1e-9));
	CHECK(trustrum_upper(31) == doctest::Approx(29.141371736342077).epsilon(1e-9));
	// Below the true optimum 4 for n=2; the bound is asymptotic.
	CHECK(trustrum_upper(2) == doctest::Approx(3.9315685693241744).epsilon(1e-9));
	CHECK_THROWS_AS(trustrum_upper(1), InvalidParameter);
}

TEST_CASE("mersenne_construction reproduces the known multisets") {
	Tiling r5 = mersenne_construction(5);
	CHECK(r5.n == 31);
	CHECK(r5.placements.size() == 15);
	CHECK(multiset(r5) == SizeMultiset{{1, 3}, {2, 3}, {4, 3}, {8, 3}, {15, 2}, {16, 1}});

	Tiling r2 = mersenne_construction(2);
	CHECK(r2.n == 3);
	CHECK(multiset(r2) == SizeMultiset{{1, 5}, {2, 1}});

	Tiling r3 = mersenne_construction(3);
	CHECK(r3.n == 7);
	CHECK(multiset(r3) == SizeMultiset{{1, 3}, {2, 3}, {3, 2}, {4, 1}});
}

TEST_CASE("mersenne_construction validates with 3r squares for r=2..10") {
	for (int r = 2; r <= 10; ++r) {
		Tiling t = mersenne_construction(r);
		CHECK(t.n == (1 << r) - 1);
		CHECK(static_cast<int>(t.placements.size()) == 3 * r);
		CHECK(validate(t).ok);
	}
	CHECK_THROWS_AS(mersenne_construction(1), InvalidParameter);
	CHECK_THROWS_AS(mersenne_construction(21), InvalidParameter);
}

TEST_CASE("divisor_upper scales the best solved prime divisor") {
	std::map<int, std::pair<int, Tiling>> solved;
	solved[2] = {4, fixtures::four_units()};
	auto [value30, witness30] = divisor_upper(30, solved);
	CHECK(value30 == 4);
	CHECK(witness30.n == 30);
	CHECK(multiset(witness30) == SizeMultiset{{15, 4}});

	solved.clear();
	solved[3] = {6, fixtures::three_by_three()};
	solved[11] = {22, greedy_construction(11)};
	auto [value33, witness33] = divisor_upper(33, solved);
	CHECK(value33 == 6);
	CHECK(witness33.n == 33);
	CHECK(validate(witness33).ok);
	CHECK(witness33.placements.size() == 6);

	CHECK_THROWS_AS(divisor_upper(35, solved), MissingDivisorData);
}

TEST_CASE("greedy_construction uses 2n squares") {
	for (int n : {2, 5, 11}) {
		Tiling t = greedy_construction(n);
		CHECK(validate(t).ok);
		CHECK(static_cast<int>(t.placements.size()) == 2 * n);
	}
}

TEST_CASE("construction_upper picks the strongest available construction") {
	CHECK(construction_upper(31).placements.size() == 15);  // Mersenne
	CHECK(construction_upper(30).placements.size() == 4);   // scaled 2x2
	CHECK(construction_upper(11).placements.size() == 22);  // greedy fallback
	for (int n = 2; n <= 24; ++n) {
		CHECK(validate(construction_upper(n)).ok);
	}
}

TEST_CASE("bound_report is internally consistent") {
	BoundReport report = bound_report(31);
	CHECK(report.lower_int == 5);
	CHECK(report.upper_construction == 15);
	REQUIRE(report.witness.has_value());
	CHECK(static_cast<int>(report.witness->placements.size()) == report.upper_construction);
	CHECK(report.lower_int <= report.upper_construction);
}
