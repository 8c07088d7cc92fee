#pragma once

#include <map>
#include <optional>
#include <utility>

#include "quadratura/geometry.hpp"

namespace quadratura {

bool is_prime(int n);

// Conway's lower bound log2(p) for primes p.
double conway_lower(int p);

// Trustrum's upper bound 6*log2(3n-1) - 10 for n >= 2. Asymptotic; it
// falls below the true optimum for very small n (e.g. n = 2).
double trustrum_upper(int n);

// Explicit tiling of the (2^r - 1)-square with exactly 3r squares:
// one 2^(r-1)-square, two (2^(r-1)-1)-squares, and a doubling staircase
// of triples 1^3 2^3 ... (2^(r-2))^3.
Tiling mersenne_construction(int r);

// Upper bound by enlarging a solved prime divisor's tiling: returns the
// best (value, scale(tiling_p, n/p)) over prime divisors p of n present
// in `solved`. Throws MissingDivisorData when a prime divisor of n has
// no entry.
std::pair<int, Tiling> divisor_upper(int n,
                                     const std::map<int, std::pair<int, Tiling>>& solved);

// Fallback construction with 2n squares: an (n-1)-square plus a column
// and a row of units.
Tiling greedy_construction(int n);

// Best construction available without search: Mersenne when n = 2^r - 1,
// otherwise the best scaled construction over prime divisors, otherwise
// the greedy fallback. Used to seed branch-and-bound incumbents.
Tiling construction_upper(int n);

struct BoundReport {
	int n = 0;
	double lower = 1.0;  // Conway, only meaningful when n is prime
	int lower_int = 1;
	double upper_trustrum = 0.0;
	int upper_construction = 0;
	std::optional<Tiling> witness;
};

BoundReport bound_report(int n);

}  // namespace quadratura
