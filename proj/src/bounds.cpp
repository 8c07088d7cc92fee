#include "quadratura/bounds.hpp"

#include <cmath>
#include <string>

#include "quadratura/errors.hpp"

namespace quadratura {

namespace {

std::vector<int> prime_divisors(int n) {
	std::vector<int> out;
	int m = n;
	for (int p = 2; p * p <= m; ++p) {
		if (m % p == 0) {
			out.push_back(p);
			while (m % p == 0) {
				m /= p;
			}
		}
	}
	if (m > 1) {
		out.push_back(m);
	}
	return out;
}

// Fills a 2^j block at (top, left) that is missing its top-left cell
// with a staircase of square triples of sizes 2^(j-1), ..., 2, 1.
void fill_staircase(Tiling& t, int top, int left, int j) {
	for (; j >= 1; --j) {
		const int s = 1 << (j - 1);
		t.placements.push_back({top, left + s, s});
		t.placements.push_back({top + s, left, s});
		t.placements.push_back({top + s, left + s, s});
	}
}

}  // namespace

bool is_prime(int n) {
	if (n < 2) {
		return false;
	}
	for (int d = 2; d * d <= n; ++d) {
		if (n % d == 0) {
			return false;
		}
	}
	return true;
}

double conway_lower(int p) {
	if (!is_prime(p)) {
		throw NotPrime(std::to_string(p) + " is not prime");
	}
	return std::log2(static_cast<double>(p));
}

double trustrum_upper(int n) {
	if (n < 2) {
		throw InvalidParameter("n must be >= 2, got " + std::to_string(n));
	}
	return 6.0 * std::log2(3.0 * n - 1.0) - 10.0;
}

Tiling mersenne_construction(int r) {
	if (r < 2 || r > 20) {
		throw InvalidParameter("r must satisfy 2 <= r <= 20, got " + std::to_string(r));
	}
	const int s = 1 << (r - 1);
	const int n = 2 * s - 1;
	Tiling t;
	t.n = n;
	t.placements.push_back({1, 1, s});          // top-left 2^(r-1)
	t.placements.push_back({1, s + 1, s - 1});  // top-right 2^(r-1)-1
	t.placements.push_back({s + 1, 1, s - 1});  // bottom-left 2^(r-1)-1
	// Remaining region: the s x s block at (s, s) minus its top-left cell,
	// which the framing square already covers.
	fill_staircase(t, s, s, r - 1);
	require_valid(t);
	return t;
}

std::pair<int, Tiling> divisor_upper(int n,
                                     const std::map<int, std::pair<int, Tiling>>& solved) {
	if (n < 2) {
		throw InvalidParameter("n must be >= 2, got " + std::to_string(n));
	}
	int best = -1;
	Tiling witness;
	for (int p : prime_divisors(n)) {
		auto it = solved.find(p);
		if (it == solved.end()) {
			continue;
		}
		if (best < 0 || it->second.first < best) {
			best = it->second.first;
			witness = n == p ? it->second.second : scale(it->second.second, n / p);
		}
	}
	if (best < 0) {
		throw MissingDivisorData("no solved entry for any prime divisor of " +
		                         std::to_string(n));
	}
	return {best, witness};
}

Tiling greedy_construction(int n) {
	if (n < 2) {
		throw InvalidParameter("n must be >= 2, got " + std::to_string(n));
	}
	Tiling t;
	t.n = n;
	t.placements.push_back({1, 1, n - 1});
	for (int r = 1; r <= n - 1; ++r) {
		t.placements.push_back({r, n, 1});
	}
	for (int c = 1; c <= n; ++c) {
		t.placements.push_back({n, c, 1});
	}
	return t;
}

Tiling construction_upper(int n) {
	if (n < 2) {
		throw InvalidParameter("n must be >= 2, got " + std::to_string(n));
	}
	// n = 2^r - 1?
	for (int r = 2; r <= 20; ++r) {
		if ((1 << r) - 1 == n) {
			return mersenne_construction(r);
		}
	}
	Tiling best = greedy_construction(n);
	for (int p : prime_divisors(n)) {
		if (p == n) {
			continue;
		}
		Tiling sub = scale(construction_upper(p), n / p);
		if (sub.placements.size() < best.placements.size()) {
			best = sub;
		}
	}
	return best;
}

BoundReport bound_report(int n) {
	BoundReport report;
	report.n = n;
	report.upper_trustrum = trustrum_upper(n);
	if (is_prime(n)) {
		report.lower = conway_lower(n);
	} else {
		report.lower = 1.0;
	}
	report.lower_int = static_cast<int>(std::ceil(report.lower - 1e-9));
	Tiling witness = construction_upper(n);
	report.upper_construction = static_cast<int>(witness.placements.size());
	report.witness = std::move(witness);
	return report;
}

}  // namespace quadratura
