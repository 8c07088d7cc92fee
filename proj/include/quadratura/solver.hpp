#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "quadratura/geometry.hpp"
#include "quadratura/model.hpp"

namespace quadratura {

enum class Variant { Base, ForceCount, GcdOne };

struct SolveOptions {
	Variant variant = Variant::Base;
	int force_size = 0;   // ForceCount: tile size h
	int force_value = 0;  // ForceCount: required count v
	std::optional<long long> incumbent_limit;  // stop once incumbent <= limit
	std::optional<long long> node_limit;
	std::optional<std::chrono::milliseconds> time_limit;
	int threads = 1;
};

struct OptResult {
	int optimum = 0;
	Tiling witness;
	long long nodes = 0;
	std::chrono::milliseconds elapsed{0};
	bool proven = false;  // false when a limit truncated the search
};

// Admissible completion bound: ceil(remaining_empty_cells / largest_allowed^2).
long long lower_bound(long long remaining_empty_cells, int largest_allowed);

// Exact minimization of the number of squares by depth-first
// branch-and-bound over placements. Deterministic at threads = 1.
OptResult solve_min_squares(int n, const SolveOptions& opts = {});

// Enumerates every tiling reaching exactly `target` squares under the
// options' variant and returns the set of their canonical forms.
// `target` must be the proven optimum for the enumeration to be the set
// of all optimal tilings.
std::set<Tiling> collect_optimal_tilings(int n, int target, const SolveOptions& opts = {});

// Miniature 0-1 branch-and-bound working directly on an IlpModel built
// by the model module. Cross-check engine; intended for n <= 6.
std::pair<long long, Assignment> solve_ilp_generic(const IlpModel& m,
                                                   const SolveOptions& opts = {});

// Calls fn once per complete tiling of the n x n square (n <= 7),
// enumerated by always filling the topmost-leftmost empty cell.
void enumerate_all_tilings(int n, const std::function<void(const Tiling&)>& fn);

struct OracleResult {
	int optimum = 0;
	std::set<Tiling> optimal_canonical;
};

// Exhaustive enumeration of all tilings for n <= 5; returns the exact
// minimum and the canonical forms of all optimal tilings.
OracleResult brute_force_oracle(int n);

}  // namespace quadratura
