#include "quadratura/network.hpp"

#include <algorithm>
#include <sstream>

#include "quadratura/errors.hpp"

namespace quadratura {

namespace {

struct Segment {
	int height;
	int x1;
	int x2;
	int square;  // placement index, -1 for the outer sides
	bool is_top;
};

}  // namespace

Network extract_network(const Tiling& t) {
	require_valid(t);
	const int n = t.n;

	std::vector<Segment> segments;
	segments.push_back({n, 0, n, -1, false});  // outer top side
	segments.push_back({0, 0, n, -1, false});  // outer bottom side
	for (int idx = 0; idx < static_cast<int>(t.placements.size()); ++idx) {
		const Placement& p = t.placements[idx];
		const int y_top = n - p.row + 1;
		const int y_bot = y_top - p.size;
		segments.push_back({y_top, p.col - 1, p.col - 1 + p.size, idx, true});
		segments.push_back({y_bot, p.col - 1, p.col - 1 + p.size, idx, false});
	}

	// Merge collinear segments whose x-intervals overlap or touch.
	std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
		if (a.height != b.height) {
			return a.height > b.height;
		}
		return a.x1 < b.x1;
	});

	Network net;
	std::vector<std::pair<int, int>> edge_ends(t.placements.size(), {-1, -1});  // from, to
	size_t k = 0;
	while (k < segments.size()) {
		Dissector d;
		d.id = static_cast<int>(net.vertices.size());
		d.height = segments[k].height;
		int x1 = segments[k].x1;
		int x2 = segments[k].x2;
		auto attach = [&](const Segment& s) {
			if (s.square >= 0) {
				if (s.is_top) {
					edge_ends[s.square].first = d.id;
				} else {
					edge_ends[s.square].second = d.id;
				}
			}
		};
		attach(segments[k]);
		++k;
		while (k < segments.size() && segments[k].height == d.height &&
		       segments[k].x1 <= x2) {
			x2 = std::max(x2, segments[k].x2);
			attach(segments[k]);
			++k;
		}
		d.span.push_back({x1, x2});
		// Collapse a dissector split into several touching runs is handled
		// above; disjoint runs at the same height stay separate vertices.
		net.vertices.push_back(std::move(d));
	}

	for (int idx = 0; idx < static_cast<int>(t.placements.size()); ++idx) {
		net.edges.push_back({idx, edge_ends[idx].first, edge_ends[idx].second});
	}
	net.positive_pole = 0;
	net.negative_pole = static_cast<int>(net.vertices.size()) - 1;
	return net;
}

LinearSystem kirchhoff_current_system(const Network& net) {
	LinearSystem sys;
	sys.variable_count = static_cast<int>(net.edges.size());
	for (const Dissector& d : net.vertices) {
		if (d.id == net.positive_pole || d.id == net.negative_pole) {
			continue;
		}
		LinearRow row;
		row.label = "current_v" + std::to_string(d.id);
		row.rhs = 0;
		for (const NetworkEdge& e : net.edges) {
			if (e.to == d.id) {
				row.coeffs[e.square_index] += 1;
			}
			if (e.from == d.id) {
				row.coeffs[e.square_index] -= 1;
			}
		}
		std::erase_if(row.coeffs, [](const auto& kv) { return kv.second == 0; });
		sys.rows.push_back(std::move(row));
	}
	return sys;
}

LinearSystem kirchhoff_voltage_system(const Network& net) {
	const int num_edges = static_cast<int>(net.edges.size());
	const int num_vertices = static_cast<int>(net.vertices.size());
	LinearSystem sys;
	sys.variable_count = num_edges + num_vertices;
	for (const NetworkEdge& e : net.edges) {
		LinearRow row;
		row.label = "voltage_e" + std::to_string(e.square_index);
		row.rhs = 0;
		row.coeffs[num_edges + e.from] += 1;
		row.coeffs[num_edges + e.to] -= 1;
		row.coeffs[e.square_index] -= 1;
		std::erase_if(row.coeffs, [](const auto& kv) { return kv.second == 0; });
		sys.rows.push_back(std::move(row));
	}
	LinearRow ground;
	ground.label = "ground";
	ground.rhs = 0;
	ground.coeffs[num_edges + net.negative_pole] = 1;
	sys.rows.push_back(std::move(ground));
	return sys;
}

namespace {

// Nullspace basis of the homogeneous system by exact Gauss-Jordan
// elimination. Returns one vector per free variable.
std::vector<std::vector<Rational>> nullspace_basis(const LinearSystem& sys) {
	const int nvars = sys.variable_count;
	std::vector<std::vector<Rational>> mat;
	for (const LinearRow& row : sys.rows) {
		std::vector<Rational> dense(nvars, Rational(0));
		for (const auto& [idx, coeff] : row.coeffs) {
			dense[idx] = coeff;
		}
		mat.push_back(std::move(dense));
	}

	std::vector<int> pivot_col;
	int rank = 0;
	for (int col = 0; col < nvars && rank < static_cast<int>(mat.size()); ++col) {
		// Pivot with the smallest representation to keep intermediates small.
		int pivot = -1;
		for (int r = rank; r < static_cast<int>(mat.size()); ++r) {
			if (mat[r][col] == 0) {
				continue;
			}
			if (pivot < 0 ||
			    abs(numerator(mat[r][col])) * denominator(mat[pivot][col]) <
			        abs(numerator(mat[pivot][col])) * denominator(mat[r][col])) {
				pivot = r;
			}
		}
		if (pivot < 0) {
			continue;
		}
		std::swap(mat[rank], mat[pivot]);
		const Rational inv = Rational(1) / mat[rank][col];
		for (int c = col; c < nvars; ++c) {
			mat[rank][c] *= inv;
		}
		for (int r = 0; r < static_cast<int>(mat.size()); ++r) {
			if (r != rank && mat[r][col] != 0) {
				const Rational factor = mat[r][col];
				for (int c = col; c < nvars; ++c) {
					mat[r][c] -= factor * mat[rank][c];
				}
			}
		}
		pivot_col.push_back(col);
		++rank;
	}

	std::vector<bool> is_pivot(nvars, false);
	for (int col : pivot_col) {
		is_pivot[col] = true;
	}
	std::vector<std::vector<Rational>> basis;
	for (int free = 0; free < nvars; ++free) {
		if (is_pivot[free]) {
			continue;
		}
		std::vector<Rational> vec(nvars, Rational(0));
		vec[free] = 1;
		for (int r = 0; r < rank; ++r) {
			vec[pivot_col[r]] = -mat[r][free];
		}
		basis.push_back(std::move(vec));
	}
	return basis;
}

}  // namespace

SizeSolution solve_sizes(const Network& net) {
	const int num_edges = static_cast<int>(net.edges.size());
	LinearSystem combined = kirchhoff_voltage_system(net);
	LinearSystem current = kirchhoff_current_system(net);
	for (LinearRow& row : current.rows) {
		combined.rows.push_back(std::move(row));
	}

	std::vector<std::vector<Rational>> basis = nullspace_basis(combined);
	SizeSolution solution;
	solution.scale_dimension = static_cast<int>(basis.size());
	if (solution.scale_dimension != 1) {
		throw DegenerateSystem("combined Kirchhoff system has nullspace dimension " +
		                       std::to_string(solution.scale_dimension) +
		                       ", expected 1");
	}

	std::vector<Rational> edge_values(basis[0].begin(), basis[0].begin() + num_edges);
	// Minimal integer solution: clear denominators, reduce by the common
	// factor, and orient positive.
	BigInt denom_lcm = 1;
	for (const Rational& v : edge_values) {
		denom_lcm = lcm(denom_lcm, denominator(v));
	}
	BigInt numer_gcd = 0;
	std::vector<BigInt> scaled;
	for (const Rational& v : edge_values) {
		BigInt value = numerator(v) * (denom_lcm / denominator(v));
		numer_gcd = gcd(numer_gcd, value);
		scaled.push_back(std::move(value));
	}
	if (numer_gcd == 0) {
		throw DegenerateSystem("nullspace vector vanishes on all edges");
	}
	BigInt sum = 0;
	for (const BigInt& v : scaled) {
		sum += v;
	}
	const bool flip = sum < 0;
	for (BigInt& v : scaled) {
		v /= numer_gcd;
		if (flip) {
			v = -v;
		}
		if (v <= 0) {
			throw DegenerateSystem("minimal integer solution is not positive");
		}
		solution.sizes.push_back(v.convert_to<long long>());
	}
	return solution;
}

LinearSystem layout_equations(const Tiling& t) {
	require_valid(t);
	const int n = t.n;
	LinearSystem sys;
	sys.variable_count = static_cast<int>(t.placements.size());

	std::vector<std::vector<int>> seen;  // signatures of emitted rows
	auto emit = [&](const std::string& label, std::vector<int> vars) {
		std::sort(vars.begin(), vars.end());
		if (std::find(seen.begin(), seen.end(), vars) != seen.end()) {
			return;
		}
		LinearRow row;
		row.label = label;
		row.rhs = n;
		for (int v : vars) {
			row.coeffs[v] = 1;
		}
		seen.push_back(std::move(vars));
		sys.rows.push_back(std::move(row));
	};

	for (int j = 1; j <= n; ++j) {
		std::vector<int> vars;
		for (int idx = 0; idx < static_cast<int>(t.placements.size()); ++idx) {
			const Placement& p = t.placements[idx];
			if (p.col <= j && j <= p.col + p.size - 1) {
				vars.push_back(idx);
			}
		}
		emit("col_" + std::to_string(j), std::move(vars));
	}
	for (int i = 1; i <= n; ++i) {
		std::vector<int> vars;
		for (int idx = 0; idx < static_cast<int>(t.placements.size()); ++idx) {
			const Placement& p = t.placements[idx];
			if (p.row <= i && i <= p.row + p.size - 1) {
				vars.push_back(idx);
			}
		}
		emit("row_" + std::to_string(i), std::move(vars));
	}
	return sys;
}

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& values) {
	for (const LinearRow& row : sys.rows) {
		Rational lhs = 0;
		for (const auto& [idx, coeff] : row.coeffs) {
			lhs += coeff * values.at(idx);
		}
		if (lhs != row.rhs) {
			return false;
		}
	}
	return true;
}

bool recover_and_check(const Tiling& t) {
	const Network net = extract_network(t);
	const SizeSolution solution = solve_sizes(net);
	// Exact proportionality between the recovered and the actual sizes.
	const long long a0 = t.placements.at(0).size;
	const long long s0 = solution.sizes.at(0);
	for (size_t idx = 0; idx < t.placements.size(); ++idx) {
		const long long a = t.placements[idx].size;
		const long long s = solution.sizes[idx];
		if (a * s0 != s * a0) {
			return false;
		}
	}
	std::vector<Rational> actual;
	actual.reserve(t.placements.size());
	for (const Placement& p : t.placements) {
		actual.push_back(Rational(p.size));
	}
	return satisfies(layout_equations(t), actual);
}

std::string dump_network(const Network& net) {
	std::ostringstream out;
	for (const Dissector& d : net.vertices) {
		out << "v " << d.id << " " << d.height << "\n";
	}
	for (const NetworkEdge& e : net.edges) {
		out << "e " << e.square_index << " " << e.from << " " << e.to << "\n";
	}
	out << "poles " << net.positive_pole << " " << net.negative_pole << "\n";
	return out.str();
}

}  // namespace quadratura
