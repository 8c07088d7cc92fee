#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "quadratura/geometry.hpp"

namespace quadratura {

// Exact fraction with arbitrary-precision integers, always reduced.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// A maximal union of collinear horizontal segments (square tops/bottoms)
// at one height, measured from the bottom edge. Spans are half-open-free
// x-intervals [a, b] that were merged when overlapping or touching.
struct Dissector {
	int id = 0;
	int height = 0;
	std::vector<std::pair<int, int>> span;
};

struct NetworkEdge {
	int square_index = 0;  // index into the source tiling's placements
	int from = 0;          // upper dissector
	int to = 0;            // lower dissector
};

struct Network {
	std::vector<Dissector> vertices;
	std::vector<NetworkEdge> edges;
	int positive_pole = 0;  // outer top side
	int negative_pole = 0;  // outer bottom side
};

struct LinearRow {
	std::map<int, Rational> coeffs;  // no zero entries
	Rational rhs;
	std::string label;
};

struct LinearSystem {
	std::vector<LinearRow> rows;
	int variable_count = 0;
};

// Vertices are the horizontal dissectors, edges the squares, directed
// from each square's upper dissector to its lower one.
Network extract_network(const Tiling& t);

// Current law: per non-pole vertex, incoming minus outgoing edge
// variables sum to zero. Variables are edge (= square) indices.
LinearSystem kirchhoff_current_system(const Network& net);

// Voltage law via node potentials: per edge, potential(from) -
// potential(to) - x_edge = 0, with the negative pole grounded.
// Variables 0..E-1 are the edges, E..E+V-1 the vertex potentials.
LinearSystem kirchhoff_voltage_system(const Network& net);

struct SizeSolution {
	std::vector<long long> sizes;  // per edge, positive, gcd 1
	int scale_dimension = 0;       // nullspace dimension, must be 1
};

// Solves the combined current + voltage system exactly and returns the
// unique minimal positive integer solution. Throws DegenerateSystem when
// the solution space is not one-dimensional.
SizeSolution solve_sizes(const Network& net);

// Per sweep line (each grid row and column), the distinct squares met by
// the line have sizes summing to n. Variables are placement indices;
// duplicate equations removed.
LinearSystem layout_equations(const Tiling& t);

// True iff the network solution is exactly proportional to the actual
// placement sizes and those sizes satisfy the layout equations.
bool recover_and_check(const Tiling& t);

// Exact residual check: every row of the system satisfied by `values`.
bool satisfies(const LinearSystem& sys, const std::vector<Rational>& values);

// Text dump: "v <id> <height>" lines, "e <square_index> <from> <to>"
// lines, then "poles <pos> <neg>".
std::string dump_network(const Network& net);

}  // namespace quadratura
