#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quadratura/geometry.hpp"

namespace quadratura {

enum class VarKind { X, Y };

// x_{i,j,h}: a size-h square with top-left corner at cell (i,j).
// y_h: number of used h x h squares.
struct VarId {
	VarKind kind = VarKind::X;
	int i = 0;
	int j = 0;
	int h = 0;

	static VarId x(int i, int j, int h) { return {VarKind::X, i, j, h}; }
	static VarId y(int h) { return {VarKind::Y, 0, 0, h}; }

	auto operator<=>(const VarId&) const = default;

	std::string name() const;  // "x_i_j_h" / "y_h"
};

enum class Relation { Eq, Le, Ge };

struct LinearConstraint {
	std::vector<std::pair<VarId, long long>> terms;  // no duplicates, nonzero coeffs
	Relation rel = Relation::Eq;
	long long rhs = 0;
	std::string label;
};

struct VarDecl {
	VarId id;
	long long lower = 0;
	long long upper = 1;
	bool binary = true;
};

struct IlpModel {
	int n = 0;
	std::vector<VarDecl> variables;  // declaration order drives export order
	std::vector<LinearConstraint> constraints;
	std::vector<std::pair<VarId, long long>> objective;  // minimize
	bool has_y = false;

	// Index of a declared variable; -1 when absent.
	int var_index(const VarId& id) const;
};

// The base 0-1 program: packing equality per cell, boundary fixings,
// objective minimizing the number of placed squares.
IlpModel build_base_model(int n, int cap = 64);

// Adds counting variables y_1..y_{n-1} and the link equalities
// sum_{i,j} x_{i,j,h} - y_h = 0.
IlpModel add_y_link(IlpModel m);

// Adds the equality y_h = v.
IlpModel force_count(IlpModel m, int h, int v);

// For every prime p <= n-1 adds sum_{p does not divide h} y_h >= 1.
IlpModel add_gcd_one(IlpModel m);

enum class ExportFormat { LP, MPS };

std::string export_model(const IlpModel& m, ExportFormat format);

using Assignment = std::map<VarId, long long>;

// Reads whitespace-separated "<varname> <value>" lines. '#' starts a
// comment. Variables missing from the text are treated as 0 downstream.
Assignment parse_assignment(const std::string& text);

// Checks the assignment against every constraint and variable bound,
// then turns the active x variables into a Tiling.
Tiling decode_solution(const IlpModel& m, const Assignment& assignment);

// The assignment induced by a tiling: x_{i,j,h} = 1 per placement,
// y_h = multiset counts when the model has them.
Assignment induced_assignment(const IlpModel& m, const Tiling& t);

}  // namespace quadratura
