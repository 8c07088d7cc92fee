#include "quadratura/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quadratura/bounds.hpp"
#include "quadratura/errors.hpp"

namespace quadratura {

std::string VarId::name() const {
	if (kind == VarKind::X) {
		return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(h);
	}
	return "y_" + std::to_string(h);
}

int IlpModel::var_index(const VarId& id) const {
	// Declaration order is deterministic, so a binary search over a sorted
	// copy would work too; linear maps are built where hot paths need them.
	for (int k = 0; k < static_cast<int>(variables.size()); ++k) {
		if (variables[k].id == id) {
			return k;
		}
	}
	return -1;
}

namespace {

bool boundary_fixed(int n, int i, int j, int h) {
	return i + h > n + 1 || j + h > n + 1;
}

}  // namespace

IlpModel build_base_model(int n, int cap) {
	if (n < 2 || n > cap) {
		throw InvalidParameter("n must satisfy 2 <= n <= " + std::to_string(cap) +
		                       ", got " + std::to_string(n));
	}
	IlpModel m;
	m.n = n;
	for (int i = 1; i <= n; ++i) {
		for (int j = 1; j <= n; ++j) {
			for (int h = 1; h <= n - 1; ++h) {
				m.variables.push_back({VarId::x(i, j, h), 0, 1, true});
			}
		}
	}

	// Each cell (i,j) is covered by exactly one chosen square: a size-h
	// square with corner (i-a, j-b) covers (i,j) iff 0 <= a,b <= h-1 and
	// the corner stays on the grid.
	for (int i = 1; i <= n; ++i) {
		for (int j = 1; j <= n; ++j) {
			LinearConstraint c;
			c.label = "packing_" + std::to_string(i) + "_" + std::to_string(j);
			c.rel = Relation::Eq;
			c.rhs = 1;
			for (int h = 1; h <= n - 1; ++h) {
				for (int a = 0; a <= std::min(i - 1, h - 1); ++a) {
					for (int b = 0; b <= std::min(j - 1, h - 1); ++b) {
						c.terms.push_back({VarId::x(i - a, j - b, h), 1});
					}
				}
			}
			m.constraints.push_back(std::move(c));
		}
	}

	for (int i = 1; i <= n; ++i) {
		for (int j = 1; j <= n; ++j) {
			for (int h = 1; h <= n - 1; ++h) {
				if (boundary_fixed(n, i, j, h)) {
					LinearConstraint c;
					c.label = "boundary_" + std::to_string(i) + "_" + std::to_string(j) +
					          "_" + std::to_string(h);
					c.rel = Relation::Eq;
					c.rhs = 0;
					c.terms.push_back({VarId::x(i, j, h), 1});
					m.constraints.push_back(std::move(c));
				}
			}
		}
	}

	for (const VarDecl& v : m.variables) {
		m.objective.push_back({v.id, 1});
	}
	return m;
}

IlpModel add_y_link(IlpModel m) {
	if (m.has_y) {
		throw DuplicateVariant("model already has y variables");
	}
	const int n = m.n;
	const long long y_upper = static_cast<long long>(n) * n;
	for (int h = 1; h <= n - 1; ++h) {
		m.variables.push_back({VarId::y(h), 0, y_upper, false});
		LinearConstraint c;
		c.label = "ylink_" + std::to_string(h);
		c.rel = Relation::Eq;
		c.rhs = 0;
		for (int i = 1; i <= n; ++i) {
			for (int j = 1; j <= n; ++j) {
				c.terms.push_back({VarId::x(i, j, h), 1});
			}
		}
		c.terms.push_back({VarId::y(h), -1});
		m.constraints.push_back(std::move(c));
	}
	m.has_y = true;
	return m;
}

IlpModel force_count(IlpModel m, int h, int v) {
	if (!m.has_y) {
		throw MissingYLink("force_count requires y variables; call add_y_link first");
	}
	if (h < 1 || h > m.n - 1 || v < 0) {
		throw InvalidParameter("force_count requires 1 <= h <= n-1 and v >= 0");
	}
	LinearConstraint c;
	c.label = "force_" + std::to_string(h);
	c.rel = Relation::Eq;
	c.rhs = v;
	c.terms.push_back({VarId::y(h), 1});
	m.constraints.push_back(std::move(c));
	return m;
}

IlpModel add_gcd_one(IlpModel m) {
	if (!m.has_y) {
		throw MissingYLink("add_gcd_one requires y variables; call add_y_link first");
	}
	for (int p = 2; p <= m.n - 1; ++p) {
		if (!is_prime(p)) {
			continue;
		}
		LinearConstraint c;
		c.label = "gcd_" + std::to_string(p);
		c.rel = Relation::Ge;
		c.rhs = 1;
		for (int h = 1; h <= m.n - 1; ++h) {
			if (h % p != 0) {
				c.terms.push_back({VarId::y(h), 1});
			}
		}
		m.constraints.push_back(std::move(c));
	}
	return m;
}

namespace {

// Variables whose upper bound the exporter tightens to 0: every x fixed
// by a boundary constraint.
std::map<VarId, bool> fixed_to_zero(const IlpModel& m) {
	std::map<VarId, bool> fixed;
	for (const LinearConstraint& c : m.constraints) {
		if (c.label.rfind("boundary_", 0) == 0 && c.terms.size() == 1 && c.rhs == 0) {
			fixed[c.terms[0].first] = true;
		}
	}
	return fixed;
}

std::string lp_terms(const std::vector<std::pair<VarId, long long>>& terms) {
	std::string out;
	bool first = true;
	for (const auto& [id, coeff] : terms) {
		if (first) {
			if (coeff < 0) {
				out += "- ";
			}
			first = false;
		} else {
			out += coeff < 0 ? " - " : " + ";
		}
		long long mag = coeff < 0 ? -coeff : coeff;
		if (mag != 1) {
			out += std::to_string(mag) + " ";
		}
		out += id.name();
	}
	return out;
}

std::string export_lp(const IlpModel& m) {
	std::ostringstream out;
	out << "\\ squaring-the-square model, n = " << m.n << "\n";
	out << "Minimize\n obj: " << lp_terms(m.objective) << "\n";
	out << "Subject To\n";
	for (const LinearConstraint& c : m.constraints) {
		const char* rel = c.rel == Relation::Eq ? "=" : (c.rel == Relation::Le ? "<=" : ">=");
		out << " " << c.label << ": " << lp_terms(c.terms) << " " << rel << " " << c.rhs
		    << "\n";
	}
	auto fixed = fixed_to_zero(m);
	out << "Bounds\n";
	for (const VarDecl& v : m.variables) {
		if (fixed.count(v.id)) {
			out << " " << v.id.name() << " <= 0\n";
		} else if (!v.binary) {
			out << " " << v.lower << " <= " << v.id.name() << " <= " << v.upper << "\n";
		}
	}
	bool any_bin = false, any_int = false;
	for (const VarDecl& v : m.variables) {
		any_bin |= v.binary;
		any_int |= !v.binary;
	}
	if (any_bin) {
		out << "Binaries\n";
		for (const VarDecl& v : m.variables) {
			if (v.binary) {
				out << " " << v.id.name() << "\n";
			}
		}
	}
	if (any_int) {
		out << "Generals\n";
		for (const VarDecl& v : m.variables) {
			if (!v.binary) {
				out << " " << v.id.name() << "\n";
			}
		}
	}
	out << "End\n";
	return out.str();
}

// Fixed-format MPS field layout: columns 2-3, 5-12, 15-22, 25-36, 40-47, 50-61.
std::string mps_line(const std::string& f1,
                     const std::string& f2,
                     const std::string& f3 = "",
                     const std::string& f4 = "",
                     const std::string& f5 = "",
                     const std::string& f6 = "") {
	std::string line;
	auto put = [&line](size_t col, const std::string& s) {
		if (s.empty()) {
			return;
		}
		if (line.size() + 1 > col) {
			line += ' ';
		} else {
			line.append(col - 1 - line.size(), ' ');
		}
		line += s;
	};
	put(2, f1);
	put(5, f2);
	put(15, f3);
	put(25, f4);
	put(40, f5);
	put(50, f6);
	return line + "\n";
}

std::string export_mps(const IlpModel& m) {
	std::ostringstream out;
	out << "NAME          SQUARE_" << m.n << "\n";
	out << "ROWS\n";
	out << mps_line("N", "obj");
	for (const LinearConstraint& c : m.constraints) {
		const char* rel = c.rel == Relation::Eq ? "E" : (c.rel == Relation::Le ? "L" : "G");
		out << mps_line(rel, c.label);
	}

	// Column-major coefficients in declaration order.
	std::map<VarId, std::vector<std::pair<std::string, long long>>> cols;
	for (const auto& [id, coeff] : m.objective) {
		cols[id].push_back({"obj", coeff});
	}
	for (const LinearConstraint& c : m.constraints) {
		for (const auto& [id, coeff] : c.terms) {
			cols[id].push_back({c.label, coeff});
		}
	}
	out << "COLUMNS\n";
	out << mps_line("", "MARKER", "", "'MARKER'", "", "'INTORG'");
	for (const VarDecl& v : m.variables) {
		auto it = cols.find(v.id);
		if (it == cols.end()) {
			continue;
		}
		for (const auto& [row, coeff] : it->second) {
			out << mps_line("", v.id.name(), row, std::to_string(coeff));
		}
	}
	out << mps_line("", "MARKER", "", "'MARKER'", "", "'INTEND'");

	out << "RHS\n";
	for (const LinearConstraint& c : m.constraints) {
		if (c.rhs != 0) {
			out << mps_line("", "rhs", c.label, std::to_string(c.rhs));
		}
	}

	auto fixed = fixed_to_zero(m);
	out << "BOUNDS\n";
	for (const VarDecl& v : m.variables) {
		if (fixed.count(v.id)) {
			out << mps_line("FX", "bnd", v.id.name(), "0");
		} else if (v.binary) {
			out << mps_line("BV", "bnd", v.id.name());
		} else {
			out << mps_line("LO", "bnd", v.id.name(), std::to_string(v.lower));
			out << mps_line("UP", "bnd", v.id.name(), std::to_string(v.upper));
		}
	}
	out << "ENDATA\n";
	return out.str();
}

VarId parse_var_name(const std::string& name, int lineno) {
	std::vector<long long> nums;
	VarKind kind;
	if (name.rfind("x_", 0) == 0) {
		kind = VarKind::X;
	} else if (name.rfind("y_", 0) == 0) {
		kind = VarKind::Y;
	} else {
		throw ParseError("line " + std::to_string(lineno) + ": unknown variable '" + name +
		                 "'");
	}
	std::string rest = name.substr(2);
	std::istringstream fields(rest);
	std::string part;
	while (std::getline(fields, part, '_')) {
		try {
			nums.push_back(std::stoll(part));
		} catch (const std::exception&) {
			throw ParseError("line " + std::to_string(lineno) + ": bad variable '" + name +
			                 "'");
		}
	}
	if (kind == VarKind::X && nums.size() == 3) {
		return VarId::x(static_cast<int>(nums[0]), static_cast<int>(nums[1]),
		                static_cast<int>(nums[2]));
	}
	if (kind == VarKind::Y && nums.size() == 1) {
		return VarId::y(static_cast<int>(nums[0]));
	}
	throw ParseError("line " + std::to_string(lineno) + ": bad variable '" + name + "'");
}

}  // namespace

std::string export_model(const IlpModel& m, ExportFormat format) {
	return format == ExportFormat::LP ? export_lp(m) : export_mps(m);
}

Assignment parse_assignment(const std::string& text) {
	Assignment out;
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		size_t first = line.find_first_not_of(" \t\r");
		if (first == std::string::npos || line[first] == '#') {
			continue;
		}
		std::istringstream fields(line);
		std::string name;
		double value = 0;
		if (!(fields >> name >> value)) {
			throw ParseError("line " + std::to_string(lineno) +
			                 ": expected '<varname> <value>'");
		}
		long long rounded = static_cast<long long>(value < 0 ? value - 0.5 : value + 0.5);
		out[parse_var_name(name, lineno)] = rounded;
	}
	return out;
}

namespace {

long long assigned(const Assignment& a, const VarId& id) {
	auto it = a.find(id);
	return it == a.end() ? 0 : it->second;
}

}  // namespace

Tiling decode_solution(const IlpModel& m, const Assignment& assignment) {
	for (const VarDecl& v : m.variables) {
		long long value = assigned(assignment, v.id);
		if (value < v.lower || value > v.upper) {
			throw InfeasibleAssignment("variable " + v.id.name() + " = " +
			                           std::to_string(value) + " violates its bounds");
		}
	}
	for (const LinearConstraint& c : m.constraints) {
		long long lhs = 0;
		for (const auto& [id, coeff] : c.terms) {
			lhs += coeff * assigned(assignment, id);
		}
		bool ok = c.rel == Relation::Eq   ? lhs == c.rhs
		          : c.rel == Relation::Le ? lhs <= c.rhs
		                                  : lhs >= c.rhs;
		if (!ok) {
			throw InfeasibleAssignment("constraint " + c.label + " violated (lhs " +
			                           std::to_string(lhs) + ", rhs " +
			                           std::to_string(c.rhs) + ")");
		}
	}
	Tiling t;
	t.n = m.n;
	for (const VarDecl& v : m.variables) {
		if (v.id.kind == VarKind::X && assigned(assignment, v.id) == 1) {
			t.placements.push_back({v.id.i, v.id.j, v.id.h});
		}
	}
	require_valid(t);
	return t;
}

Assignment induced_assignment(const IlpModel& m, const Tiling& t) {
	require_valid(t);
	if (t.n != m.n) {
		throw InvalidParameter("tiling side " + std::to_string(t.n) +
		                       " does not match model side " + std::to_string(m.n));
	}
	Assignment a;
	for (const Placement& p : t.placements) {
		a[VarId::x(p.row, p.col, p.size)] = 1;
	}
	if (m.has_y) {
		for (int h = 1; h <= m.n - 1; ++h) {
			a[VarId::y(h)] = 0;
		}
		for (const SizeCount& sc : multiset(t)) {
			a[VarId::y(sc.size)] = sc.count;
		}
	}
	return a;
}

}  // namespace quadratura
