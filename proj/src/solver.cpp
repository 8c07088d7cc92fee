#include "quadratura/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

#include "quadratura/bounds.hpp"
#include "quadratura/errors.hpp"

namespace quadratura {

long long lower_bound(long long remaining_empty_cells, int largest_allowed) {
	if (largest_allowed < 1) {
		throw InvalidParameter("largest_allowed must be >= 1");
	}
	if (remaining_empty_cells <= 0) {
		return 0;
	}
	const long long cap = static_cast<long long>(largest_allowed) * largest_allowed;
	return (remaining_empty_cells + cap - 1) / cap;
}

namespace {

constexpr int kMaxSolveSide = 40;
constexpr int kMaxEnumerateSide = 7;

using Clock = std::chrono::steady_clock;

struct SharedState {
	int n = 0;
	Variant variant = Variant::Base;
	int force_size = 0;
	int force_value = 0;

	bool collect = false;
	int target = 0;

	std::optional<long long> node_limit;
	std::optional<long long> incumbent_limit;
	bool has_deadline = false;
	Clock::time_point deadline;

	std::mutex mu;
	std::atomic<int> best{INT_MAX};
	std::vector<Placement> best_placements;
	std::set<Tiling> collected;
	std::atomic<bool> stop{false};       // incumbent_limit satisfied
	std::atomic<bool> truncated{false};  // node/time limit hit
	std::atomic<long long> nodes_committed{0};
};

// Depth-first search over placements. The occupancy is one bitmask per
// row; squares are always placed at the topmost-leftmost empty cell, so
// every cell before the cursor (row-major) is filled and future squares
// start at or below the cursor row.
class Worker {
   public:
	explicit Worker(SharedState& sh) : sh_(sh), n_(sh.n) {
		rows_.assign(n_, 0);
		full_ = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
		empty_ = static_cast<long long>(n_) * n_;
		counts_.assign(n_ + 1, 0);
	}

	void place(int r, int c, int s) {
		const uint64_t span = ((s == 64) ? ~0ull : ((1ull << s) - 1)) << (c - 1);
		for (int d = 0; d < s; ++d) {
			rows_[r - 1 + d] |= span;
		}
		empty_ -= static_cast<long long>(s) * s;
		++counts_[s];
		stack_.push_back({r, c, s});
		if (r == 1 && c == 1) {
			first_corner_ = s;
		}
	}

	void unplace(int r, int c, int s) {
		const uint64_t span = ((s == 64) ? ~0ull : ((1ull << s) - 1)) << (c - 1);
		for (int d = 0; d < s; ++d) {
			rows_[r - 1 + d] &= ~span;
		}
		empty_ += static_cast<long long>(s) * s;
		--counts_[s];
		stack_.pop_back();
		if (r == 1 && c == 1) {
			first_corner_ = 0;
		}
	}

	void dfs(int start_row) {
		++nodes_;
		if (sh_.node_limit && nodes_ > *sh_.node_limit) {
			sh_.truncated.store(true, std::memory_order_relaxed);
			return;
		}
		if ((nodes_ & 1023) == 0 && limits_hit()) {
			return;
		}
		if (sh_.stop.load(std::memory_order_relaxed) ||
		    sh_.truncated.load(std::memory_order_relaxed)) {
			return;
		}

		int r = start_row;
		while (r <= n_ && rows_[r - 1] == full_) {
			++r;
		}
		if (r > n_) {
			leaf();
			return;
		}
		const uint64_t freebits = ~rows_[r - 1] & full_;
		const int c = std::countr_zero(freebits) + 1;
		const int used = static_cast<int>(stack_.size());
		const int hmax = std::min(n_ - 1, n_ - r + 1);
		const long long cell_cap = static_cast<long long>(hmax) * hmax;

		long long bound = (empty_ + cell_cap - 1) / cell_cap;

		// Every maximal free segment of the cursor row is partitioned by
		// squares of width <= hmax starting in this row.
		{
			long long seg_bound = 0;
			uint64_t f = freebits;
			while (f) {
				const int start = std::countr_zero(f);
				const int len = std::countr_zero(~(f >> start));
				const int w = std::min(len, hmax);
				seg_bound += (len + w - 1) / w;
				const uint64_t run = (len == 64) ? ~0ull : ((1ull << len) - 1);
				f &= ~(run << start);
			}
			bound = std::max(bound, seg_bound);
		}

		if (sh_.variant == Variant::ForceCount && counts_[sh_.force_size] < sh_.force_value) {
			const int h = sh_.force_size;
			if (h > n_ - r + 1 || !free_block_exists(r, h)) {
				return;
			}
			const int need = sh_.force_value - counts_[h];
			const long long rest = empty_ - static_cast<long long>(need) * h * h;
			long long fc = need + (rest > 0 ? (rest + cell_cap - 1) / cell_cap : 0);
			bound = std::max(bound, fc);
		}

		const int cutoff =
		    sh_.collect ? sh_.target + 1 : sh_.best.load(std::memory_order_relaxed);
		if (used + bound >= cutoff) {
			return;
		}

		// Largest square placeable at the cursor: limited by the free run
		// of every row it would touch.
		int smax = 0;
		int min_run = INT_MAX;
		for (int d = 0; d < hmax; ++d) {
			const uint64_t fb = (~rows_[r - 1 + d] & full_) >> (c - 1);
			min_run = std::min(min_run, std::countr_zero(~fb));
			if (min_run >= d + 1) {
				smax = d + 1;
			} else {
				break;
			}
		}

		for (int s = smax; s >= 1; --s) {
			if (sh_.variant == Variant::ForceCount && s == sh_.force_size &&
			    counts_[s] >= sh_.force_value) {
				continue;
			}
			// Mirror breaking: the square covering (1,1) is at least as
			// large as the one covering (1,n).
			if (r == 1 && c + s - 1 == n_ && first_corner_ > 0 && s > first_corner_) {
				continue;
			}
			place(r, c, s);
			dfs(r);
			unplace(r, c, s);
			if (sh_.stop.load(std::memory_order_relaxed) ||
			    sh_.truncated.load(std::memory_order_relaxed)) {
				return;
			}
		}
	}

	long long nodes() const { return nodes_; }

   private:
	bool limits_hit() {
		sh_.nodes_committed.fetch_add(nodes_ - committed_, std::memory_order_relaxed);
		committed_ = nodes_;
		if (sh_.node_limit &&
		    sh_.nodes_committed.load(std::memory_order_relaxed) >= *sh_.node_limit) {
			sh_.truncated.store(true, std::memory_order_relaxed);
			return true;
		}
		if (sh_.has_deadline && Clock::now() >= sh_.deadline) {
			sh_.truncated.store(true, std::memory_order_relaxed);
			return true;
		}
		return false;
	}

	// Is there an empty h x h block whose top row is >= r?
	bool free_block_exists(int r, int h) const {
		for (int top = r; top + h - 1 <= n_; ++top) {
			uint64_t m = full_;
			for (int d = 0; d < h; ++d) {
				m &= ~rows_[top - 1 + d];
			}
			int k = 1;
			while (k < h && m) {
				const int shift = std::min(k, h - k);
				m &= m >> shift;
				k += shift;
			}
			if (m) {
				return true;
			}
		}
		return false;
	}

	void leaf() {
		const int used = static_cast<int>(stack_.size());
		if (sh_.variant == Variant::ForceCount &&
		    counts_[sh_.force_size] != sh_.force_value) {
			return;
		}
		if (sh_.variant == Variant::GcdOne) {
			int g = 0;
			for (const Placement& p : stack_) {
				g = std::gcd(g, p.size);
			}
			if (g != 1) {
				return;
			}
		}
		if (sh_.collect) {
			if (used == sh_.target) {
				Tiling t{n_, stack_};
				Tiling canon = canonical_form(t);
				std::lock_guard<std::mutex> lock(sh_.mu);
				sh_.collected.insert(std::move(canon));
			}
			return;
		}
		std::lock_guard<std::mutex> lock(sh_.mu);
		if (used < sh_.best.load(std::memory_order_relaxed)) {
			sh_.best.store(used, std::memory_order_relaxed);
			sh_.best_placements = stack_;
			if (sh_.incumbent_limit && used <= *sh_.incumbent_limit) {
				sh_.stop.store(true, std::memory_order_relaxed);
			}
		}
	}

	SharedState& sh_;
	int n_;
	std::vector<uint64_t> rows_;
	uint64_t full_ = 0;
	long long empty_ = 0;
	std::vector<int> counts_;
	std::vector<Placement> stack_;
	int first_corner_ = 0;
	long long nodes_ = 0;
	long long committed_ = 0;
};

void check_options(int n, const SolveOptions& opts) {
	if (n < 2 || n > kMaxSolveSide) {
		throw InvalidParameter("n must satisfy 2 <= n <= " +
		                       std::to_string(kMaxSolveSide) + ", got " +
		                       std::to_string(n));
	}
	if (opts.threads < 1) {
		throw InvalidParameter("threads must be >= 1");
	}
	if ((opts.node_limit && *opts.node_limit <= 0) ||
	    (opts.incumbent_limit && *opts.incumbent_limit <= 0) ||
	    (opts.time_limit && opts.time_limit->count() <= 0)) {
		throw InvalidParameter("limits must be positive when present");
	}
	if (opts.variant == Variant::ForceCount) {
		const int h = opts.force_size, v = opts.force_value;
		if (h < 1 || h > n - 1 || v < 0) {
			throw InvalidParameter("ForceCount requires 1 <= h <= n-1 and v >= 0");
		}
		const long long area = static_cast<long long>(v) * h * h;
		const long long fit = static_cast<long long>(n / h) * (n / h);
		if (area > static_cast<long long>(n) * n || v > fit) {
			throw Infeasible(std::to_string(v) + " squares of size " + std::to_string(h) +
			                 " cannot fit into a " + std::to_string(n) + "x" +
			                 std::to_string(n) + " square");
		}
	}
}

void setup_shared(SharedState& sh, int n, const SolveOptions& opts) {
	sh.n = n;
	sh.variant = opts.variant;
	sh.force_size = opts.force_size;
	sh.force_value = opts.force_value;
	sh.node_limit = opts.node_limit;
	sh.incumbent_limit = opts.incumbent_limit;
	if (opts.time_limit) {
		sh.has_deadline = true;
		sh.deadline = Clock::now() + *opts.time_limit;
	}
}

// Runs the search; root branches are split across workers when
// opts.threads > 1. Returns the total node count.
long long run_search(SharedState& sh, const SolveOptions& opts) {
	if (opts.threads == 1) {
		Worker w(sh);
		w.dfs(1);
		return w.nodes();
	}
	// Root candidates at (1,1), handed out in descending size order.
	std::vector<int> sizes;
	for (int s = sh.n - 1; s >= 1; --s) {
		sizes.push_back(s);
	}
	std::atomic<size_t> next{0};
	std::atomic<long long> nodes{1};  // the conceptual root
	auto body = [&]() {
		for (;;) {
			const size_t idx = next.fetch_add(1);
			if (idx >= sizes.size() || sh.stop.load() || sh.truncated.load()) {
				break;
			}
			Worker w(sh);
			w.place(1, 1, sizes[idx]);
			w.dfs(1);
			nodes.fetch_add(w.nodes());
		}
	};
	std::vector<std::thread> pool;
	for (int t = 0; t < opts.threads; ++t) {
		pool.emplace_back(body);
	}
	for (std::thread& t : pool) {
		t.join();
	}
	return nodes.load();
}

}  // namespace

OptResult solve_min_squares(int n, const SolveOptions& opts) {
	check_options(n, opts);
	SharedState sh;
	setup_shared(sh, n, opts);

	if (opts.variant == Variant::Base) {
		Tiling seed = construction_upper(n);
		sh.best.store(static_cast<int>(seed.placements.size()));
		sh.best_placements = seed.placements;
		if (opts.incumbent_limit &&
		    static_cast<long long>(seed.placements.size()) <= *opts.incumbent_limit) {
			sh.stop.store(true);
		}
	}

	const auto start = Clock::now();
	const long long nodes = run_search(sh, opts);
	const auto elapsed =
	    std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);

	if (sh.best.load() == INT_MAX) {
		if (sh.truncated.load()) {
			throw LimitReached("search limit reached before any feasible tiling was found");
		}
		throw Infeasible("no tiling satisfies the variant constraints for n = " +
		                 std::to_string(n));
	}

	OptResult result;
	result.optimum = sh.best.load();
	result.witness.n = n;
	result.witness.placements = sh.best_placements;
	std::sort(result.witness.placements.begin(), result.witness.placements.end());
	result.nodes = nodes;
	result.elapsed = elapsed;
	result.proven = !sh.truncated.load() && !sh.stop.load();
	return result;
}

std::set<Tiling> collect_optimal_tilings(int n, int target, const SolveOptions& opts) {
	check_options(n, opts);
	if (target < 1) {
		throw InvalidParameter("target must be >= 1");
	}
	SharedState sh;
	setup_shared(sh, n, opts);
	sh.collect = true;
	sh.target = target;
	run_search(sh, opts);
	if (sh.truncated.load()) {
		throw LimitReached("search limit reached before the enumeration completed");
	}
	return std::move(sh.collected);
}

void enumerate_all_tilings(int n, const std::function<void(const Tiling&)>& fn) {
	if (n < 2 || n > kMaxEnumerateSide) {
		throw InvalidParameter("n must satisfy 2 <= n <= " +
		                       std::to_string(kMaxEnumerateSide) + ", got " +
		                       std::to_string(n));
	}
	const uint64_t full = (1ull << n) - 1;
	std::vector<uint64_t> rows(n, 0);
	std::vector<Placement> stack;

	auto dfs = [&](auto&& self, int start_row) -> void {
		int r = start_row;
		while (r <= n && rows[r - 1] == full) {
			++r;
		}
		if (r > n) {
			fn(Tiling{n, stack});
			return;
		}
		const int c = std::countr_zero(~rows[r - 1] & full) + 1;
		int smax = 0;
		int min_run = INT_MAX;
		const int hmax = std::min(n - 1, n - r + 1);
		for (int d = 0; d < hmax; ++d) {
			const uint64_t fb = (~rows[r - 1 + d] & full) >> (c - 1);
			min_run = std::min(min_run, std::countr_zero(~fb));
			if (min_run >= d + 1) {
				smax = d + 1;
			} else {
				break;
			}
		}
		for (int s = 1; s <= smax; ++s) {
			const uint64_t span = ((1ull << s) - 1) << (c - 1);
			for (int d = 0; d < s; ++d) {
				rows[r - 1 + d] |= span;
			}
			stack.push_back({r, c, s});
			self(self, r);
			stack.pop_back();
			for (int d = 0; d < s; ++d) {
				rows[r - 1 + d] &= ~span;
			}
		}
	};
	dfs(dfs, 1);
}

OracleResult brute_force_oracle(int n) {
	if (n < 2 || n > 5) {
		throw InvalidParameter("brute_force_oracle requires 2 <= n <= 5, got " +
		                       std::to_string(n));
	}
	OracleResult result;
	result.optimum = INT_MAX;
	enumerate_all_tilings(n, [&](const Tiling& t) {
		const int used = static_cast<int>(t.placements.size());
		if (used < result.optimum) {
			result.optimum = used;
			result.optimal_canonical.clear();
		}
		if (used == result.optimum) {
			result.optimal_canonical.insert(canonical_form(t));
		}
	});
	return result;
}

// ---------------------------------------------------------------------------
// Generic 0-1 branch-and-bound on IlpModel.
// ---------------------------------------------------------------------------

namespace {

struct EngineRow {
	std::vector<int> vars;  // all coefficients are +1 after y substitution
	Relation rel = Relation::Eq;
	long long rhs = 0;
	bool packing = false;
	int label_index = -1;

	// search state
	long long ones = 0;
	long long unfixed = 0;
};

class GenericEngine {
   public:
	GenericEngine(const IlpModel& m, const SolveOptions& opts) : model_(m), opts_(opts) {
		build();
	}

	std::pair<long long, Assignment> solve() {
		if (opts_.time_limit) {
			has_deadline_ = true;
			deadline_ = Clock::now() + *opts_.time_limit;
		}
		if (!initial_propagation_ok_) {
			throw Infeasible("constraint propagation failed at the root");
		}
		dfs();
		if (best_ == LLONG_MAX) {
			if (truncated_) {
				throw LimitReached("search limit reached before any feasible assignment");
			}
			throw Infeasible("the model has no feasible assignment");
		}
		if (truncated_) {
			throw LimitReached("search limit reached; best objective so far " +
			                   std::to_string(best_));
		}
		Assignment out;
		for (int v = 0; v < num_vars_; ++v) {
			out[ids_[v]] = best_val_[v];
		}
		if (model_.has_y) {
			for (const auto& [h, def] : y_defs_) {
				long long sum = 0;
				for (int v : def) {
					sum += best_val_[v];
				}
				out[VarId::y(h)] = sum;
			}
		}
		return {best_, out};
	}

   private:
	void build() {
		for (const VarDecl& v : model_.variables) {
			if (v.id.kind == VarKind::X) {
				index_[v.id] = num_vars_;
				ids_.push_back(v.id);
				++num_vars_;
			}
		}
		val_.assign(num_vars_, -1);
		var_rows_.assign(num_vars_, {});

		// The y variables are determined by their link equalities; replace
		// them by the corresponding x sums everywhere else.
		for (const LinearConstraint& c : model_.constraints) {
			if (c.label.rfind("ylink_", 0) != 0) {
				continue;
			}
			std::vector<int> def;
			int h = -1;
			for (const auto& [id, coeff] : c.terms) {
				if (id.kind == VarKind::Y) {
					h = id.h;
				} else {
					def.push_back(index_.at(id));
				}
			}
			y_defs_[h] = std::move(def);
		}

		for (const LinearConstraint& c : model_.constraints) {
			if (c.label.rfind("ylink_", 0) == 0) {
				continue;
			}
			if (c.label.rfind("boundary_", 0) == 0) {
				prefixed_.push_back(index_.at(c.terms[0].first));
				continue;
			}
			EngineRow row;
			row.rel = c.rel;
			row.rhs = c.rhs;
			row.packing = c.label.rfind("packing_", 0) == 0;
			for (const auto& [id, coeff] : c.terms) {
				if (coeff != 1) {
					throw InvalidParameter("unsupported coefficient in constraint " +
					                       c.label);
				}
				if (id.kind == VarKind::Y) {
					auto it = y_defs_.find(id.h);
					if (it == y_defs_.end()) {
						throw MissingYLink("constraint " + c.label +
						                   " uses y_" + std::to_string(id.h) +
						                   " without a link equality");
					}
					row.vars.insert(row.vars.end(), it->second.begin(), it->second.end());
				} else {
					row.vars.push_back(index_.at(id));
				}
			}
			row.unfixed = static_cast<long long>(row.vars.size());
			const int r = static_cast<int>(rows_.size());
			for (int v : row.vars) {
				var_rows_[v].push_back(r);
			}
			if (row.packing) {
				packing_rows_.push_back(r);
			}
			rows_.push_back(std::move(row));
		}

		// Branch candidates per packing row, largest size first.
		for (int r : packing_rows_) {
			std::vector<int> order = rows_[r].vars;
			std::sort(order.begin(), order.end(), [&](int a, int b) {
				return ids_[a].h != ids_[b].h ? ids_[a].h > ids_[b].h : a < b;
			});
			branch_order_.push_back(std::move(order));
		}
		uncovered_ = static_cast<long long>(packing_rows_.size());

		const size_t mark = trail_.size();
		bool ok = true;
		for (int v : prefixed_) {
			ok = ok && enqueue(v, 0);
		}
		initial_propagation_ok_ = ok && propagate();
		if (!initial_propagation_ok_) {
			undo_to(mark);
		}
	}

	bool enqueue(int var, int8_t value) {
		if (val_[var] >= 0) {
			return val_[var] == value;
		}
		val_[var] = value;
		trail_.push_back(var);
		if (value == 1) {
			++ones_total_;
		}
		for (int r : var_rows_[var]) {
			EngineRow& row = rows_[r];
			--row.unfixed;
			if (value == 1) {
				++row.ones;
				if (row.packing && row.ones == 1) {
					--uncovered_;
				}
			}
		}
		pending_.push_back(var);
		return true;
	}

	bool propagate() {
		while (!pending_.empty()) {
			const int var = pending_.back();
			pending_.pop_back();
			for (int r : var_rows_[var]) {
				EngineRow& row = rows_[r];
				const long long lo = row.ones;
				const long long hi = row.ones + row.unfixed;
				switch (row.rel) {
					case Relation::Eq:
						if (lo > row.rhs || hi < row.rhs) {
							pending_.clear();
							return false;
						}
						if (row.unfixed > 0 && (lo == row.rhs || hi == row.rhs)) {
							const int8_t forced = lo == row.rhs ? 0 : 1;
							if (!fix_unfixed(row, forced)) {
								pending_.clear();
								return false;
							}
						}
						break;
					case Relation::Ge:
						if (hi < row.rhs) {
							pending_.clear();
							return false;
						}
						if (row.unfixed > 0 && hi == row.rhs) {
							if (!fix_unfixed(row, 1)) {
								pending_.clear();
								return false;
							}
						}
						break;
					case Relation::Le:
						if (lo > row.rhs) {
							pending_.clear();
							return false;
						}
						if (row.unfixed > 0 && lo == row.rhs) {
							if (!fix_unfixed(row, 0)) {
								pending_.clear();
								return false;
							}
						}
						break;
				}
			}
		}
		return true;
	}

	bool fix_unfixed(const EngineRow& row, int8_t value) {
		for (int v : row.vars) {
			if (val_[v] < 0 && !enqueue(v, value)) {
				return false;
			}
		}
		return true;
	}

	void undo_to(size_t mark) {
		while (trail_.size() > mark) {
			const int var = trail_.back();
			trail_.pop_back();
			const int8_t value = val_[var];
			val_[var] = -1;
			if (value == 1) {
				--ones_total_;
			}
			for (int r : var_rows_[var]) {
				EngineRow& row = rows_[r];
				++row.unfixed;
				if (value == 1) {
					--row.ones;
					if (row.packing && row.ones == 0) {
						++uncovered_;
					}
				}
			}
		}
		pending_.clear();
	}

	void dfs() {
		++nodes_;
		if (opts_.node_limit && nodes_ > *opts_.node_limit) {
			truncated_ = true;
		}
		if ((nodes_ & 255) == 0 && has_deadline_ && Clock::now() >= deadline_) {
			truncated_ = true;
		}
		if (truncated_) {
			return;
		}

		const long long cap =
		    static_cast<long long>(model_.n - 1) * (model_.n - 1);
		const long long bound = (uncovered_ + cap - 1) / cap;
		if (ones_total_ + bound >= best_) {
			return;
		}

		// Branch on the packing row of the first uncovered cell.
		int branch = -1;
		for (size_t k = 0; k < packing_rows_.size(); ++k) {
			if (rows_[packing_rows_[k]].ones == 0) {
				branch = static_cast<int>(k);
				break;
			}
		}
		if (branch < 0) {
			// Every cell is covered; propagation fixed all remaining
			// variables, so this is a feasible complete assignment.
			if (ones_total_ < best_) {
				best_ = ones_total_;
				best_val_.assign(val_.begin(), val_.end());
			}
			return;
		}

		// Binary branch on the largest free candidate covering that cell.
		int cand = -1;
		for (int v : branch_order_[branch]) {
			if (val_[v] < 0) {
				cand = v;
				break;
			}
		}
		if (cand < 0) {
			return;  // uncovered cell with every candidate excluded
		}
		const size_t mark = trail_.size();
		if (enqueue(cand, 1) && propagate()) {
			dfs();
		} else {
			pending_.clear();
		}
		undo_to(mark);
		if (truncated_) {
			return;
		}
		if (enqueue(cand, 0) && propagate()) {
			dfs();
		} else {
			pending_.clear();
		}
	}

	const IlpModel& model_;
	const SolveOptions& opts_;

	int num_vars_ = 0;
	std::map<VarId, int> index_;
	std::vector<VarId> ids_;
	std::map<int, std::vector<int>> y_defs_;
	std::vector<EngineRow> rows_;
	std::vector<std::vector<int>> var_rows_;
	std::vector<int> packing_rows_;
	std::vector<std::vector<int>> branch_order_;
	std::vector<int> prefixed_;

	std::vector<int8_t> val_;
	std::vector<int> trail_;
	std::vector<int> pending_;
	long long ones_total_ = 0;
	long long uncovered_ = 0;
	bool initial_propagation_ok_ = true;

	long long best_ = LLONG_MAX;
	std::vector<int8_t> best_val_;
	long long nodes_ = 0;
	bool truncated_ = false;
	bool has_deadline_ = false;
	Clock::time_point deadline_;
};

}  // namespace

std::pair<long long, Assignment> solve_ilp_generic(const IlpModel& m,
                                                   const SolveOptions& opts) {
	GenericEngine engine(m, opts);
	return engine.solve();
}

}  // namespace quadratura
