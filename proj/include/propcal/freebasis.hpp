#pragma once

#include "propcal/howell.hpp"
#include "propcal/lie.hpp"
#include "propcal/ncseries.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace propcal {

// Letters: x_1..x_r, then y (one variable) or y1, y2 (two variables).
struct RecursionSpec {
	TruncParams P;
	int r = 1;
	bool two_variable = false;
	int max_weight = 0; // nominal weights kept, <= D
	bool with_z = true; // two-variable only
	// a[i][j], b[i][j][k], alpha[i], beta[i][j]; missing entries read as 0
	std::vector<std::vector<u64>> a{};
	std::vector<std::vector<std::vector<u64>>> b{};
	std::vector<u64> alpha{};
	std::vector<std::vector<u64>> beta{};

	int rank() const { return r + (two_variable ? 2 : 1); }

	static RecursionSpec random(TruncParams const &P, int r, bool two, int W, u64 seed)
	{
		RecursionSpec s{P, r, two, W};
		std::mt19937_64 rng(seed);
		std::uniform_int_distribution<u64> c(0, P.q - 1);
		s.a.assign(r, std::vector<u64>(W + 1));
		s.b.assign(r, std::vector<std::vector<u64>>(W + 1, std::vector<u64>(W + 1)));
		s.alpha.assign(W + 1, 0);
		s.beta.assign(W + 1, std::vector<u64>(W + 1));
		for (auto &v : s.a)
			for (auto &x : v)
				x = c(rng);
		for (auto &m : s.b)
			for (auto &v : m)
				for (auto &x : v)
					x = c(rng);
		for (auto &x : s.alpha)
			x = c(rng);
		for (auto &v : s.beta)
			for (auto &x : v)
				x = c(rng);
		return s;
	}
};

struct FreeGen {
	std::string name;
	GroupElement g;
	int weight = 0;
	bool is_z = false;
};

namespace detail {
inline u64 coef(std::vector<u64> const &v, int i) { return i < int(v.size()) ? v[i] : 0; }
inline u64 coef(std::vector<std::vector<u64>> const &v, int i, int j)
{
	return i < int(v.size()) ? coef(v[i], j) : 0;
}
inline std::string pair_str(int j, int k)
{
	return "(" + std::to_string(j) + "," + std::to_string(k) + ")";
}
} // namespace detail

// g_{n+1} = [y, g_n] g_n^{p c}
inline GroupElement shift_step(GroupElement const &y, GroupElement const &g, u64 c)
{
	Zq Z(g.params());
	return commutator(y, g) * pow(g, Z.mul(Z.p % Z.q, c));
}

inline std::vector<FreeGen> build_recursion(RecursionSpec const &s)
{
	TruncParams const &P = s.P;
	if (s.r < 1)
		throw ParamError("need at least one x generator");
	if (s.rank() > 4)
		throw ParamError("ambient rank above 4");
	if (s.max_weight < 1 || s.max_weight > P.D)
		throw ParamError("depth exceeds D");
	int R = s.rank(), W = s.max_weight;
	auto gen = [&](int i) { return GroupElement::generator(P, i, R); };
	std::vector<FreeGen> out;
	if (!s.two_variable) {
		auto y = gen(s.r);
		for (int i = 0; i < s.r; ++i) {
			auto g = gen(i);
			for (int j = 0; j + 1 <= W; ++j) {
				out.push_back({"x" + std::to_string(i + 1) + "," + std::to_string(j), g, j + 1});
				if (i < int(s.a.size()))
					g = shift_step(y, g, detail::coef(s.a[i], j));
				else
					g = shift_step(y, g, 0);
			}
		}
		return out;
	}
	auto y1 = gen(s.r), y2 = gen(s.r + 1);
	for (int i = 0; i < s.r; ++i) {
		auto g = gen(i);
		for (int j = 0; j + 1 <= W; ++j) {
			auto h = g;
			for (int k = 0; j + k + 1 <= W; ++k) {
				out.push_back({"x" + std::to_string(i + 1) + "," + detail::pair_str(j, k), h, j + k + 1});
				u64 c = i < int(s.b.size()) ? detail::coef(s.b[i], j, k) : 0;
				h = shift_step(y2, h, c);
			}
			g = shift_step(y1, g, i < int(s.a.size()) ? detail::coef(s.a[i], j) : 0);
		}
	}
	if (!s.with_z)
		return out;
	auto z = commutator(y1, y2);
	for (int i = 0; i + 2 <= W; ++i) {
		auto h = z;
		for (int j = 0; i + j + 2 <= W; ++j) {
			out.push_back({"z" + detail::pair_str(i, j), h, i + j + 2, true});
			h = shift_step(y2, h, detail::coef(s.beta, i, j));
		}
		z = shift_step(y1, z, detail::coef(s.alpha, i));
	}
	return out;
}

// functionals on the abelianization: one row of weights per homomorphism to Z_p
struct KernelVerdict {
	bool member = false;
	std::vector<u64> values;
};

inline KernelVerdict kernel_membership(GroupElement const &g,
                                       std::vector<std::vector<u64>> const &functionals)
{
	Zq Z(g.params());
	auto lp = g.s.linear_part();
	KernelVerdict v;
	v.member = true;
	for (auto const &f : functionals) {
		if (f.size() != lp.size())
			throw ParamError("functional size does not match rank");
		u64 t = 0;
		for (std::size_t i = 0; i < f.size(); ++i)
			t = Z.add(t, Z.mul(f[i], lp[i]));
		v.values.push_back(t);
		v.member &= t == 0;
	}
	return v;
}

// y -> 1 (one variable), or y1 -> (1,0), y2 -> (0,1)
inline std::vector<std::vector<u64>> kernel_functionals(RecursionSpec const &s)
{
	int R = s.rank();
	std::vector<std::vector<u64>> f;
	for (int i = s.r; i < R; ++i) {
		std::vector<u64> row(R, 0);
		row[i] = 1;
		f.push_back(row);
	}
	return f;
}

// nominal-weight component of the Lie logarithm
inline NCSeries leading_term(FreeGen const &fg) { return lie_log(fg.g).homogeneous(fg.weight); }

// lowest degree of g - 1 with p counted as one degree
inline int weighted_degree(GroupElement const &g)
{
	Zq Z(g.params());
	int best = g.params().D + g.params().k + 1;
	for (int l = 1; l <= g.params().D; ++l)
		for (std::size_t v = 0; v < g.s.L->pw[l]; ++v)
			if (u64 c = g.s.at(l, v))
				best = std::min(best, l + Z.val(c));
	return best;
}

struct FreenessVerdict {
	bool free = false;
	int witness_degree = 0; // first degree with a deficit
	RankReport report;
};

inline FreenessVerdict graded_freeness_check(std::vector<FreeGen> const &table, int maxdeg)
{
	if (table.empty())
		throw ParamError("empty table");
	TruncParams const &P = table[0].g.params();
	if (maxdeg > P.D)
		throw ParamError("maxdeg exceeds D");
	LieBasis B(table[0].g.rank(), maxdeg);
	std::vector<NCSeries> gens;
	for (auto const &t : table)
		if (t.weight <= maxdeg) {
			auto l = leading_term(t);
			if (l.is_zero())
				throw std::domain_error("leading term of " + t.name + " vanishes");
			gens.push_back(l);
		}
	FreenessVerdict v;
	v.report = subalgebra_rank_check(B, gens, maxdeg);
	v.free = v.report.free;
	v.witness_degree = v.report.first_deficit;
	return v;
}

struct GenerationVerdict {
	bool pass = false;
	bool surrogate_ok = true; // every element sits at or below its nominal layer
	std::string surrogate_witness;
	std::vector<int> below;       // below[d]: elements of nominal weight < d
	std::vector<i64> layer_rank;  // rank of the kernel layer
	std::vector<i64> span_rank;   // rank spanned by the generated subalgebra
	int witness_degree = 0;
};

// Lie subalgebra generated by the leading terms against the associated graded of the
// kernel: layer 1 is the kernel of the functionals, layers >= 2 are all of L_d
inline GenerationVerdict strong_generation_check(RecursionSpec const &s,
                                                 std::vector<FreeGen> const &table, int maxdeg)
{
	if (!s.two_variable)
		throw ParamError("strong generation check needs the two-variable spec");
	TruncParams const &P = s.P;
	if (maxdeg > P.D)
		throw ParamError("maxdeg exceeds D");
	Zq Z(P);
	int R = s.rank();
	GenerationVerdict v;
	v.below.assign(maxdeg + 1, 0);
	for (auto const &t : table) {
		for (int d = t.weight + 1; d <= maxdeg; ++d)
			++v.below[d];
		if (weighted_degree(t.g) < t.weight && v.surrogate_ok) {
			v.surrogate_ok = false;
			v.surrogate_witness = t.name;
		}
	}
	v.layer_rank.assign(maxdeg + 1, 0);
	v.span_rank.assign(maxdeg + 1, 0);
	v.pass = v.surrogate_ok;
	if (maxdeg < 1)
		return v;

	LieBasis B(R, maxdeg);
	// expresses a homogeneous Lie element in the Lyndon basis of its degree
	auto flat = [&](NCSeries const &x, int d) {
		Vec out(B.by_degree[d].size(), 0);
		std::map<int, std::size_t> where;
		std::size_t pos = 0;
		for (int id : B.by_degree[d])
			where[id] = pos++;
		for (auto const &[m, co] : B.decompose(x, d)) {
			auto const &blk = B.block(m);
			for (std::size_t i = 0; i < blk.size(); ++i)
				out[where[blk[i]]] = co[i];
		}
		return out;
	};
	auto unflat = [&](Vec const &w, int d) {
		NCSeries x(P, R);
		auto const &ids = B.by_degree[d];
		for (std::size_t i = 0; i < ids.size(); ++i)
			if (w[i])
				for (auto [word, c] : B.words[ids[i]].poly)
					x.at(d, word) = Z.add(x.at(d, word), Z.mul(w[i], Z.from(c)));
		return x;
	};

	std::vector<std::vector<NCSeries>> rows(maxdeg + 1);
	auto fun = kernel_functionals(s);
	for (int d = 1; d <= maxdeg; ++d) {
		int dim = int(B.by_degree[d].size());
		Howell layer(Z, dim);
		if (d == 1) {
			std::vector<Vec> ker;
			for (int i = 0; i < R; ++i) {
				bool in = true;
				for (auto const &f : fun)
					in &= f[i] == 0;
				if (in) {
					Vec e(dim, 0);
					e[i] = 1;
					ker.push_back(e);
				}
			}
			layer = Howell::build(Z, dim, ker);
		} else {
			std::vector<Vec> all;
			for (int i = 0; i < dim; ++i) {
				Vec e(dim, 0);
				e[i] = 1;
				all.push_back(e);
			}
			layer = Howell::build(Z, dim, all);
		}
		std::vector<Vec> gv;
		Howell h(Z, dim);
		auto add = [&](Vec const &w) {
			if (h.full() || h.contains(w))
				return;
			gv.push_back(w);
			h = Howell::build(Z, dim, gv);
		};
		for (auto const &t : table)
			if (t.weight == d)
				add(flat(leading_term(t), d));
		for (int a = 1; a <= d / 2; ++a)
			for (auto const &u : rows[a])
				for (auto const &w : rows[d - a])
					add(flat(u.bracket(w), d));
		for (auto const &row : h.rows)
			rows[d].push_back(unflat(row.v, d));
		v.layer_rank[d] = layer.unit_rank();
		v.span_rank[d] = h.unit_rank();
		if (!(h == layer) && v.witness_degree == 0) {
			v.witness_degree = d;
			v.pass = false;
		}
	}
	return v;
}

} // namespace propcal
