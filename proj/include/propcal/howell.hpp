#pragma once

#include "propcal/modular.hpp"

#include <vector>

namespace propcal {

using Vec = std::vector<u64>;

// Howell normal form of a submodule of (Z/p^k)^n. Rows are sorted by pivot
// column, pivots are p^e, entries above a pivot are reduced below it. Each row
// optionally remembers its expression in terms of the generators.
class Howell {
public:
	struct Row {
		Vec v;
		Vec comb;
		int piv = 0;
		int e = 0;
	};

	Zq Z;
	int n = 0;
	std::vector<Row> rows;

	Howell() = default;
	Howell(Zq const &z, int ncols) : Z(z), n(ncols) {}

	static Howell build(Zq const &z, int ncols, std::vector<Vec> const &gens,
	                    bool track = false)
	{
		Howell h(z, ncols);
		std::vector<Row> pool;
		for (std::size_t g = 0; g < gens.size(); ++g) {
			Row r;
			r.v = gens[g];
			for (auto &x : r.v)
				x %= z.q;
			if (track) {
				r.comb.assign(gens.size(), 0);
				r.comb[g] = 1;
			}
			pool.push_back(std::move(r));
		}
		h.run(pool);
		return h;
	}

	// v -> v - c*w on both the vector and its combination
	void axpy(Row &a, u64 c, Row const &b) const
	{
		if (!c)
			return;
		for (int j = 0; j < n; ++j)
			a.v[j] = Z.sub(a.v[j], Z.mul(c, b.v[j]));
		for (std::size_t j = 0; j < a.comb.size(); ++j)
			a.comb[j] = Z.sub(a.comb[j], Z.mul(c, b.comb[j]));
	}
	void scale(Row &a, u64 u) const
	{
		for (auto &x : a.v)
			x = Z.mul(x, u);
		for (auto &x : a.comb)
			x = Z.mul(x, u);
	}

	int length() const
	{
		int s = 0;
		for (auto const &r : rows)
			s += Z.k - r.e;
		return s;
	}
	int unit_rank() const
	{
		int s = 0;
		for (auto const &r : rows)
			s += r.e == 0;
		return s;
	}
	bool torsion_free() const { return unit_rank() == int(rows.size()); }
	bool full() const { return unit_rank() == n; }
	bool empty() const { return rows.empty(); }

	// reduce v; returns the canonical remainder, fills coefficients per row
	Vec reduce(Vec v, Vec *coef = nullptr) const
	{
		for (auto &x : v)
			x %= Z.q;
		if (coef)
			coef->assign(rows.size(), 0);
		for (std::size_t i = 0; i < rows.size(); ++i) {
			auto const &r = rows[i];
			u64 pe = Z.ppow(r.e);
			u64 t = v[r.piv] / pe;
			if (!t)
				continue;
			for (int j = 0; j < n; ++j)
				v[j] = Z.sub(v[j], Z.mul(t, r.v[j]));
			if (coef)
				(*coef)[i] = t;
		}
		return v;
	}
	bool contains(Vec const &v) const
	{
		Vec r = reduce(v);
		for (auto x : r)
			if (x)
				return false;
		return true;
	}
	bool contains(Howell const &o) const
	{
		for (auto const &r : o.rows)
			if (!contains(r.v))
				return false;
		return true;
	}
	bool operator==(Howell const &o) const
	{
		if (rows.size() != o.rows.size())
			return false;
		for (std::size_t i = 0; i < rows.size(); ++i)
			if (rows[i].v != o.rows[i].v)
				return false;
		return true;
	}

private:
	void run(std::vector<Row> pool)
	{
		for (int col = 0; col < n; ++col) {
			int best = -1, bv = Z.k;
			for (std::size_t i = 0; i < pool.size(); ++i) {
				int e = Z.val(pool[i].v[col]);
				if (e < bv) {
					bv = e;
					best = int(i);
				}
			}
			if (best < 0)
				continue;
			Row piv = pool[best];
			pool.erase(pool.begin() + best);
			u64 pe = Z.ppow(bv);
			u64 unit = piv.v[col] / pe;
			scale(piv, Z.inv(unit % Z.q));
			piv.piv = col;
			piv.e = bv;
			for (auto &r : pool)
				if (r.v[col])
					axpy(r, r.v[col] / pe, piv);
			if (bv > 0) {
				Row extra = piv;
				scale(extra, Z.ppow(Z.k - bv));
				bool nz = false;
				for (auto x : extra.v)
					nz |= x != 0;
				if (nz)
					pool.push_back(std::move(extra));
			}
			rows.push_back(std::move(piv));
			std::vector<Row> keep;
			for (auto &r : pool) {
				bool nz = false;
				for (auto x : r.v)
					nz |= x != 0;
				if (nz)
					keep.push_back(std::move(r));
			}
			pool.swap(keep);
		}
		for (std::size_t i = 0; i < rows.size(); ++i) {
			u64 pe = Z.ppow(rows[i].e);
			for (std::size_t j = 0; j < i; ++j) {
				u64 t = rows[j].v[rows[i].piv] / pe;
				axpy(rows[j], t, rows[i]);
			}
		}
	}
};

// solve sum_j u_j * cols[j] = target; empty optional when no solution.
// Columns listed first win pivots, so they absorb as much as possible.
inline bool solve_linear(Zq const &Z, std::vector<Vec> const &cols, Vec const &target,
                         Vec &u)
{
	int n = int(target.size());
	Howell h = Howell::build(Z, n, cols, true);
	Vec coef;
	Vec rem = h.reduce(target, &coef);
	for (auto x : rem)
		if (x)
			return false;
	u.assign(cols.size(), 0);
	for (std::size_t i = 0; i < h.rows.size(); ++i)
		for (std::size_t g = 0; g < cols.size(); ++g)
			u[g] = Z.add(u[g], Z.mul(coef[i], h.rows[i].comb[g]));
	return true;
}

// kernel of the map e_j -> cols[j], as Howell rows in the source coordinates
inline Howell kernel(Zq const &Z, int target_dim, std::vector<Vec> const &cols)
{
	int m = int(cols.size());
	std::vector<Vec> aug;
	for (int j = 0; j < m; ++j) {
		Vec r(cols[j]);
		r.resize(std::size_t(target_dim + m), 0);
		r[std::size_t(target_dim + j)] = 1;
		aug.push_back(r);
	}
	Howell h = Howell::build(Z, target_dim + m, aug);
	std::vector<Vec> ker;
	for (auto const &r : h.rows)
		if (r.piv >= target_dim)
			ker.emplace_back(r.v.begin() + target_dim, r.v.end());
	return Howell::build(Z, m, ker);
}

} // namespace propcal
