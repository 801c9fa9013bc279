#pragma once

#include "propcal/howell.hpp"
#include "propcal/ncseries.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace propcal {

using MDeg = std::vector<int>;

struct LyndonWord {
	std::vector<int> w;
	std::size_t value = 0;
	MDeg mdeg;
	int left = -1, right = -1; // standard factorization, -1 for letters
	std::vector<std::pair<std::size_t, i64>> poly; // bracket polynomial on words of length |w|
	int len() const { return int(w.size()); }
};

inline bool is_lyndon(std::vector<int> const &w)
{
	int n = int(w.size());
	for (int i = 1; i < n; ++i)
		if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
			return false;
	return n > 0;
}

// all Lyndon words of length <= n over {0..r-1}, in lexicographic order
inline std::vector<std::vector<int>> lyndon_words(int r, int n)
{
	std::vector<std::vector<int>> out;
	std::vector<int> w{-1};
	while (!w.empty()) {
		++w.back();
		out.push_back(w);
		std::size_t m = w.size();
		while (int(w.size()) < n)
			w.push_back(w[w.size() - m]);
		while (!w.empty() && w.back() == r - 1)
			w.pop_back();
	}
	return out;
}

// Lyndon basis of the free Lie algebra on r letters up to degree D, each element
// the standard bracketing P_w = w + (larger words)
class LieBasis {
public:
	int r = 2, D = 0;
	std::shared_ptr<const WordLayout> L;
	std::vector<LyndonWord> words; // sorted by (length, value)
	std::vector<std::vector<int>> by_degree;
	std::map<MDeg, std::vector<int>> by_mdeg;
	std::map<std::pair<int, std::size_t>, int> index;

	LieBasis(int rank, int maxdeg) : r(rank), D(maxdeg), L(WordLayout::get(rank, maxdeg))
	{
		auto ws = lyndon_words(r, D);
		std::sort(ws.begin(), ws.end(), [&](auto const &a, auto const &b) {
			if (a.size() != b.size())
				return a.size() < b.size();
			return a < b;
		});
		by_degree.resize(D + 1);
		for (auto const &w : ws) {
			LyndonWord lw;
			lw.w = w;
			lw.value = L->value(w);
			lw.mdeg.assign(r, 0);
			for (int a : w)
				++lw.mdeg[a];
			int id = int(words.size());
			index[{lw.len(), lw.value}] = id;
			if (lw.len() == 1) {
				lw.poly = {{lw.value, 1}};
			} else {
				for (int i = 1; i < lw.len(); ++i) {
					std::vector<int> suf(w.begin() + i, w.end());
					if (is_lyndon(suf)) {
						std::vector<int> pre(w.begin(), w.begin() + i);
						lw.left = index.at({int(pre.size()), L->value(pre)});
						lw.right = index.at({int(suf.size()), L->value(suf)});
						break;
					}
				}
				auto const &u = words[lw.left], &v = words[lw.right];
				std::map<std::size_t, i64> acc;
				for (auto [a, ca] : u.poly)
					for (auto [b, cb] : v.poly) {
						acc[a * L->pw[v.len()] + b] += ca * cb;
						acc[b * L->pw[u.len()] + a] -= ca * cb;
					}
				for (auto [k, c] : acc)
					if (c)
						lw.poly.emplace_back(k, c);
			}
			by_degree[lw.len()].push_back(id);
			by_mdeg[lw.mdeg].push_back(id);
			words.push_back(std::move(lw));
		}
	}

	int find(std::vector<int> const &w) const
	{
		auto it = index.find({int(w.size()), L->value(w)});
		return it == index.end() ? -1 : it->second;
	}
	std::vector<int> const &block(MDeg const &m) const
	{
		static const std::vector<int> none;
		auto it = by_mdeg.find(m);
		return it == by_mdeg.end() ? none : it->second;
	}
	int dim(MDeg const &m) const { return int(block(m).size()); }

	NCSeries poly_series(int id, TruncParams const &P) const
	{
		NCSeries s(P, r);
		auto const &lw = words[id];
		for (auto [v, c] : lw.poly)
			s.at(lw.len(), v) = s.Z.from(c);
		return s;
	}

	// series for coordinates on a multidegree block
	NCSeries element(MDeg const &m, Vec const &co, TruncParams const &P) const
	{
		NCSeries s(P, r);
		auto const &b = block(m);
		for (std::size_t i = 0; i < b.size(); ++i)
			if (co[i]) {
				auto const &lw = words[b[i]];
				for (auto [v, c] : lw.poly)
					s.at(lw.len(), v) = s.Z.add(s.at(lw.len(), v), s.Z.mul(co[i], s.Z.from(c)));
			}
		return s;
	}

	// group element whose leading term is P_w: the bracketing read as commutators
	GroupElement lift(int id, TruncParams const &P) const
	{
		auto const &lw = words[id];
		if (lw.len() == 1)
			return GroupElement::generator(P, lw.w[0], r);
		return commutator(lift(lw.left, P), lift(lw.right, P));
	}

	// coordinates of the degree-n part of s, split by multidegree. Throws if that
	// part is not a Lie polynomial.
	std::map<MDeg, Vec> decompose(NCSeries const &s, int n) const
	{
		if (n > D || n > s.P.D)
			throw ParamError("degree beyond the basis");
		auto const &Z = s.Z;
		std::size_t nw = L->pw[n];
		Vec rem(nw);
		for (std::size_t v = 0; v < nw; ++v)
			rem[v] = s.at(n, v);
		std::map<MDeg, Vec> out;
		for (int id : by_degree[n]) {
			auto const &lw = words[id];
			u64 c = rem[lw.value];
			if (!c)
				continue;
			auto const &b = block(lw.mdeg);
			auto &vec = out[lw.mdeg];
			if (vec.empty())
				vec.assign(b.size(), 0);
			vec[std::size_t(std::find(b.begin(), b.end(), id) - b.begin())] = c;
			for (auto [v, cf] : lw.poly)
				rem[v] = Z.sub(rem[v], Z.mul(c, Z.from(cf)));
		}
		for (std::size_t v = 0; v < nw; ++v)
			if (rem[v])
				throw std::domain_error("component of degree " + std::to_string(n) +
				                        " is not a Lie polynomial (word " +
				                        L->name(n, v) + ")");
		return out;
	}

	Vec block_coords(NCSeries const &s, MDeg const &m) const
	{
		int n = std::accumulate(m.begin(), m.end(), 0);
		auto all = decompose(s, n);
		auto it = all.find(m);
		return it == all.end() ? Vec(block(m).size(), 0) : it->second;
	}
};

inline int mobius(int n)
{
	int res = 1;
	for (int d = 2; d * d <= n; ++d)
		if (n % d == 0) {
			n /= d;
			if (n % d == 0)
				return 0;
			res = -res;
		}
	if (n > 1)
		res = -res;
	return res;
}

inline i64 binomial_int(int n, int k)
{
	if (k < 0 || k > n)
		return 0;
	i64 r = 1;
	for (int i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

// ranks d_n with prod_n (1-t^n)^{d_n} = 1 - f(t), f[w] = number of generators
// of weight w
inline std::vector<i64> witt_dims(std::vector<i64> const &f, int maxdeg)
{
	if (maxdeg < 1)
		throw ParamError("maxdeg must be positive");
	if (!f.empty() && f[0] != 0)
		throw ParamError("generator counting series has a constant term");
	auto F = [&](int i) -> i64 { return i < int(f.size()) ? f[i] : 0; };
	// c = t f' / (1 - f)
	std::vector<i64> num(maxdeg + 1, 0), c(maxdeg + 1, 0);
	for (int j = 1; j <= maxdeg; ++j)
		num[j] = j * F(j);
	for (int j = 1; j <= maxdeg; ++j) {
		i64 s = num[j];
		for (int i = 1; i < j; ++i)
			s += F(i) * c[j - i];
		c[j] = s;
	}
	std::vector<i64> d(maxdeg + 1, 0);
	for (int n = 1; n <= maxdeg; ++n) {
		i64 s = 0;
		for (int m = 1; m <= n; ++m)
			if (n % m == 0)
				s += mobius(n / m) * c[m];
		d[n] = s / n;
	}
	return d;
}

inline std::vector<i64> weights_to_counts(std::vector<int> const &weights)
{
	int mx = 0;
	for (int w : weights) {
		if (w < 1)
			throw ParamError("weights must be positive");
		mx = std::max(mx, w);
	}
	std::vector<i64> f(mx + 1, 0);
	for (int w : weights)
		++f[w];
	return f;
}

// rank of the (a,b) piece of the free Lie algebra on two letters
inline i64 bigraded_dim(int a, int b)
{
	int n = a + b;
	if (n == 0)
		return 0;
	int g = std::gcd(a, b);
	i64 s = 0;
	for (int d = 1; d <= g; ++d)
		if (g % d == 0)
			s += mobius(d) * binomial_int(n / d, a / d);
	return s / n;
}

struct RankReport {
	std::vector<i64> ranks;    // unit rank of the generated subalgebra, per degree
	std::vector<i64> expected; // free Lie ranks for the induced alphabet
	std::vector<bool> torsion;
	bool free = true;
	int first_deficit = 0; // 0 when none
};

inline int homogeneous_degree(NCSeries const &s)
{
	int deg = -1;
	for (int l = 0; l <= s.P.D; ++l)
		if (!s.block_zero(l)) {
			if (deg >= 0)
				throw ParamError("generator is not homogeneous");
			deg = l;
		}
	if (deg <= 0)
		throw ParamError("generator must be nonzero of positive degree");
	return deg;
}

// ranks per degree of the Lie subalgebra generated by homogeneous elements,
// compared against the free Lie algebra on generators of the same degrees
inline RankReport subalgebra_rank_check(LieBasis const &B, std::vector<NCSeries> const &gens,
                                        int maxdeg)
{
	if (gens.empty())
		throw ParamError("no generators");
	TruncParams P = gens[0].P;
	Zq Z(P);
	if (maxdeg > P.D || maxdeg > B.D)
		throw ParamError("maxdeg exceeds truncation");
	std::vector<int> gdeg;
	for (auto const &g : gens)
		gdeg.push_back(homogeneous_degree(g));

	auto flat = [&](NCSeries const &s, int n) {
		Vec v(B.by_degree[n].size(), 0);
		auto parts = B.decompose(s, n);
		std::size_t pos = 0;
		std::map<int, std::size_t> where;
		for (int id : B.by_degree[n])
			where[id] = pos++;
		for (auto const &[m, co] : parts) {
			auto const &b = B.block(m);
			for (std::size_t i = 0; i < b.size(); ++i)
				v[where[b[i]]] = co[i];
		}
		return v;
	};
	auto unflat = [&](Vec const &v, int n) {
		NCSeries s(P, B.r);
		auto const &ids = B.by_degree[n];
		for (std::size_t i = 0; i < ids.size(); ++i)
			if (v[i]) {
				auto const &lw = B.words[ids[i]];
				for (auto [w, c] : lw.poly)
					s.at(n, w) = Z.add(s.at(n, w), Z.mul(v[i], Z.from(c)));
			}
		return s;
	};

	std::vector<Howell> S(maxdeg + 1);
	std::vector<std::vector<NCSeries>> rows(maxdeg + 1);
	RankReport rep;
	rep.ranks.assign(maxdeg + 1, 0);
	rep.torsion.assign(maxdeg + 1, false);
	std::vector<int> w;
	for (int d : gdeg)
		if (d <= maxdeg)
			w.push_back(d);
	rep.expected = witt_dims(weights_to_counts(w), maxdeg);
	for (int d = 1; d <= maxdeg; ++d) {
		int dim = int(B.by_degree[d].size());
		std::vector<Vec> gv;
		Howell h(Z, dim);
		auto add = [&](Vec const &v) {
			if (h.full() || h.contains(v))
				return;
			gv.push_back(v);
			h = Howell::build(Z, dim, gv);
		};
		for (std::size_t i = 0; i < gens.size(); ++i)
			if (gdeg[i] == d)
				add(flat(gens[i], d));
		for (int a = 1; a <= d / 2; ++a)
			for (auto const &u : rows[a])
				for (auto const &v : rows[d - a])
					add(flat(u.bracket(v), d));
		S[d] = h;
		for (auto const &r : h.rows)
			rows[d].push_back(unflat(r.v, d));
		rep.ranks[d] = h.unit_rank();
		rep.torsion[d] = !h.torsion_free();
		if ((rep.ranks[d] != rep.expected[d] || rep.torsion[d]) && rep.free) {
			rep.free = false;
			rep.first_deficit = d;
		}
	}
	return rep;
}

struct FastestRow {
	int m = 0, r_m = 0;
	int min_length = 0; // shortest bracket of weight m in the truncated algebra, 0 if none
	i64 count = 0;
	bool contained = true;
};

inline int r_bound(int m, int n) { return m / n + 1; }

// graded model of the minimal filtration on the free Lie algebra over a weighted
// alphabet, pushed to the quotient keeping generators of weight <= n; checks that
// weight-m brackets have length >= r_m
inline std::vector<FastestRow> fastest_filtration_ranks(std::vector<int> const &weights, int n,
                                                        int maxdeg)
{
	if (n < 2)
		throw ParamError("n must be at least 2");
	std::vector<int> letters;
	for (int w : weights)
		if (w <= n)
			letters.push_back(w);
	std::vector<FastestRow> rows;
	for (int m = 1; m <= maxdeg; ++m)
		rows.push_back({m, r_bound(m, n), 0, 0, true});
	if (letters.empty())
		return rows;
	int minw = *std::min_element(letters.begin(), letters.end());
	int maxlen = maxdeg / minw;
	for (auto const &w : lyndon_words(int(letters.size()), maxlen)) {
		int wt = 0;
		for (int a : w)
			wt += letters[a];
		if (wt > maxdeg)
			continue;
		auto &row = rows[wt - 1];
		++row.count;
		int len = int(w.size());
		if (row.min_length == 0 || len < row.min_length)
			row.min_length = len;
	}
	for (auto &row : rows)
		row.contained = row.count == 0 || row.min_length >= row.r_m;
	return rows;
}

} // namespace propcal
