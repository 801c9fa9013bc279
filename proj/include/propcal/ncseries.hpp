#pragma once

#include "propcal/modular.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace propcal {

// words over {0..r-1} of length <= D, stored densely block by block;
// a word of length l is the base-r number read left to right
struct WordLayout {
	int r = 2, D = 0;
	std::vector<std::size_t> off, pw;
	std::size_t total = 0;

	WordLayout(int r_, int D_) : r(r_), D(D_)
	{
		off.resize(D + 2);
		pw.resize(D + 2);
		std::size_t o = 0, w = 1;
		for (int l = 0; l <= D + 1; ++l) {
			off[l] = o;
			pw[l] = w;
			o += w;
			w *= std::size_t(r);
		}
		total = off[D + 1];
	}

	static std::shared_ptr<const WordLayout> get(int r, int D)
	{
		static std::map<std::pair<int, int>, std::shared_ptr<const WordLayout>>
		    cache;
		static std::mutex mu;
		std::lock_guard<std::mutex> lock(mu);
		auto &e = cache[{r, D}];
		if (!e)
			e = std::make_shared<const WordLayout>(r, D);
		return e;
	}

	int letter(int len, std::size_t v, int i) const
	{
		return int(v / pw[len - 1 - i] % std::size_t(r));
	}
	std::vector<int> letters(int len, std::size_t v) const
	{
		std::vector<int> w(len);
		for (int i = 0; i < len; ++i)
			w[i] = letter(len, v, i);
		return w;
	}
	std::size_t value(std::vector<int> const &w) const
	{
		std::size_t v = 0;
		for (int a : w)
			v = v * std::size_t(r) + std::size_t(a);
		return v;
	}
	// (length, value) of a flat index
	std::pair<int, std::size_t> locate(std::size_t idx) const
	{
		int l = 0;
		while (off[l + 1] <= idx)
			++l;
		return {l, idx - off[l]};
	}
	std::string name(int len, std::size_t v) const
	{
		std::string s;
		for (int i = 0; i < len; ++i)
			s += std::to_string(letter(len, v, i) + 1);
		return s;
	}
};

// truncated series in (Z/p^k)<X_1..X_r> modulo words longer than D
class NCSeries {
public:
	TruncParams P;
	Zq Z;
	std::shared_ptr<const WordLayout> L;
	std::vector<u64> c;

	NCSeries() = default;
	explicit NCSeries(TruncParams const &p, int rank = 2)
	    : P(p), Z(p), L(WordLayout::get(rank, p.D)), c(L->total, 0)
	{
	}

	static NCSeries scalar(TruncParams const &p, u64 a, int rank = 2)
	{
		NCSeries s(p, rank);
		s.c[0] = a % s.Z.q;
		return s;
	}
	static NCSeries one(TruncParams const &p, int rank = 2)
	{
		return scalar(p, 1, rank);
	}
	// X_i
	static NCSeries letter(TruncParams const &p, int i, int rank = 2)
	{
		NCSeries s(p, rank);
		if (p.D >= 1)
			s.c[s.L->off[1] + std::size_t(i)] = 1;
		return s;
	}

	int rank() const { return L->r; }
	int D() const { return P.D; }
	u64 constant() const { return c[0]; }

	u64 at(int len, std::size_t v) const { return c[L->off[len] + v]; }
	u64 &at(int len, std::size_t v) { return c[L->off[len] + v]; }
	u64 at(std::vector<int> const &w) const
	{
		if (int(w.size()) > P.D)
			return 0;
		return at(int(w.size()), L->value(w));
	}
	void set(std::vector<int> const &w, u64 a)
	{
		at(int(w.size()), L->value(w)) = Z.from(i64(a));
	}

	bool block_zero(int l) const
	{
		for (std::size_t i = L->off[l]; i < L->off[l + 1]; ++i)
			if (c[i])
				return false;
		return true;
	}
	bool is_zero() const
	{
		return std::all_of(c.begin(), c.end(), [](u64 a) { return a == 0; });
	}
	// lowest degree >= 1 carrying a nonzero coefficient, D+1 if none
	int min_degree() const
	{
		for (int l = 1; l <= P.D; ++l)
			if (!block_zero(l))
				return l;
		return P.D + 1;
	}
	NCSeries homogeneous(int l) const
	{
		NCSeries s(P, rank());
		for (std::size_t i = L->off[l]; i < L->off[l + 1]; ++i)
			s.c[i] = c[i];
		return s;
	}
	NCSeries without_constant() const
	{
		NCSeries s = *this;
		s.c[0] = 0;
		return s;
	}

	void check_compatible(NCSeries const &o) const
	{
		if (!(P == o.P) || rank() != o.rank())
			throw ParamError("mismatched truncation parameters");
	}

	bool operator==(NCSeries const &o) const
	{
		return P == o.P && rank() == o.rank() && c == o.c;
	}
	bool operator!=(NCSeries const &o) const { return !(*this == o); }

	NCSeries &operator+=(NCSeries const &o)
	{
		check_compatible(o);
		for (std::size_t i = 0; i < c.size(); ++i)
			c[i] = Z.add(c[i], o.c[i]);
		return *this;
	}
	NCSeries &operator-=(NCSeries const &o)
	{
		check_compatible(o);
		for (std::size_t i = 0; i < c.size(); ++i)
			c[i] = Z.sub(c[i], o.c[i]);
		return *this;
	}
	NCSeries &operator*=(u64 a)
	{
		a %= Z.q;
		for (auto &x : c)
			x = Z.mul(x, a);
		return *this;
	}
	friend NCSeries operator+(NCSeries a, NCSeries const &b) { return a += b; }
	friend NCSeries operator-(NCSeries a, NCSeries const &b) { return a -= b; }
	friend NCSeries operator*(NCSeries a, u64 s) { return a *= s; }
	friend NCSeries operator*(u64 s, NCSeries a) { return a *= s; }
	NCSeries operator-() const
	{
		NCSeries s = *this;
		for (auto &x : s.c)
			x = Z.neg(x);
		return s;
	}

	friend NCSeries operator*(NCSeries const &a, NCSeries const &b)
	{
		a.check_compatible(b);
		NCSeries out(a.P, a.rank());
		auto const &L = *a.L;
		int D = a.P.D;
		u64 q = a.Z.q;
		std::vector<char> nzb(D + 1);
		for (int l = 0; l <= D; ++l)
			nzb[l] = !b.block_zero(l);
		for (int la = 0; la <= D; ++la) {
			std::size_t na = L.pw[la];
			for (std::size_t i = 0; i < na; ++i) {
				u64 ai = a.c[L.off[la] + i];
				if (!ai)
					continue;
				for (int lb = 0; la + lb <= D; ++lb) {
					if (!nzb[lb])
						continue;
					std::size_t nb = L.pw[lb];
					u64 const *bp = &b.c[L.off[lb]];
					u64 *op = &out.c[L.off[la + lb] + i * nb];
					for (std::size_t j = 0; j < nb; ++j)
						if (bp[j])
							op[j] = (op[j] + ai * bp[j]) % q;
				}
			}
		}
		return out;
	}

	NCSeries bracket(NCSeries const &o) const { return *this * o - o * *this; }

	// same coefficients viewed at a smaller truncation degree
	NCSeries truncate(int D2) const
	{
		if (D2 > P.D)
			throw ParamError("cannot raise truncation degree");
		TruncParams P2 = P;
		P2.D = D2;
		NCSeries s(P2, rank());
		std::copy(c.begin(), c.begin() + std::ptrdiff_t(s.c.size()), s.c.begin());
		return s;
	}

	// counts of each letter in a word
	std::vector<int> multidegree(int len, std::size_t v) const
	{
		std::vector<int> m(rank(), 0);
		for (int i = 0; i < len; ++i)
			++m[L->letter(len, v, i)];
		return m;
	}

	// degree-1 coefficients
	std::vector<u64> linear_part() const
	{
		std::vector<u64> v(rank());
		for (int i = 0; i < rank() && P.D >= 1; ++i)
			v[i] = at(1, std::size_t(i));
		return v;
	}

	// nonzero terms as (word, coefficient); constant word is ""
	std::vector<std::pair<std::string, u64>> terms() const
	{
		std::vector<std::pair<std::string, u64>> t;
		for (int l = 0; l <= P.D; ++l)
			for (std::size_t v = 0; v < L->pw[l]; ++v)
				if (at(l, v))
					t.emplace_back(L->name(l, v), at(l, v));
		return t;
	}
};

// algebra substitution X_i -> img[i]; images must have zero constant term
inline NCSeries substitute(NCSeries const &s, std::vector<NCSeries> const &img)
{
	if (img.size() != std::size_t(s.rank()))
		throw ParamError("substitution needs one image per letter");
	NCSeries const &ref = img.at(0);
	for (auto const &g : img) {
		if (g.constant() != 0)
			throw ParamError("substitution image has a constant term");
		ref.check_compatible(g);
	}
	auto const &L = *s.L;
	int D = s.P.D, r = s.rank();
	// live[idx]: some word with this prefix has a nonzero coefficient
	std::vector<char> live(L.total, 0);
	for (int l = D; l >= 0; --l)
		for (std::size_t v = 0; v < L.pw[l]; ++v) {
			bool x = s.at(l, v) != 0;
			if (!x && l < D)
				for (int a = 0; a < r && !x; ++a)
					x = live[L.off[l + 1] + v * std::size_t(r) + std::size_t(a)];
			live[L.off[l] + v] = x;
		}
	NCSeries out = NCSeries::scalar(ref.P, s.constant(), ref.rank());
	std::function<void(int, std::size_t, NCSeries const &)> rec =
	    [&](int l, std::size_t v, NCSeries const &pref) {
		    for (int a = 0; a < r; ++a) {
			    std::size_t w = v * std::size_t(r) + std::size_t(a);
			    if (!live[L.off[l + 1] + w])
				    continue;
			    NCSeries nxt = pref * img[a];
			    if (nxt.is_zero())
				    continue;
			    if (u64 co = s.at(l + 1, w))
				    out += nxt * co;
			    if (l + 1 < D)
				    rec(l + 1, w, nxt);
		    }
	    };
	if (live[0])
		rec(0, 0, NCSeries::one(ref.P, ref.rank()));
	return out;
}

inline NCSeries series_log1p(NCSeries const &u)
{
	// log(1+u) for u without constant term
	NCSeries out(u.P, u.rank()), pw = u;
	for (int n = 1; n <= u.P.D; ++n) {
		u64 cf = u.Z.inv(u64(n));
		if (n % 2 == 0)
			cf = u.Z.neg(cf);
		out += pw * cf;
		pw = pw * u;
		if (pw.is_zero())
			break;
	}
	return out;
}

inline NCSeries series_expm1(NCSeries const &s)
{
	NCSeries out(s.P, s.rank()), pw = s;
	u64 fact = 1;
	for (int n = 1; n <= s.P.D; ++n) {
		fact = s.Z.mul(fact, u64(n));
		out += pw * s.Z.inv(fact);
		pw = pw * s;
		if (pw.is_zero())
			break;
	}
	return out;
}

// element with constant term 1 of the truncated algebra; the Magnus image of
// the free pro-p group lives here with x_i = 1 + X_i
class GroupElement {
public:
	NCSeries s;

	GroupElement() = default;
	explicit GroupElement(NCSeries v) : s(std::move(v))
	{
		if (s.constant() != 1 % s.Z.q)
			throw ParamError("group element needs constant term 1");
	}
	static GroupElement identity(TruncParams const &p, int rank = 2)
	{
		return GroupElement(NCSeries::one(p, rank));
	}
	static GroupElement generator(TruncParams const &p, int i, int rank = 2)
	{
		return GroupElement(NCSeries::one(p, rank) + NCSeries::letter(p, i, rank));
	}

	TruncParams const &params() const { return s.P; }
	int rank() const { return s.rank(); }
	bool is_identity() const { return s.min_degree() > s.P.D; }
	bool operator==(GroupElement const &o) const { return s == o.s; }
	bool operator!=(GroupElement const &o) const { return !(s == o.s); }

	friend GroupElement operator*(GroupElement const &a, GroupElement const &b)
	{
		return GroupElement(a.s * b.s);
	}
	GroupElement &operator*=(GroupElement const &b) { return *this = *this * b; }

	NCSeries augmentation() const { return s.without_constant(); }
	int degree() const { return s.min_degree(); }
};

inline GroupElement mul(GroupElement const &a, GroupElement const &b)
{
	return a * b;
}

inline GroupElement inv(GroupElement const &g)
{
	NCSeries u = -g.augmentation();
	NCSeries out = NCSeries::one(g.params(), g.rank()), pw = u;
	for (int j = 1; j <= g.params().D && !pw.is_zero(); ++j) {
		out += pw;
		pw = pw * u;
	}
	return GroupElement(out);
}

// binomial series sum C(e,j)(g-1)^j; e is a residue mod p^k
inline GroupElement pow(GroupElement const &g, u64 e)
{
	auto const &Z = g.s.Z;
	NCSeries u = g.augmentation();
	NCSeries out = NCSeries::one(g.params(), g.rank()), pw = u;
	for (int j = 1; j <= g.params().D && !pw.is_zero(); ++j) {
		out += pw * Z.binom(e, j);
		pw = pw * u;
	}
	return GroupElement(out);
}
inline GroupElement pow_int(GroupElement const &g, i64 e)
{
	return pow(g, g.s.Z.from(e));
}

// a b a^-1 b^-1
inline GroupElement commutator(GroupElement const &a, GroupElement const &b)
{
	return a * b * inv(a) * inv(b);
}

inline GroupElement conjugate(GroupElement const &w, GroupElement const &g)
{
	return w * g * inv(w);
}

inline NCSeries log(GroupElement const &g) { return series_log1p(g.augmentation()); }

inline GroupElement exp(NCSeries const &s)
{
	if (s.constant() != 0)
		throw ParamError("exp needs zero constant term");
	return GroupElement(NCSeries::one(s.P, s.rank()) + series_expm1(s));
}

// log g rewritten in the letters Y_i = log(1 + X_i); for elements of the free
// pro-p group this is a Lie series in the Y_i, homogeneous pieces included
inline NCSeries lie_log(GroupElement const &g)
{
	std::vector<NCSeries> img;
	for (int i = 0; i < g.rank(); ++i)
		img.push_back(series_expm1(NCSeries::letter(g.params(), i, g.rank())));
	return substitute(log(g), img);
}

// inverse of lie_log
inline GroupElement from_lie(NCSeries const &a)
{
	std::vector<NCSeries> img;
	for (int i = 0; i < a.rank(); ++i)
		img.push_back(series_log1p(NCSeries::letter(a.P, i, a.rank())));
	return exp(substitute(a, img));
}

inline GroupElement truncate(GroupElement const &g, int D2)
{
	return GroupElement(g.s.truncate(D2));
}

// left-normed commutator [a1,[a2,[...,[a_{n-1},a_n]]]]
inline GroupElement left_normed(std::vector<GroupElement> const &v)
{
	GroupElement acc = v.back();
	for (std::size_t i = v.size() - 1; i-- > 0;)
		acc = commutator(v[i], acc);
	return acc;
}

} // namespace propcal
