#pragma once

#include "propcal/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace propcal {

using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((unsigned __int128)a * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m)
{
	u64 r = 1 % m;
	a %= m;
	for (; e; e >>= 1, a = mulmod(a, a, m))
		if (e & 1)
			r = mulmod(r, a, m);
	return r;
}

inline u64 invmod(u64 a, u64 m)
{
	i64 t = 0, nt = 1, r = i64(m), nr = i64(a % m);
	while (nr) {
		i64 q = r / nr;
		std::tie(t, nt) = std::pair{nt, t - q * nt};
		std::tie(r, nr) = std::pair{nr, r - q * nr};
	}
	if (r != 1)
		throw std::domain_error("not invertible");
	return u64(t < 0 ? t + i64(m) : t);
}

inline u64 modp(i64 a, u64 m)
{
	i64 r = a % i64(m);
	return u64(r < 0 ? r + i64(m) : r);
}

// class number one: O_K = Z[w], w root of X^2 - t X + n
struct ImQuadField {
	int d = -1;
	int disc = -4;
	int t = 0, n = 1;
	int w = 4;

	explicit ImQuadField(int d_) : d(d_)
	{
		static const int ok[] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
		if (std::find(std::begin(ok), std::end(ok), d) == std::end(ok))
			throw ParamError("d=" + std::to_string(d) + " is not a class-number-one field");
		if (((d % 4) + 4) % 4 == 1) {
			disc = d;
			t = 1;
			n = (1 - d) / 4;
		} else {
			disc = 4 * d;
			t = 0;
			n = -d;
		}
		w = d == -1 ? 4 : d == -3 ? 6 : 2;
	}

	i64 norm(i64 a, i64 b) const { return a * a + t * a * b + i64(n) * b * b; }
};

inline bool is_prime_u64(u64 p)
{
	if (p < 2)
		return false;
	for (u64 q = 2; q * q <= p; ++q)
		if (p % q == 0)
			return false;
	return true;
}

inline bool is_ramified(ImQuadField const &K, u64 p) { return i64(K.disc) % i64(p) == 0; }

// Kronecker symbol (disc/p) == 1, odd p
inline bool is_split(ImQuadField const &K, u64 p)
{
	if (p < 5)
		throw ParamError("p must be at least 5");
	if (is_ramified(K, p))
		return false;
	return powmod(modp(K.disc, p), (p - 1) / 2, p) == 1;
}

struct Generator {
	i64 a = 0, b = 0;
};

// a + b w of norm p, minimal b >= 0, then the nonnegative a when there is one
inline Generator cornacchia(ImQuadField const &K, u64 p)
{
	if (!is_split(K, p))
		throw ParamError(std::to_string(p) + " does not split");
	// a^2 + t a b + n b^2 = p, discriminant in a: b^2 (t^2 - 4n) + 4p = 4p + disc b^2
	for (i64 b = 1; i64(-K.disc) * b * b <= i64(4 * p); ++b) {
		i64 D = i64(4 * p) + i64(K.disc) * b * b;
		i64 s = i64(std::sqrt(double(D)));
		while (s * s > D)
			--s;
		while ((s + 1) * (s + 1) <= D)
			++s;
		if (s * s != D)
			continue;
		for (i64 num : {-K.t * b + s, -K.t * b - s})
			if (num % 2 == 0 && num / 2 >= 0 && K.norm(num / 2, b) == i64(p))
				return {num / 2, b};
		for (i64 num : {-K.t * b + s, -K.t * b - s})
			if (num % 2 == 0 && K.norm(num / 2, b) == i64(p))
				return {num / 2, b};
	}
	throw std::logic_error("no norm-p element for split p=" + std::to_string(p));
}

// multiplicative order of a mod p, factoring p-1 by trial division
inline u64 mult_order(u64 a, u64 p)
{
	u64 ord = p - 1, m = p - 1;
	for (u64 f = 2; f * f <= m; ++f)
		if (m % f == 0) {
			while (m % f == 0)
				m /= f;
			while (ord % f == 0 && powmod(a, ord / f, p) == 1)
				ord /= f;
		}
	if (m > 1 && powmod(a, ord / m, p) == 1)
		ord /= m;
	return ord;
}

struct CensusRecord {
	u64 p = 0;
	bool split = false;
	Generator pi;
	int w = 0;
	u64 u = 0; // image of the conjugate generator mod p^2
	u64 ord_index = 0;
	bool ord_ok = false, unit_ok = false, pass = false;
};

// u = conjugate of pi at the prime where pi vanishes, checked for generating Z_p^x / mu_w
inline CensusRecord cond2_check(ImQuadField const &K, u64 p, Generator pi)
{
	CensusRecord rec;
	rec.p = p;
	rec.split = is_split(K, p);
	rec.w = K.w;
	rec.pi = pi;
	if (!rec.split)
		return rec;
	if (K.norm(pi.a, pi.b) != i64(p))
		throw ParamError("generator does not have norm p");
	u64 p2 = p * p;
	u64 bp = modp(pi.b, p);
	if (bp == 0)
		throw std::logic_error("b divisible by p");
	u64 r = mulmod(modp(-pi.a, p), invmod(bp, p), p);
	auto f = [&](u64 x, u64 m) {
		return modp(i64(mulmod(x, x, m)) - i64(mulmod(modp(K.t, m), x, m)) + K.n, m);
	};
	if (f(r, p) != 0)
		throw std::logic_error("no root of the minimal polynomial");
	u64 fp = modp(2 * i64(r) - K.t, p);
	if (fp == 0)
		throw std::logic_error("Hensel lift failed");
	u64 r2 = modp(i64(r) - i64(mulmod(f(r, p2), invmod(fp, p2), p2)), p2);
	if (f(r2, p2) != 0)
		throw std::logic_error("Hensel lift failed");
	rec.u = modp(pi.a + pi.b * (i64(K.t) - i64(r2)), p2);
	if (rec.u % p == 0)
		throw std::logic_error("conjugate image is not a unit");
	u64 ord = mult_order(rec.u % p, p);
	u64 l = std::lcm(ord, u64(K.w));
	rec.ord_index = (p - 1) / l;
	rec.ord_ok = l == p - 1;
	rec.unit_ok = powmod(rec.u, p - 1, p2) != 1;
	rec.pass = rec.ord_ok && rec.unit_ok;
	return rec;
}

inline CensusRecord cond2_check(ImQuadField const &K, u64 p)
{
	if (!is_split(K, p)) {
		CensusRecord rec;
		rec.p = p;
		rec.w = K.w;
		return rec;
	}
	return cond2_check(K, p, cornacchia(K, p));
}

// units of O_K as (c, e) acting by multiplication: (a + b w)(c + e w)
inline std::vector<Generator> unit_group(ImQuadField const &K)
{
	if (K.w == 4)
		return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
	if (K.w == 6)
		return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
	return {{1, 0}, {-1, 0}};
}

inline Generator multiply(ImQuadField const &K, Generator x, Generator y)
{
	// w^2 = t w - n
	return {x.a * y.a - i64(K.n) * x.b * y.b, x.a * y.b + x.b * y.a + i64(K.t) * x.b * y.b};
}

inline Generator conjugate(ImQuadField const &K, Generator x) { return {x.a + K.t * x.b, -x.b}; }

inline std::vector<u64> primes_up_to(u64 limit)
{
	std::vector<bool> comp(limit + 1, false);
	std::vector<u64> out;
	for (u64 i = 2; i <= limit; ++i) {
		if (comp[i])
			continue;
		out.push_back(i);
		for (u64 j = i * i; j <= limit; j += i)
			comp[j] = true;
	}
	return out;
}

struct CensusSummary {
	u64 split = 0, pass = 0;
	std::vector<CensusRecord> records; // split primes only, ordered by p
};

inline CensusSummary sweep(ImQuadField const &K, u64 limit, int jobs = 1)
{
	if (limit < 5)
		throw ParamError("limit must be at least 5");
	std::vector<u64> ps;
	for (u64 p : primes_up_to(limit))
		if (p >= 5 && is_split(K, p))
			ps.push_back(p);
	CensusSummary s;
	s.records.resize(ps.size());
	jobs = std::max(1, jobs);
	std::vector<std::thread> pool;
	for (int j = 0; j < jobs; ++j)
		pool.emplace_back([&, j] {
			for (std::size_t i = std::size_t(j); i < ps.size(); i += std::size_t(jobs))
				s.records[i] = cond2_check(K, ps[i]);
		});
	for (auto &t : pool)
		t.join();
	s.split = ps.size();
	for (auto const &r : s.records)
		s.pass += r.pass;
	return s;
}

inline void write_csv(std::ostream &os, std::vector<CensusRecord> const &rs)
{
	os << "p,a,b,w,ord_index,ord_ok,unit_ok,pass\n";
	for (auto const &r : rs)
		os << r.p << ',' << r.pi.a << ',' << r.pi.b << ',' << r.w << ',' << r.ord_index << ','
		   << r.ord_ok << ',' << r.unit_ok << ',' << r.pass << '\n';
}

} // namespace propcal
