#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace propcal {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct ParamError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

inline bool is_prime(u64 n)
{
	if (n < 2)
		return false;
	for (u64 d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

// (p, k, D): coefficients in Z/p^k, words of length <= D
struct TruncParams {
	int p = 5, k = 1, D = 4;
	u64 q = 5;

	TruncParams() = default;
	TruncParams(int p_, int k_, int D_) : p(p_), k(k_), D(D_)
	{
		if (p < 5 || !is_prime(p))
			throw ParamError("p must be a prime >= 5");
		if (k < 1 || D < 1)
			throw ParamError("k and D must be positive");
		if (D >= p)
			throw ParamError("truncation degree must satisfy D < p");
		q = 1;
		for (int i = 0; i < k; ++i) {
			q *= u64(p);
			if (q >= (u64(1) << 31))
				throw ParamError("p^k must stay below 2^31");
		}
	}

	bool operator==(TruncParams const &o) const
	{
		return p == o.p && k == o.k && D == o.D;
	}
	std::string str() const
	{
		return "(" + std::to_string(p) + "," + std::to_string(k) + "," +
		       std::to_string(D) + ")";
	}
};

// arithmetic in Z/q, q = p^k
struct Zq {
	u64 p = 5, q = 5;
	int k = 1;

	Zq() = default;
	Zq(u64 p_, int k_) : p(p_), k(k_)
	{
		q = 1;
		for (int i = 0; i < k; ++i)
			q *= p;
	}
	explicit Zq(TruncParams const &t) : Zq(u64(t.p), t.k) {}

	u64 add(u64 a, u64 b) const
	{
		u64 s = a + b;
		return s >= q ? s - q : s;
	}
	u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q - b; }
	u64 neg(u64 a) const { return a ? q - a : 0; }
	u64 mul(u64 a, u64 b) const { return a * b % q; }
	u64 from(i64 v) const
	{
		i64 r = v % i64(q);
		return r < 0 ? u64(r + i64(q)) : u64(r);
	}
	i64 centered(u64 a) const { return a > q / 2 ? i64(a) - i64(q) : i64(a); }

	u64 pow(u64 a, u64 e) const
	{
		u64 r = 1 % q;
		a %= q;
		while (e) {
			if (e & 1)
				r = mul(r, a);
			a = mul(a, a);
			e >>= 1;
		}
		return r;
	}
	u64 pow_signed(u64 a, i64 e) const
	{
		return e >= 0 ? pow(a, u64(e)) : pow(inv(a), u64(-e));
	}

	bool is_unit(u64 a) const { return a % p != 0; }

	u64 inv(u64 a) const
	{
		i64 t = 0, nt = 1, r = i64(q), nr = i64(a % q);
		while (nr) {
			i64 qq = r / nr;
			t -= qq * nt;
			std::swap(t, nt);
			r -= qq * nr;
			std::swap(r, nr);
		}
		if (r != 1)
			throw std::domain_error("not a unit mod p^k");
		return from(t);
	}

	// p-adic valuation, k for zero
	int val(u64 a) const
	{
		if (a % q == 0)
			return k;
		int v = 0;
		while (a % p == 0) {
			a /= p;
			++v;
		}
		return v;
	}
	u64 ppow(int e) const
	{
		u64 r = 1;
		for (int i = 0; i < e; ++i)
			r *= p;
		return r;
	}

	// unique (p-1)-th root of unity congruent to a mod p
	u64 teichmuller(u64 a) const
	{
		u64 t = a % q;
		for (int i = 1; i < k; ++i)
			t = pow(t, p);
		return t;
	}

	// C(e, j) for j < p, exponent taken mod q
	u64 binom(u64 e, int j) const
	{
		u64 num = 1, den = 1;
		for (int i = 0; i < j; ++i) {
			num = mul(num, sub(e % q, u64(i) % q));
			den = mul(den, u64(i + 1) % q);
		}
		return mul(num, inv(den));
	}
};

} // namespace propcal
