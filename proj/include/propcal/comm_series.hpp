#pragma once

#include "propcal/modular.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace propcal {

// truncated commutative series in Z/p^k[T1,T2], total degree <= N
class CommSeries {
public:
	Zq Z;
	int N = 0;
	std::vector<u64> c; // c[a*(N+1)+b] for T1^a T2^b

	CommSeries() = default;
	CommSeries(Zq const &z, int n) : Z(z), N(n), c(std::size_t(n + 1) * (n + 1), 0) {}

	static CommSeries constant(Zq const &z, int n, u64 a)
	{
		CommSeries s(z, n);
		s.c[0] = a % z.q;
		return s;
	}
	static CommSeries var(Zq const &z, int n, int i)
	{
		CommSeries s(z, n);
		if (n >= 1)
			s.at(i == 0 ? 1 : 0, i == 0 ? 0 : 1) = 1;
		return s;
	}

	u64 at(int a, int b) const
	{
		if (a < 0 || b < 0 || a + b > N)
			return 0;
		return c[std::size_t(a) * (N + 1) + b];
	}
	u64 &at(int a, int b) { return c[std::size_t(a) * (N + 1) + b]; }

	bool is_zero() const
	{
		for (auto x : c)
			if (x)
				return false;
		return true;
	}
	bool operator==(CommSeries const &o) const { return N == o.N && Z.q == o.Z.q && c == o.c; }
	bool operator!=(CommSeries const &o) const { return !(*this == o); }

	void check(CommSeries const &o) const
	{
		if (N != o.N || Z.q != o.Z.q)
			throw ParamError("mismatched commutative series");
	}

	CommSeries &operator+=(CommSeries const &o)
	{
		check(o);
		for (std::size_t i = 0; i < c.size(); ++i)
			c[i] = Z.add(c[i], o.c[i]);
		return *this;
	}
	CommSeries &operator-=(CommSeries const &o)
	{
		check(o);
		for (std::size_t i = 0; i < c.size(); ++i)
			c[i] = Z.sub(c[i], o.c[i]);
		return *this;
	}
	CommSeries &operator*=(u64 s)
	{
		for (auto &x : c)
			x = Z.mul(x, s % Z.q);
		return *this;
	}
	friend CommSeries operator+(CommSeries a, CommSeries const &b) { return a += b; }
	friend CommSeries operator-(CommSeries a, CommSeries const &b) { return a -= b; }
	friend CommSeries operator*(CommSeries a, u64 s) { return a *= s; }
	friend CommSeries operator*(u64 s, CommSeries a) { return a *= s; }
	CommSeries operator-() const
	{
		CommSeries s = *this;
		for (auto &x : s.c)
			x = Z.neg(x);
		return s;
	}

	friend CommSeries operator*(CommSeries const &x, CommSeries const &y)
	{
		x.check(y);
		CommSeries out(x.Z, x.N);
		int N = x.N;
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b) {
				u64 u = x.at(a, b);
				if (!u)
					continue;
				for (int c2 = 0; a + b + c2 <= N; ++c2)
					for (int d = 0; a + b + c2 + d <= N; ++d) {
						u64 v = y.at(c2, d);
						if (v)
							out.at(a + c2, b + d) = (out.at(a + c2, b + d) + u * v) % x.Z.q;
					}
			}
		return out;
	}

	int min_degree() const
	{
		for (int n = 0; n <= N; ++n)
			for (int a = 0; a <= n; ++a)
				if (at(a, n - a))
					return n;
		return N + 1;
	}

	// divisible by T_i: every monomial has positive T_i-degree
	bool divisible(int i) const
	{
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if (at(a, b) && (i == 0 ? a : b) == 0)
					return false;
		return true;
	}
	// exact quotient by T_i; the top degree is lost, so N drops by one
	CommSeries divide(int i) const
	{
		if (!divisible(i))
			throw std::domain_error("series not divisible by T" + std::to_string(i + 1));
		CommSeries out(Z, N - 1);
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if (at(a, b))
					out.at(i == 0 ? a - 1 : a, i == 0 ? b : b - 1) = at(a, b);
		return out;
	}
	CommSeries truncate(int n) const
	{
		CommSeries out(Z, n);
		for (int a = 0; a <= n; ++a)
			for (int b = 0; a + b <= n; ++b)
				out.at(a, b) = at(a, b);
		return out;
	}

	// f(s1, s2) for substitutions with zero constant term
	CommSeries substitute(CommSeries const &s1, CommSeries const &s2) const
	{
		check(s1);
		check(s2);
		if (s1.at(0, 0) || s2.at(0, 0))
			throw ParamError("substitution needs zero constant term");
		CommSeries out(Z, N);
		std::vector<CommSeries> p1{constant(Z, N, 1)}, p2{constant(Z, N, 1)};
		for (int i = 1; i <= N; ++i) {
			p1.push_back(p1.back() * s1);
			p2.push_back(p2.back() * s2);
		}
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if (at(a, b))
					out += (p1[a] * p2[b]) * at(a, b);
		return out;
	}

	// odd/even by total degree
	bool has_odd_terms() const
	{
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if (at(a, b) && (a + b) % 2)
					return true;
		return false;
	}

	nlohmann::json to_json() const
	{
		nlohmann::json j = nlohmann::json::object();
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if (at(a, b))
					j["(" + std::to_string(a) + "," + std::to_string(b) + ")"] = at(a, b);
		return j;
	}
};

// log(1+T_i)
inline CommSeries log1p_var(Zq const &Z, int N, int i)
{
	CommSeries t = CommSeries::var(Z, N, i), out(Z, N), pw = t;
	for (int n = 1; n <= N; ++n) {
		u64 cf = Z.inv(u64(n));
		out += pw * (n % 2 ? cf : Z.neg(cf));
		pw = pw * t;
	}
	return out;
}

// exp(U_i) - 1
inline CommSeries expm1_var(Zq const &Z, int N, int i)
{
	CommSeries t = CommSeries::var(Z, N, i), out(Z, N), pw = t;
	u64 fact = 1;
	for (int n = 1; n <= N; ++n) {
		fact = Z.mul(fact, u64(n));
		out += pw * Z.inv(fact);
		pw = pw * t;
	}
	return out;
}

// (1+T_i)^e - 1, e a residue mod p^k
inline CommSeries power_minus_one(Zq const &Z, int N, int i, u64 e)
{
	CommSeries t = CommSeries::var(Z, N, i), out(Z, N), pw = t;
	for (int j = 1; j <= N; ++j) {
		out += pw * Z.binom(e, j);
		pw = pw * t;
	}
	return out;
}

} // namespace propcal
