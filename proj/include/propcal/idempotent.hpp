#pragma once

#include "propcal/comm_series.hpp"
#include "propcal/ncseries.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace propcal {

// A model supplies: Elem, identity(), mul(a,b), pow(a,e), act(a) = delta a delta^-1,
// eq(a,b), Z (the scalars) and order (multiplicative order of delta, dividing p-1).

// truncated unit group of rank r with delta: X_i -> omega_i X_i
struct SeriesModel {
	using Elem = GroupElement;
	TruncParams P;
	Zq Z;
	int rank = 2;
	std::vector<u64> omega;

	SeriesModel(TruncParams const &p, std::vector<u64> om)
	    : P(p), Z(p), rank(int(om.size())), omega(std::move(om))
	{
		for (u64 w : omega)
			if (Z.pow(w, u64(P.p - 1)) != 1)
				throw ParamError("delta scalars must be (p-1)-th roots of unity");
	}
	Elem identity() const { return GroupElement::identity(P, rank); }
	Elem mul(Elem const &a, Elem const &b) const { return a * b; }
	Elem pow(Elem const &a, u64 e) const { return propcal::pow(a, e); }
	Elem act(Elem const &a) const
	{
		std::vector<NCSeries> img;
		for (int i = 0; i < rank; ++i)
			img.push_back(NCSeries::letter(P, i, rank) * omega[i]);
		return GroupElement(substitute(a.s, img));
	}
	bool eq(Elem const &a, Elem const &b) const { return a == b; }
};

// (Z/q)^n written additively, delta a matrix of order dividing p-1
struct AbelianModel {
	using Elem = std::vector<u64>;
	Zq Z;
	int n = 1;
	std::vector<std::vector<u64>> delta;

	AbelianModel(Zq const &z, std::vector<std::vector<u64>> d)
	    : Z(z), n(int(d.size())), delta(std::move(d))
	{
	}
	Elem identity() const { return Elem(n, 0); }
	Elem mul(Elem const &a, Elem const &b) const
	{
		Elem c(n);
		for (int i = 0; i < n; ++i)
			c[i] = Z.add(a[i], b[i]);
		return c;
	}
	Elem pow(Elem const &a, u64 e) const
	{
		Elem c(n);
		for (int i = 0; i < n; ++i)
			c[i] = Z.mul(a[i], e % Z.q);
		return c;
	}
	Elem act(Elem const &a) const
	{
		Elem c(n, 0);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				c[i] = Z.add(c[i], Z.mul(delta[i][j], a[j]));
		return c;
	}
	bool eq(Elem const &a, Elem const &b) const { return a == b; }
};

// (g . d g^{chi^-m} d^-1 ... d^{p-2} g^{chi^{-m(p-2)}} d^{-(p-2)})^{1/(p-1)}
template <class Model>
typename Model::Elem epsilon_step(Model const &M, typename Model::Elem const &g, u64 chi, int m)
{
	auto const &Z = M.Z;
	int p = int(Z.p);
	u64 cinv = Z.pow(Z.inv(chi), u64(m));
	auto out = M.identity();
	for (int j = 0; j <= p - 2; ++j) {
		auto t = M.pow(g, Z.pow(cinv, u64(j)));
		for (int r = 0; r < j; ++r)
			t = M.act(t);
		out = M.mul(out, t);
	}
	return M.pow(out, Z.inv(u64(p - 1)));
}

template <class Model> struct LimitResult {
	typename Model::Elem value;
	int iterations = 0;
};

template <class Model>
LimitResult<Model> idempotent_limit(Model const &M, typename Model::Elem const &g, u64 chi, int m,
                                    int max_iter)
{
	if (max_iter < 1)
		throw ParamError("max_iter must be positive");
	auto cur = g;
	for (int it = 1; it <= max_iter; ++it) {
		auto nxt = epsilon_step(M, cur, chi, m);
		if (M.eq(nxt, cur))
			return {cur, it};
		cur = nxt;
	}
	throw std::runtime_error("idempotent limit did not stabilize within " +
	                         std::to_string(max_iter) + " iterations");
}

// delta h delta^-1 == h^{chi^m}
template <class Model>
bool twist_identity(Model const &M, typename Model::Elem const &h, u64 chi, int m)
{
	return M.eq(M.act(h), M.pow(h, M.Z.pow(chi, u64(m))));
}

// gamma s gamma^-1 s^{-chi^m1}, then projected by the limit when delta is given
inline GroupElement sigma_recursion(GroupElement const &s, GroupElement const &gamma, u64 chi_val,
                                    int m1, SeriesModel const *delta = nullptr,
                                    u64 delta_chi = 0, int max_iter = 0)
{
	Zq Z(s.params());
	auto t = conjugate(gamma, s) * pow(s, Z.neg(Z.pow(chi_val, u64(m1))));
	if (!delta)
		return t;
	int it = max_iter ? max_iter : s.params().k * (s.params().D + 1);
	return idempotent_limit(*delta, t, delta_chi, m1, it).value;
}

// projector onto the chi^m eigencomponent in an abelian model with
// delta = Pm diag(w) Pm^-1; returns the projection computed directly
inline std::vector<u64> eigen_projection(Zq const &Z, std::vector<std::vector<u64>> const &Pm,
                                         std::vector<std::vector<u64>> const &Pinv,
                                         std::vector<u64> const &w, std::vector<u64> const &g,
                                         u64 target)
{
	int n = int(g.size());
	std::vector<u64> y(n, 0), out(n, 0);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			y[i] = Z.add(y[i], Z.mul(Pinv[i][j], g[j]));
	for (int i = 0; i < n; ++i)
		if (w[i] != target)
			y[i] = 0;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			out[i] = Z.add(out[i], Z.mul(Pm[i][j], y[j]));
	return out;
}

// Lambda-module generated by v1, v2 with (S1 - (c1-1)) v2 = (S2 - (c2-1)) v1,
// gamma_i = 1 + S_i. Elements are (a1, a2) with a_i in Z/q[S1,S2] truncated at N.
struct AnnModule {
	Zq Z;
	int N = 8;
	u64 c1 = 1, c2 = 1;

	using Elem = std::pair<CommSeries, CommSeries>;

	Elem zero() const { return {CommSeries(Z, N), CommSeries(Z, N)}; }

	// one rewrite at the v2-monomial S1^a S2^b
	void rewrite(Elem &x, int a, int b) const
	{
		u64 c = x.second.at(a, b);
		if (!c || a == 0)
			return;
		x.second.at(a, b) = 0;
		x.second.at(a - 1, b) = Z.add(x.second.at(a - 1, b), Z.mul(c, Z.sub(c1, 1)));
		if (a - 1 + b + 1 <= N)
			x.first.at(a - 1, b + 1) = Z.add(x.first.at(a - 1, b + 1), c);
		x.first.at(a - 1, b) = Z.sub(x.first.at(a - 1, b), Z.mul(c, Z.sub(c2, 1)));
	}

	Elem reduce(Elem x) const
	{
		for (int a = N; a >= 1; --a)
			for (int b = 0; a + b <= N; ++b)
				rewrite(x, a, b);
		return x;
	}

	// same reduction with rewrite sites picked at random
	Elem reduce_random(Elem x, std::mt19937_64 &rng) const
	{
		for (;;) {
			std::vector<std::pair<int, int>> sites;
			for (int a = 1; a <= N; ++a)
				for (int b = 0; a + b <= N; ++b)
					if (x.second.at(a, b))
						sites.push_back({a, b});
			if (sites.empty())
				return x;
			auto [a, b] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
			rewrite(x, a, b);
		}
	}

	bool normal(Elem const &x) const
	{
		for (int a = 1; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if (x.second.at(a, b))
					return false;
		return true;
	}

	// gamma_i - u as a polynomial in S
	CommSeries gamma_minus(int i, u64 u) const
	{
		return CommSeries::var(Z, N, i) + CommSeries::constant(Z, N, Z.sub(1, u % Z.q));
	}
};

struct TwoRouteResult {
	bool equal = false;
	int degree = 0;
	AnnModule::Elem route1, route2;
};

// prod_{i<n1}(g1 - c1^{1+i(p-1)}) prod_{j<n2}(g2 - c2^{1+j(p-1)}) with the i=0 (resp.
// j=0) factor moved onto the other generator: route 1 acts on v1, route 2 on v2
inline TwoRouteResult two_route_check(int p, int k, int N, int n1, int n2, u64 c1, u64 c2)
{
	if (n1 < 1 || n2 < 1)
		throw ParamError("n1, n2 must be positive");
	if (n1 + n2 - 1 > N)
		throw ParamError("route product degree exceeds the Lambda truncation");
	AnnModule M{Zq(u64(p), k), N, c1, c2};
	Zq const &Z = M.Z;
	auto common = CommSeries::constant(Z, N, 1);
	for (int i = 1; i < n1; ++i)
		common = common * M.gamma_minus(0, Z.pow(c1, u64(1 + i * (p - 1))));
	for (int j = 1; j < n2; ++j)
		common = common * M.gamma_minus(1, Z.pow(c2, u64(1 + j * (p - 1))));
	TwoRouteResult r;
	r.degree = n1 + n2 - 1;
	auto e1 = M.zero(), e2 = M.zero();
	e1.first = common * M.gamma_minus(1, c2);
	e2.second = common * M.gamma_minus(0, c1);
	r.route1 = M.reduce(e1);
	r.route2 = M.reduce(e2);
	r.equal = r.route1 == r.route2;
	return r;
}

} // namespace propcal
