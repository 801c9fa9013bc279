#pragma once

#include "propcal/comm_series.hpp"
#include "propcal/filtration.hpp"

#include <json.hpp>
#include <map>
#include <regex>

namespace propcal {

// image of a series under X_i -> T_i (letters commute)
inline CommSeries abelianize(NCSeries const &s, int N)
{
	Zq Z(s.P);
	CommSeries out(Z, N);
	for (int l = 0; l <= std::min(N, s.P.D); ++l)
		for (std::size_t v = 0; v < s.L->pw[l]; ++v)
			if (u64 c = s.at(l, v)) {
				auto m = s.multidegree(l, v);
				out.at(m[0], m[1]) = Z.add(out.at(m[0], m[1]), c);
			}
	return out;
}

// Fox part: M(w) - 1 = A_1 X_1 + A_2 X_2, A_i read off the words ending in X_i
inline NCSeries fox_part(GroupElement const &w, int i)
{
	NCSeries const &s = w.s;
	NCSeries out(s.P);
	for (int l = 1; l <= s.P.D; ++l)
		for (std::size_t v = 0; v < s.L->pw[l]; ++v)
			if (u64 c = s.at(l, v); c && int(v % 2) == i)
				out.at(l - 1, v / 2) = c;
	return out;
}

// coordinate G of w = G.z in Pi(2)/[Pi(2),Pi(2)]; action g.w = g w g^-1, T_i = x_i - 1.
// Known through degree D-2.
inline CommSeries module_coordinate(GroupElement const &w)
{
	TruncParams const &P = w.params();
	if (P.D < 2)
		throw ParamError("module coordinates need D >= 2");
	auto lp = w.s.linear_part();
	if (lp[0] || lp[1])
		throw std::domain_error("element is not in the commutator subgroup");
	int N = P.D - 1;
	CommSeries a1 = abelianize(fox_part(w, 0), N), a2 = abelianize(fox_part(w, 1), N);
	// ab(A_1) = T_2 G, ab(A_2) = -T_1 G
	CommSeries G = a1.divide(1);
	CommSeries check = (-a2).divide(0);
	if (G != check)
		throw std::logic_error("inconsistent Fox derivatives");
	return G;
}

// T1^a T2^b . z lifted as [x1,[x1,..[x2,[x2,..z]]]]
inline GroupElement module_lift(TruncParams const &P, CommSeries const &G)
{
	auto x1 = GroupElement::generator(P, 0), x2 = GroupElement::generator(P, 1);
	auto z = commutator(x2, x1);
	GroupElement out = GroupElement::identity(P);
	for (int a = 0; a <= G.N; ++a)
		for (int b = 0; a + b <= G.N; ++b)
			if (u64 c = G.at(a, b)) {
				GroupElement e = z;
				for (int j = 0; j < b; ++j)
					e = commutator(x2, e);
				for (int j = 0; j < a; ++j)
					e = commutator(x1, e);
				out = out * pow(e, c);
			}
	return out;
}

inline CommSeries module_action(CommSeries const &r, CommSeries const &w) { return r * w; }

inline CommSeries raise(CommSeries const &s, int N)
{
	CommSeries out(s.Z, N);
	for (int a = 0; a <= std::min(N, s.N); ++a)
		for (int b = 0; a + b <= std::min(N, s.N); ++b)
			out.at(a, b) = s.at(a, b);
	return out;
}

// element of the unipotent part of the metabelian automorphisms: f(x_i) x_i^-1 = G_i z
struct MetAut {
	CommSeries G1, G2;

	static MetAut identity(TruncParams const &P)
	{
		Zq Z(P);
		return {CommSeries(Z, P.D - 2), CommSeries(Z, P.D - 2)};
	}

	// coordinate of f(z): (1 - T1 G2 + T2 G1) z
	CommSeries z_image() const
	{
		int N = G1.N;
		auto T1 = CommSeries::var(G1.Z, N, 0), T2 = CommSeries::var(G1.Z, N, 1);
		return CommSeries::constant(G1.Z, N, 1) - T1 * G2 + T2 * G1;
	}
	// T1 G2 - G1 T2 at the pair's own truncation
	CommSeries relation_defect() const
	{
		int N = G1.N;
		auto T1 = CommSeries::var(G1.Z, N, 0), T2 = CommSeries::var(G1.Z, N, 1);
		return T1 * G2 - G1 * T2;
	}
	bool relation_holds() const { return relation_defect().is_zero(); }

	Automorphism to_automorphism(TruncParams const &P) const
	{
		return {module_lift(P, G1) * GroupElement::generator(P, 0),
		        module_lift(P, G2) * GroupElement::generator(P, 1)};
	}

	// f o g
	friend MetAut operator*(MetAut const &f, MetAut const &g)
	{
		auto u = f.z_image();
		return {g.G1 * u + f.G1, g.G2 * u + f.G2};
	}
};

inline MetAut extract_G(Automorphism const &f)
{
	if (f.chi(0) != 1 || f.chi(1) != 1 || !f.diagonal())
		throw std::domain_error("automorphism moves the abelianization");
	MetAut m{module_coordinate(quotient_x(f, 0)), module_coordinate(quotient_x(f, 1))};
	if (!m.relation_holds())
		throw std::domain_error("automorphism does not preserve <z>");
	return m;
}

// H(f) = G1/T1 = G2/T2, known through degree D-3
inline CommSeries H_of(MetAut const &f)
{
	if (!f.relation_holds())
		throw std::domain_error("relation T1 G2 = G1 T2 fails");
	CommSeries h1 = f.G1.divide(0), h2 = f.G2.divide(1);
	if (h1 != h2)
		throw std::logic_error("H quotients disagree");
	return h1;
}

inline MetAut from_H(CommSeries const &h)
{
	int N = h.N + 1;
	auto T1 = CommSeries::var(h.Z, N, 0), T2 = CommSeries::var(h.Z, N, 1);
	CommSeries hh = raise(h, N);
	return {T1 * hh, T2 * hh};
}

// T_i -> (1+T_i)^{e_i} - 1
inline CommSeries torus_substitute(CommSeries const &h, u64 e1, u64 e2)
{
	return h.substitute(power_minus_one(h.Z, h.N, 0, e1), power_minus_one(h.Z, h.N, 1, e2));
}

// predicted H(gamma f gamma^-1) for gamma with characters (c1,c2)
inline CommSeries det_twist_prediction(CommSeries const &h, u64 c1, u64 c2)
{
	Zq const &Z = h.Z;
	return torus_substitute(h, c1, c2) * Z.mul(c1, c2);
}

struct TwistReport {
	bool pass = false;
	CommSeries got, predicted;
};

inline TwistReport det_twist_check(IdealFamily &fam, u64 c1, u64 c2, CommSeries const &h)
{
	TruncParams const &P = fam.P;
	auto g = torus_lift(fam, c1, c2);
	auto f = from_H(h).to_automorphism(P);
	auto conj = g * f * g.inverse();
	TwistReport r;
	r.got = H_of(extract_G(conj));
	r.predicted = det_twist_prediction(h, c1, c2);
	r.pass = r.got == r.predicted;
	return r;
}

using KappaTable = std::map<BiDegree, u64>;

inline u64 factorial_mod(Zq const &Z, int n)
{
	u64 f = 1;
	for (int i = 2; i <= n; ++i)
		f = Z.mul(f, u64(i));
	return f;
}

// sum over |m| even >= 2 of kappa_{m+(1,1)} U1^m1 U2^m2 / ((1-p^|m|) m1! m2!)
// written in T_i with U_i = log(1+T_i)
inline CommSeries alpha_from_kappa(Zq const &Z, int N, KappaTable const &kt)
{
	auto U1 = log1p_var(Z, N, 0), U2 = log1p_var(Z, N, 1);
	CommSeries out(Z, N);
	for (auto const &[n, kap] : kt) {
		int m1 = n.m1 - 1, m2 = n.m2 - 1;
		if (m1 < 0 || m2 < 0)
			throw ParamError("kappa index " + n.str() + " is not above (1,1)");
		if ((m1 + m2) % 2 || m1 + m2 < 2)
			throw ParamError("kappa index " + n.str() + " has odd or zero weight");
		if (m1 + m2 > N)
			throw ParamError("kappa index " + n.str() + " beyond truncation");
		u64 den = Z.mul(Z.sub(1, Z.pow(Z.p, u64(m1 + m2))),
		                Z.mul(factorial_mod(Z, m1), factorial_mod(Z, m2)));
		CommSeries mono = CommSeries::constant(Z, N, Z.mul(kap % Z.q, Z.inv(den)));
		for (int i = 0; i < m1; ++i)
			mono = mono * U1;
		for (int i = 0; i < m2; ++i)
			mono = mono * U2;
		out += mono;
	}
	return out;
}

// alpha rewritten in U-coordinates
inline CommSeries to_u_coordinates(CommSeries const &a)
{
	return a.substitute(expm1_var(a.Z, a.N, 0), expm1_var(a.Z, a.N, 1));
}

inline KappaTable kappa_from_alpha(CommSeries const &a)
{
	Zq const &Z = a.Z;
	CommSeries u = to_u_coordinates(a);
	KappaTable kt;
	for (int m1 = 0; m1 <= a.N; ++m1)
		for (int m2 = 0; m1 + m2 <= a.N; ++m2) {
			u64 c = u.at(m1, m2);
			if (!c)
				continue;
			if ((m1 + m2) % 2 || m1 + m2 == 0)
				throw std::domain_error("odd or constant U-term at (" + std::to_string(m1) +
				                        "," + std::to_string(m2) + ")");
			u64 den = Z.mul(Z.sub(1, Z.pow(Z.p, u64(m1 + m2))),
			                Z.mul(factorial_mod(Z, m1), factorial_mod(Z, m2)));
			kt[{m1 + 1, m2 + 1}] = Z.mul(c, den);
		}
	return kt;
}

inline KappaTable kappa_from_json(Zq const &Z, nlohmann::json const &j)
{
	static const std::regex key(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
	KappaTable kt;
	for (auto const &[k, v] : j.items()) {
		std::smatch mt;
		if (!std::regex_match(k, mt, key))
			throw ParamError("bad kappa key '" + k + "'");
		if (!v.is_number_integer())
			throw ParamError("kappa value for '" + k + "' is not an integer");
		kt[{std::stoi(mt[1]), std::stoi(mt[2])}] = Z.from(v.get<i64>());
	}
	return kt;
}

inline KappaTable normalize(Zq const &Z, KappaTable kt)
{
	for (auto it = kt.begin(); it != kt.end();) {
		it->second %= Z.q;
		it = it->second ? std::next(it) : kt.erase(it);
	}
	return kt;
}

} // namespace propcal
