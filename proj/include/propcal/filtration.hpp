#pragma once

#include "propcal/ideals.hpp"

#include <array>
#include <random>
#include <json.hpp>

namespace propcal {

enum class Status { in, out, undecidable };

inline char const *status_name(Status s)
{
	switch (s) {
	case Status::in:
		return "in";
	case Status::out:
		return "out";
	default:
		return "undecidable_at_truncation";
	}
}

struct MembershipVerdict {
	Status status = Status::in;
	BiDegree witness;  // bidegree of the first obstruction
	Vec component;     // its Lyndon coordinates, reduced against the ideal
	int degree = 0;

	bool in() const { return status == Status::in; }
	nlohmann::json to_json() const
	{
		nlohmann::json j;
		j["status"] = status_name(status);
		if (status == Status::out) {
			j["witness"] = witness.str();
			j["degree"] = degree;
			j["component"] = component;
		}
		return j;
	}
};

// g in Pi(m) * Gamma_{D+1}: peel leading terms off with stored lifts
inline MembershipVerdict pi_membership(IdealFamily &fam, GroupElement g, BiDegree m)
{
	TruncParams const &P = fam.P;
	if (m.total() == 0)
		return {};
	MembershipVerdict out;
	if (m.total() > P.D + 1) {
		if (g.is_identity()) {
			out.status = Status::undecidable;
			return out;
		}
	}
	for (int guard = 0; guard <= P.D + 1; ++guard) {
		int n = g.degree();
		if (n > P.D)
			return out;
		auto parts = fam.B.decompose(g.s, n);
		GroupElement corr = GroupElement::identity(P);
		for (auto const &[md, vec] : parts) {
			auto const &pc = fam.piece(m, md[0], md[1]);
			Vec coef;
			Vec rem = pc.h.reduce(vec, &coef);
			bool zero = std::all_of(rem.begin(), rem.end(), [](u64 x) { return x == 0; });
			if (!zero) {
				out.status = Status::out;
				out.witness = {md[0], md[1]};
				out.component = rem;
				out.degree = n;
				return out;
			}
			for (std::size_t i = 0; i < coef.size(); ++i)
				if (coef[i])
					corr = corr * pow(pc.lifts[i], coef[i]);
		}
		g = inv(corr) * g;
	}
	throw std::logic_error("membership reduction did not terminate");
}

// lower central series by degree: g in Gamma_n
inline bool lower_central_member(GroupElement const &g, int n) { return g.degree() >= n; }

// automorphism of the truncated free group, given by the images of x1, x2
class Automorphism {
public:
	std::array<GroupElement, 2> img;

	Automorphism() = default;
	Automorphism(GroupElement a, GroupElement b) : img{std::move(a), std::move(b)}
	{
		if (!invertible())
			throw ParamError("images do not generate: abelianization is singular");
	}
	static Automorphism identity(TruncParams const &P)
	{
		return {GroupElement::generator(P, 0), GroupElement::generator(P, 1)};
	}
	static Automorphism inner(GroupElement const &w)
	{
		TruncParams const &P = w.params();
		return {conjugate(w, GroupElement::generator(P, 0)),
		        conjugate(w, GroupElement::generator(P, 1))};
	}

	TruncParams const &params() const { return img[0].params(); }

	// abelianization matrix M[i][j] = coefficient of X_j in f(x_i)
	std::array<std::array<u64, 2>, 2> matrix() const
	{
		std::array<std::array<u64, 2>, 2> M{};
		for (int i = 0; i < 2; ++i) {
			auto lp = img[i].s.linear_part();
			M[i][0] = lp[0];
			M[i][1] = lp[1];
		}
		return M;
	}
	bool invertible() const
	{
		auto M = matrix();
		Zq Z(params());
		return Z.is_unit(Z.sub(Z.mul(M[0][0], M[1][1]), Z.mul(M[0][1], M[1][0])));
	}
	bool diagonal() const
	{
		auto M = matrix();
		return M[0][1] == 0 && M[1][0] == 0;
	}
	u64 chi(int i) const { return matrix()[i][i]; }

	NCSeries apply(NCSeries const &s) const
	{
		return substitute(s, {img[0].augmentation(), img[1].augmentation()});
	}
	GroupElement operator()(GroupElement const &g) const { return GroupElement(apply(g.s)); }

	// (f * g)(w) = f(g(w))
	friend Automorphism operator*(Automorphism const &f, Automorphism const &g)
	{
		return {f(g.img[0]), f(g.img[1])};
	}
	bool operator==(Automorphism const &o) const { return img == o.img; }

	Automorphism inverse() const
	{
		TruncParams const &P = params();
		Zq Z(P);
		auto M = matrix();
		u64 det = Z.sub(Z.mul(M[0][0], M[1][1]), Z.mul(M[0][1], M[1][0]));
		u64 di = Z.inv(det);
		u64 Mi[2][2] = {{Z.mul(M[1][1], di), Z.neg(Z.mul(M[0][1], di))},
		                {Z.neg(Z.mul(M[1][0], di)), Z.mul(M[0][0], di)}};
		std::array<NCSeries, 2> X{NCSeries::letter(P, 0), NCSeries::letter(P, 1)};
		std::array<NCSeries, 2> G;
		for (int i = 0; i < 2; ++i)
			G[i] = X[0] * Mi[i][0] + X[1] * Mi[i][1];
		for (int it = 0; it <= P.D; ++it) {
			std::array<NCSeries, 2> E;
			for (int i = 0; i < 2; ++i)
				E[i] = substitute(img[i].augmentation(), {G[0], G[1]}) - X[i];
			if (E[0].is_zero() && E[1].is_zero())
				break;
			for (int i = 0; i < 2; ++i)
				G[i] = G[i] - (E[0] * Mi[i][0] + E[1] * Mi[i][1]);
		}
		auto one = NCSeries::one(P);
		return {GroupElement(one + G[0]), GroupElement(one + G[1])};
	}
};

inline GroupElement quotient_x(Automorphism const &f, int i)
{
	auto x = GroupElement::generator(f.params(), i);
	return f.img[i] * inv(x);
}

struct AutVerdict {
	bool in = false;
	bool diagonal = true;
	MembershipVerdict slot[2];
};

// f in F^m: f(x)x^-1 in Pi(m+(1,0)) and f(y)y^-1 in Pi(m+(0,1))
inline AutVerdict aut_filtration_membership(IdealFamily &fam, Automorphism const &f, BiDegree m)
{
	AutVerdict v;
	if (!f.diagonal()) {
		v.diagonal = false;
		return v;
	}
	v.slot[0] = pi_membership(fam, quotient_x(f, 0), m + BiDegree{1, 0});
	v.slot[1] = pi_membership(fam, quotient_x(f, 1), m + BiDegree{0, 1});
	v.in = v.slot[0].in() && v.slot[1].in();
	return v;
}

// i_{m,side}(f): the pair f(x)x^-1, f(y)y^-1; classes are compared via membership
// in the next ideal
struct ComparisonPair {
	GroupElement a, b;
	BiDegree ma, mb; // where they live
	BiDegree shift;  // (1,0) or (0,1)
};

inline ComparisonPair comparison_map(IdealFamily &fam, Automorphism const &f, BiDegree m, int side)
{
	if (!aut_filtration_membership(fam, f, m).in)
		throw std::domain_error("automorphism not in F^" + m.str());
	BiDegree sh = side == 1 ? BiDegree{1, 0} : BiDegree{0, 1};
	return {quotient_x(f, 0), quotient_x(f, 1), m + BiDegree{1, 0}, m + BiDegree{0, 1}, sh};
}

// class of g in gr^n (shifted by sh) vanishes
inline bool graded_zero(IdealFamily &fam, GroupElement const &g, BiDegree n, BiDegree sh)
{
	return pi_membership(fam, g, n + sh).in();
}

inline bool comparison_zero(IdealFamily &fam, ComparisonPair const &c)
{
	return graded_zero(fam, c.a, c.ma, c.shift) && graded_zero(fam, c.b, c.mb, c.shift);
}

// group element with leading term given by a Howell combination of piece rows
inline GroupElement lift_combination(TruncParams const &P, IdealFamily::Piece const &pc,
                                     Vec const &coef)
{
	GroupElement g = GroupElement::identity(P);
	for (std::size_t i = 0; i < coef.size(); ++i)
		if (coef[i])
			g = g * pow(pc.lifts[i], coef[i]);
	return g;
}

inline GroupElement random_word(TruncParams const &P, std::mt19937_64 &rng, int len = 3)
{
	std::uniform_int_distribution<int> letter(0, 1);
	std::uniform_int_distribution<i64> ex(-3, 3);
	GroupElement g = GroupElement::identity(P);
	for (int i = 0; i < len; ++i)
		g = g * pow_int(GroupElement::generator(P, letter(rng)), ex(rng));
	return g;
}

// random element of Pi(m) built straight from the recursive definition:
// conjugates of generator powers at |m| = 1, commutators across a split above
inline GroupElement construct_in_pi(TruncParams const &P, BiDegree m, std::mt19937_64 &rng,
                                    int factors = 2)
{
	std::uniform_int_distribution<i64> ex(1, i64(P.p) * 2);
	GroupElement g = GroupElement::identity(P);
	for (int f = 0; f < factors; ++f) {
		GroupElement h;
		if (m.total() == 1) {
			h = pow_int(GroupElement::generator(P, m.m1 == 1 ? 0 : 1), ex(rng));
		} else {
			std::vector<BiDegree> splits;
			for (int a = 0; a <= m.m1; ++a)
				for (int b = 0; b <= m.m2; ++b)
					if (a + b > 0 && a + b < m.total())
						splits.push_back({a, b});
			auto s = splits[std::uniform_int_distribution<std::size_t>(0, splits.size() - 1)(rng)];
			BiDegree rest{m.m1 - s.m1, m.m2 - s.m2};
			h = pow_int(commutator(construct_in_pi(P, s, rng, 1), construct_in_pi(P, rest, rng, 1)),
			            ex(rng));
		}
		g = g * conjugate(random_word(P, rng), h);
	}
	return g;
}

// f(x) = A x, f(y) = B y with A in Pi(m+(1,0)), B in Pi(m+(0,1)); lies in F^m
inline Automorphism random_filtered_aut(TruncParams const &P, BiDegree m, std::mt19937_64 &rng)
{
	auto A = construct_in_pi(P, m + BiDegree{1, 0}, rng);
	auto B = construct_in_pi(P, m + BiDegree{0, 1}, rng);
	return {A * GroupElement::generator(P, 0), B * GroupElement::generator(P, 1)};
}

// gamma with abelianization diag(c1,c2) and gamma(z) = z^{c1 c2}
inline Automorphism torus_lift(IdealFamily &fam, u64 c1, u64 c2)
{
	TruncParams const &P = fam.P;
	Zq Z(P);
	if (!Z.is_unit(c1) || !Z.is_unit(c2))
		throw ParamError("torus lift needs unit characters");
	auto x1 = GroupElement::generator(P, 0), x2 = GroupElement::generator(P, 1);
	auto z = commutator(x2, x1);
	auto zc = pow(z, Z.mul(c1, c2));
	GroupElement A = pow(x1, c1), Bg = pow(x2, c2);
	BiDegree mA = c2 % Z.q == 1 ? BiDegree{2, 0} : BiDegree{1, 1};
	BiDegree mB{1, 1};
	auto X1 = NCSeries::letter(P, 0), X2 = NCSeries::letter(P, 1);
	for (int it = 0; it <= P.D; ++it) {
		GroupElement e = commutator(Bg, A) * inv(zc);
		int n = e.degree();
		if (n > P.D)
			break;
		auto parts = fam.B.decompose(e.s, n);
		GroupElement corrA = GroupElement::identity(P), corrB = corrA;
		for (auto const &[md, vec] : parts) {
			int a = md[0], b = md[1];
			auto const &pb = fam.piece(mB, a - 1, b);
			auto const &pa = fam.piece(mA, a, b - 1);
			std::vector<Vec> cols;
			for (auto const &s : pb.series)
				cols.push_back(fam.B.block_coords(X1.bracket(s) * Z.neg(c1), md));
			for (auto const &s : pa.series)
				cols.push_back(fam.B.block_coords(X2.bracket(s) * c2, md));
			Vec target(vec.size());
			for (std::size_t i = 0; i < vec.size(); ++i)
				target[i] = Z.neg(vec[i]);
			Vec u;
			if (!solve_linear(Z, cols, target, u))
				throw std::logic_error("torus lift: defect not solvable in bidegree (" +
				                       std::to_string(a) + "," + std::to_string(b) + ")");
			Vec ub(u.begin(), u.begin() + std::ptrdiff_t(pb.series.size()));
			Vec ua(u.begin() + std::ptrdiff_t(pb.series.size()), u.end());
			corrB = corrB * lift_combination(P, pb, ub);
			corrA = corrA * lift_combination(P, pa, ua);
		}
		A = A * corrA;
		Bg = Bg * corrB;
	}
	Automorphism g(A, Bg);
	if (commutator(g.img[1], g.img[0]) != zc)
		throw std::logic_error("torus lift did not converge");
	return g;
}

struct InvariantReport {
	int window = 0;
	int dim = 0;              // pairs (i<j<=window)
	int interior_dim = 0;     // pairs with j <= window - 1
	int kernel_length = 0;    // composition length of the full kernel
	int interior_kernel_length = 0;
	std::vector<std::pair<int, int>> basis;
	bool interior_zero() const { return interior_kernel_length == 0; }
};

// conjugation by x2 minus identity on span{[w_i,w_j]} modulo Pi(3,0):
// [w_i,w_j] -> [w_{i+1},w_{j+1}] + [w_{i+1},w_j] + [w_i,w_{j+1}]
inline InvariantReport x2_invariants(Zq const &Z, int window, int max_window = 64)
{
	if (window < 2 || window > max_window)
		throw ParamError("window out of range");
	InvariantReport rep;
	rep.window = window;
	std::map<std::pair<int, int>, int> idx;
	for (int j = 1; j <= window; ++j)
		for (int i = 0; i < j; ++i) {
			idx[{i, j}] = int(rep.basis.size());
			rep.basis.push_back({i, j});
		}
	rep.dim = int(rep.basis.size());
	auto image = [&](int i, int j) {
		Vec v(rep.dim, 0);
		auto add = [&](int a, int b) {
			if (a == b || a > window || b > window)
				return;
			if (a < b)
				v[idx[{a, b}]] = Z.add(v[idx[{a, b}]], 1);
			else
				v[idx[{b, a}]] = Z.sub(v[idx[{b, a}]], 1);
		};
		add(i + 1, j + 1);
		add(i + 1, j);
		add(i, j + 1);
		return v;
	};
	std::vector<Vec> all, interior;
	for (auto [i, j] : rep.basis) {
		all.push_back(image(i, j));
		if (j <= window - 1)
			interior.push_back(image(i, j));
	}
	rep.interior_dim = int(interior.size());
	rep.kernel_length = kernel(Z, rep.dim, all).length();
	rep.interior_kernel_length = kernel(Z, rep.dim, interior).length();
	return rep;
}

// w_0 = x1, w_n = [x2, w_{n-1}]
inline GroupElement w_element(TruncParams const &P, int n)
{
	auto x2 = GroupElement::generator(P, 1);
	GroupElement w = GroupElement::generator(P, 0);
	for (int i = 0; i < n; ++i)
		w = commutator(x2, w);
	return w;
}

// x2 [w_i,w_j] x2^-1 agrees with the four-term product modulo Pi(3,0)
inline bool four_term_check(IdealFamily &fam, int i, int j)
{
	TruncParams const &P = fam.P;
	auto x2 = GroupElement::generator(P, 1);
	auto W = [&](int n) { return w_element(P, n); };
	auto lhs = conjugate(x2, commutator(W(i), W(j)));
	auto rhs = commutator(W(i + 1), W(j + 1)) * commutator(W(i + 1), W(j)) *
	           commutator(W(i), W(j + 1)) * commutator(W(i), W(j));
	return pi_membership(fam, lhs * inv(rhs), {3, 0}).in();
}

} // namespace propcal
