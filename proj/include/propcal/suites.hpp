#pragma once

#include "propcal/census.hpp"
#include "propcal/filtration.hpp"
#include "propcal/freebasis.hpp"
#include "propcal/idempotent.hpp"
#include "propcal/lie.hpp"
#include "propcal/metabelian.hpp"
#include "propcal/words.hpp"

#include <deque>
#include <functional>
#include <json.hpp>
#include <string>
#include <thread>
#include <vector>

namespace propcal {

struct SuiteConfig {
	int p = 7, k = 1, D = 5;
	u64 seed = 1;
	int trials = 0; // 0: suite default
	int jobs = 1;
	int maxdeg = 0; // 0: suite default
	int r = 1;
	int seeds = 3;

	TruncParams params() const { return TruncParams(p, k, D); }
	nlohmann::json to_json() const
	{
		return {{"p", p}, {"k", k}, {"deg", D}, {"seed", seed}, {"trials", trials},
		        {"maxdeg", maxdeg}, {"r", r}, {"seeds", seeds}};
	}
};

struct Check {
	std::string name;
	long trials = 0, failures = 0;
	bool advisory = false; // reported, never fails the suite
	nlohmann::json witness{};
	nlohmann::json info{};

	bool pass() const { return failures == 0; }
	void record(bool ok, nlohmann::json const &w = nullptr)
	{
		++trials;
		if (!ok && failures++ == 0)
			witness = w;
	}
};

struct SuiteReport {
	std::string suite;
	nlohmann::json params;
	std::deque<Check> checks{}; // stable references for add()

	bool pass() const
	{
		for (auto const &c : checks)
			if (!c.advisory && !c.pass())
				return false;
		return true;
	}
	Check &add(std::string name)
	{
		checks.push_back({std::move(name)});
		return checks.back();
	}
	Check const *find(std::string const &name) const
	{
		for (auto const &c : checks)
			if (c.name == name)
				return &c;
		return nullptr;
	}
	nlohmann::json to_json() const
	{
		nlohmann::json cs = nlohmann::json::array();
		for (auto const &c : checks) {
			nlohmann::json j{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures},
			                 {"pass", c.pass()}};
			if (c.advisory)
				j["advisory"] = true;
			if (!c.pass())
				j["witness"] = c.witness;
			if (!c.info.is_null())
				j["info"] = c.info;
			cs.push_back(j);
		}
		return {{"suite", suite}, {"params", params}, {"pass", pass()}, {"checks", cs}};
	}
};

// runs f(i) for i < n over the given number of threads
inline void parallel_for(int n, int jobs, std::function<void(int)> const &f)
{
	jobs = std::max(1, std::min(jobs, n));
	if (jobs == 1) {
		for (int i = 0; i < n; ++i)
			f(i);
		return;
	}
	std::vector<std::thread> pool;
	for (int j = 0; j < jobs; ++j)
		pool.emplace_back([&, j] {
			for (int i = j; i < n; i += jobs)
				f(i);
		});
	for (auto &t : pool)
		t.join();
}

inline CommSeries random_comm(Zq const &Z, int N, std::mt19937_64 &rng)
{
	CommSeries s(Z, N);
	std::uniform_int_distribution<u64> c(0, Z.q - 1);
	for (int a = 0; a <= N; ++a)
		for (int b = 0; a + b <= N; ++b)
			s.at(a, b) = c(rng);
	return s;
}

inline std::vector<BiDegree> bidegrees_up_to(int n)
{
	std::vector<BiDegree> out;
	for (int t = 1; t <= n; ++t)
		for (int a = t; a >= 0; --a)
			out.push_back({a, t - a});
	return out;
}

// filtration: Pi(m,0) = Pi(m,1), monotonicity, Pi(m) in Gamma_|m|, constructive generation,
// plus the x2-invariant and four-term claims
inline SuiteReport run_filtration(SuiteConfig const &cfg)
{
	TruncParams P = cfg.params();
	IdealFamily fam(P);
	SuiteReport rep{"filtration", cfg.to_json()};
	int trials = cfg.trials ? cfg.trials : 200;
	std::mt19937_64 rng(cfg.seed);
	auto ms = bidegrees_up_to(P.D);

	std::vector<GroupElement> words;
	std::vector<BiDegree> built;
	std::uniform_int_distribution<int> tot(1, P.D);
	for (int t = 0; t < trials; ++t) {
		int n = tot(rng);
		BiDegree m{std::uniform_int_distribution<int>(0, n)(rng), 0};
		m.m2 = n - m.m1;
		built.push_back(m);
		GroupElement g = construct_in_pi(P, m, rng);
		if (t % 4 == 3)
			g = g * random_word(P, rng, 2);
		words.push_back(g);
	}
	std::vector<std::vector<Status>> table(trials);
	parallel_for(trials, cfg.jobs, [&](int t) {
		for (auto m : ms)
			table[t].push_back(pi_membership(fam, words[t], m).status);
	});
	auto at = [&](int t, BiDegree m) {
		for (std::size_t i = 0; i < ms.size(); ++i)
			if (ms[i] == m)
				return table[t][i];
		throw std::logic_error("bidegree outside table");
	};

	auto &agree = rep.add("first_component_agreement");
	auto &mono = rep.add("monotonicity");
	auto &lcs = rep.add("inside_lower_central");
	auto &gen = rep.add("constructive_generation");
	for (int t = 0; t < trials; ++t) {
		for (int m = 2; m + 1 <= P.D; ++m)
			agree.record(at(t, {m, 0}) == at(t, {m, 1}),
			             {{"trial", t}, {"m", m}});
		for (auto m : ms) {
			if (at(t, m) != Status::in)
				continue;
			lcs.record(lower_central_member(words[t], m.total()), {{"trial", t}, {"m", m.str()}});
			for (auto n : ms)
				if (m.geq(n))
					mono.record(at(t, n) == Status::in,
					            {{"trial", t}, {"m", m.str()}, {"n", n.str()}});
		}
		if (t % 4 != 3)
			gen.record(at(t, built[t]) == Status::in, {{"trial", t}, {"m", built[t].str()}});
	}

	auto &inv = rep.add("x2_invariants_interior_zero");
	for (int p : {5, 7})
		for (int w = 2; w <= 8; ++w) {
			auto r = x2_invariants(Zq(u64(p), cfg.k), w);
			inv.record(r.interior_zero(), {{"p", p}, {"window", w}});
		}
	auto &four = rep.add("four_term_formula");
	for (int i = 0; i <= 2; ++i)
		for (int j = i + 1; i + j + 4 <= P.D; ++j)
			four.record(four_term_check(fam, i, j), {{"i", i}, {"j", j}});
	return rep;
}

// gamma in the x-torus: torus lift with characters (c, 1) composed with conjugation by z^e
inline Automorphism random_gamma1(IdealFamily &fam, std::mt19937_64 &rng, u64 &c)
{
	TruncParams const &P = fam.P;
	Zq Z(P);
	std::uniform_int_distribution<u64> u(2, Z.q - 1);
	do
		c = u(rng);
	while (!Z.is_unit(c));
	auto z = eval_word(P, "z");
	u64 e = std::uniform_int_distribution<u64>(0, Z.q - 1)(rng);
	return torus_lift(fam, c, 1) * Automorphism::inner(pow(z, e));
}

// gamma acts on gr_1^n Pi by chi1^{n1}; i_{m,1}(gamma f gamma^-1) = chi1^{m1} i_{m,1}(f) in
// both slots, modulo Pi(m+(2,0)) and Pi(m+(1,1))
inline SuiteReport run_equivariance(SuiteConfig const &cfg)
{
	TruncParams P = cfg.params();
	Zq Z(P);
	IdealFamily fam(P);
	SuiteReport rep{"equivariance", cfg.to_json()};
	int trials = cfg.trials ? cfg.trials : 25;
	std::mt19937_64 rng(cfg.seed);
	auto &gx = rep.add("gamma_on_x_mod_Pi(2,0)");
	auto &lem = rep.add("graded_action_chi1^m1");
	auto &s1 = rep.add("i_m1_x_slot");
	auto &s2 = rep.add("i_m1_y_slot");
	auto ms = bidegrees_up_to(P.D - 1);
	auto x1 = GroupElement::generator(P, 0), x2 = GroupElement::generator(P, 1);
	for (int t = 0; t < trials; ++t) {
		u64 c = 0;
		auto g = random_gamma1(fam, rng, c);
		gx.record(pi_membership(fam, g.img[0] * inv(pow(x1, c)), {2, 0}).in() &&
		              pi_membership(fam, g.img[1] * inv(x2), {1, 1}).in(),
		          {{"trial", t}, {"c", c}});
		// Lemma on a random element of Pi(n)
		auto nn = bidegrees_up_to(P.D);
		BiDegree n = nn[std::uniform_int_distribution<std::size_t>(0, nn.size() - 1)(rng)];
		auto h = construct_in_pi(P, n, rng);
		auto d = g(h) * inv(pow(h, Z.pow(c, u64(n.m1))));
		lem.record(pi_membership(fam, d, n + BiDegree{1, 0}).in(),
		           {{"trial", t}, {"c", c}, {"n", n.str()}});
		// Proposition on a random f in F^m
		BiDegree m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
		auto f = random_filtered_aut(P, m, rng);
		auto conj = g * f * g.inverse();
		u64 e = Z.pow(c, u64(m.m1));
		auto a = quotient_x(conj, 0) * inv(pow(quotient_x(f, 0), e));
		auto b = quotient_x(conj, 1) * inv(pow(quotient_x(f, 1), e));
		auto va = pi_membership(fam, a, m + BiDegree{2, 0});
		auto vb = pi_membership(fam, b, m + BiDegree{1, 1});
		s1.record(va.in(), {{"trial", t}, {"c", c}, {"m", m.str()}, {"verdict", va.to_json()}});
		s2.record(vb.in(), {{"trial", t}, {"c", c}, {"m", m.str()}, {"verdict", vb.to_json()}});
	}
	return rep;
}

inline SuiteReport run_metabelian(SuiteConfig const &cfg)
{
	TruncParams P = cfg.params();
	if (P.D < 4)
		throw ParamError("metabelian suite needs D >= 4");
	Zq Z(P);
	SuiteReport rep{"metabelian", cfg.to_json()};
	int trials = cfg.trials ? cfg.trials : 120;
	std::mt19937_64 rng(cfg.seed);
	int N = P.D - 2;
	auto z = eval_word(P, "z");

	auto &rel = rep.add("relation_iff_z_preserved");
	for (int t = 0; t < trials; ++t) {
		MetAut m;
		if (t % 3 == 0)
			m = from_H(random_comm(Z, N - 1, rng));
		else if (t % 3 == 1)
			m = MetAut{random_comm(Z, N, rng), random_comm(Z, N, rng)};
		else {
			m = from_H(random_comm(Z, N - 1, rng));
			int d = 1 + t % (N - 1);
			m.G1.at(d, 0) = Z.add(m.G1.at(d, 0), 1);
		}
		auto img = module_coordinate(m.to_automorphism(P)(z));
		bool preserved = img == CommSeries::constant(Z, N, img.at(0, 0));
		rel.record(preserved == m.relation_holds(), {{"trial", t}});
	}
	auto &add = rep.add("H_additive");
	for (int t = 0; t < trials / 3; ++t) {
		auto h = random_comm(Z, N - 1, rng), k = random_comm(Z, N - 1, rng);
		auto f = from_H(h).to_automorphism(P), g = from_H(k).to_automorphism(P);
		add.record(H_of(extract_G(f * g)) == h + k && H_of(extract_G(f)) == h, {{"trial", t}});
	}
	auto &inz = rep.add("H_inner_z_is_minus_one");
	inz.record(H_of(extract_G(Automorphism::inner(z))) == CommSeries::constant(Z, N - 1, Z.neg(1)));

	auto &rt = rep.add("alpha_kappa_round_trip");
	auto &odd = rep.add("alpha_odd_vanishing_U");
	for (int t = 0; t < trials / 2; ++t) {
		KappaTable kt;
		std::uniform_int_distribution<u64> c(0, Z.q - 1);
		for (int a = 0; a <= N; ++a)
			for (int b = 0; a + b <= N; ++b)
				if ((a + b) % 2 == 0 && a + b >= 2 && c(rng) % 2)
					kt[{a + 1, b + 1}] = c(rng);
		kt = normalize(Z, kt);
		auto al = alpha_from_kappa(Z, N, kt);
		rt.record(kappa_from_alpha(al) == kt, {{"trial", t}});
		odd.record(!to_u_coordinates(al).has_odd_terms(), {{"trial", t}});
	}
	if (P.D >= 5) {
		IdealFamily fam(P);
		auto &tw = rep.add("determinant_twist");
		std::uniform_int_distribution<u64> u(1, Z.q - 1);
		for (int t = 0; t < 10; ++t) {
			u64 c1, c2;
			do
				c1 = u(rng), c2 = u(rng);
			while (!Z.is_unit(c1) || !Z.is_unit(c2));
			auto r = det_twist_check(fam, c1, c2, random_comm(Z, N - 1, rng));
			tw.record(r.pass, {{"c1", c1}, {"c2", c2}});
		}
	}
	return rep;
}

// Teichmuller lift of a mod p^k: a^{p^{k-1}}
inline u64 teichmuller(Zq const &Z, u64 a)
{
	u64 t = a % Z.q;
	for (int i = 1; i < Z.k; ++i)
		t = Z.pow(t, Z.p);
	return t;
}

inline u64 primitive_root_mod(u64 p)
{
	for (u64 g = 2; g < p; ++g)
		if (mult_order(g, p) == p - 1)
			return g;
	throw std::logic_error("no primitive root");
}

inline SuiteReport run_idempotent(SuiteConfig const &cfg)
{
	TruncParams P = cfg.params();
	Zq Z(P);
	SuiteReport rep{"idempotent", cfg.to_json()};
	int trials = cfg.trials ? cfg.trials : 100;
	std::mt19937_64 rng(cfg.seed);
	u64 w = teichmuller(Z, primitive_root_mod(u64(P.p)));
	int bound = P.k * (P.D + 1);

	auto &stab = rep.add("stabilization_within_k(D+1)");
	auto &twist = rep.add("twist_identity");
	auto &fix = rep.add("limit_is_fixed");
	SeriesModel M(P, {w, 1});
	for (int t = 0; t < trials; ++t) {
		NCSeries s(P);
		std::uniform_int_distribution<u64> c(0, Z.q - 1);
		for (std::size_t i = 1; i < s.c.size(); ++i)
			s.c[i] = c(rng);
		s.c[0] = 1;
		GroupElement g(s);
		int m = t % (P.p - 1);
		try {
			auto r = idempotent_limit(M, g, w, m, bound);
			stab.record(true);
			twist.record(twist_identity(M, r.value, w, m), {{"trial", t}, {"m", m}});
			fix.record(epsilon_step(M, r.value, w, m) == r.value, {{"trial", t}});
		} catch (std::runtime_error const &) {
			stab.record(false, {{"trial", t}, {"m", m}});
		}
	}

	auto &proj = rep.add("abelian_projector");
	for (u64 p : {5u, 7u})
		for (int k = 1; k <= 3; ++k) {
			Zq A(p, k);
			u64 om = teichmuller(A, primitive_root_mod(p));
			std::uniform_int_distribution<u64> c(0, A.q - 1);
			u64 a = c(rng), b = c(rng), d = c(rng);
			std::vector<std::vector<u64>> Pm{{1, a, b}, {0, 1, d}, {0, 0, 1}};
			std::vector<std::vector<u64>> Pinv{
			    {1, A.neg(a), A.sub(A.mul(a, d), b)}, {0, 1, A.neg(d)}, {0, 0, 1}};
			std::vector<u64> eig{om, A.mul(om, om), A.pow(om, 3)};
			std::vector<std::vector<u64>> delta(3, std::vector<u64>(3, 0));
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					for (int l = 0; l < 3; ++l)
						delta[i][j] = A.add(delta[i][j], A.mul(A.mul(Pm[i][l], eig[l]), Pinv[l][j]));
			AbelianModel Ma(A, delta);
			for (int m = 0; m < int(p - 1); ++m) {
				std::vector<u64> g{c(rng), c(rng), c(rng)};
				auto h = idempotent_limit(Ma, g, om, m, k * 8).value;
				proj.record(h == eigen_projection(A, Pm, Pinv, eig, g, A.pow(om, u64(m))) &&
				                twist_identity(Ma, h, om, m),
				            {{"p", p}, {"k", k}, {"m", m}});
			}
		}

	auto &worked = rep.add("worked_value_p5_k2");
	{
		Zq A(5, 2);
		AbelianModel Ma(A, {{7}});
		worked.record(idempotent_limit(Ma, {1}, 7, 2, 5).value == std::vector<u64>{0});
	}

	// the two one-variable limits applied in both orders, diagonal slice only
	auto &order = rep.add("epsilon_order_agreement");
	order.advisory = true;
	SeriesModel M1(P, {w, 1}), M2(P, {1, w});
	for (int t = 0; t < std::min(trials, 20); ++t) {
		NCSeries s(P);
		std::uniform_int_distribution<u64> c(0, Z.q - 1);
		for (std::size_t i = 1; i < s.c.size(); ++i)
			s.c[i] = c(rng);
		s.c[0] = 1;
		GroupElement g(s);
		int m1 = 1 + t % (P.p - 2), m2 = 1 + (t / 2) % (P.p - 2);
		auto a = idempotent_limit(M2, idempotent_limit(M1, g, w, m1, bound).value, w, m2, bound).value;
		auto b = idempotent_limit(M1, idempotent_limit(M2, g, w, m2, bound).value, w, m1, bound).value;
		order.record(a == b, {{"trial", t}, {"m", BiDegree{m1, m2}.str()}});
	}
	return rep;
}

inline SuiteReport run_tworoute(SuiteConfig const &cfg)
{
	SuiteReport rep{"tworoute", cfg.to_json()};
	int N = cfg.maxdeg ? cfg.maxdeg : 8;
	auto &c = rep.add("routes_agree");
	for (int p : {5, 7})
		for (int n1 = 1; n1 <= N; ++n1)
			for (int n2 = 1; n1 + n2 - 1 <= N; ++n2) {
				auto r = two_route_check(p, 2, N, n1, n2, u64(1 + p), u64(1 + p));
				c.record(r.equal, {{"p", p}, {"n1", n1}, {"n2", n2}});
			}
	auto &ann = rep.add("normal_form_confluence");
	std::mt19937_64 rng(cfg.seed);
	for (u64 p : {5u, 7u}) {
		AnnModule M{Zq(p, 2), N, 1 + p, 1 + p};
		for (int t = 0; t < 20; ++t) {
			auto x = M.zero();
			x.first = random_comm(M.Z, N, rng);
			x.second = random_comm(M.Z, N, rng);
			ann.record(M.reduce(x) == M.reduce_random(x, rng), {{"p", p}, {"trial", t}});
		}
	}
	return rep;
}

inline SuiteReport run_freebasis(SuiteConfig const &cfg)
{
	SuiteReport rep{"freebasis", cfg.to_json()};
	std::vector<int> degs;
	if (cfg.maxdeg)
		degs = {cfg.maxdeg};
	else
		degs = {5, 6};
	auto &kern = rep.add("kernel_membership");
	auto &fr1 = rep.add("graded_freeness_one_variable");
	auto &fr2 = rep.add("graded_freeness_two_variable");
	auto &sg = rep.add("strong_generation");
	auto &dup = rep.add("defect_duplicate_generator_detected");
	auto &noz = rep.add("defect_omitted_z_chain_detected");
	for (int md : degs) {
		TruncParams P(cfg.p, cfg.k, std::max(cfg.D, md));
		for (int s = 0; s < cfg.seeds; ++s) {
			u64 seed = cfg.seed + u64(s);
			auto one = RecursionSpec::random(P, cfg.r, false, md, seed);
			auto t1 = build_recursion(one);
			auto two = RecursionSpec::random(P, cfg.r, true, md, seed);
			auto t2 = build_recursion(two);
			for (auto const *spec : {&one, &two}) {
				auto f = kernel_functionals(*spec);
				for (auto const &e : spec == &one ? t1 : t2)
					kern.record(kernel_membership(e.g, f).member, {{"name", e.name}});
			}
			auto v1 = graded_freeness_check(t1, md);
			fr1.record(v1.free, {{"maxdeg", md}, {"seed", seed}, {"deficit", v1.witness_degree}});
			if (cfg.r + 2 <= 4) {
				auto v2 = graded_freeness_check(t2, md);
				fr2.record(v2.free, {{"maxdeg", md}, {"seed", seed}, {"deficit", v2.witness_degree}});
				auto g = strong_generation_check(two, t2, md);
				sg.record(g.pass, {{"maxdeg", md}, {"seed", seed}, {"degree", g.witness_degree},
				                   {"surrogate", g.surrogate_witness}});
			}
			auto td = t1;
			td.push_back(t1[1]);
			td.back().name += "'";
			auto vd = graded_freeness_check(td, md);
			dup.record(!vd.free && vd.witness_degree == t1[1].weight,
			           {{"maxdeg", md}, {"seed", seed}, {"deficit", vd.witness_degree}});
			if (cfg.r + 2 <= 4) {
				auto nz = two;
				nz.with_z = false;
				auto g = strong_generation_check(nz, build_recursion(nz), md);
				noz.record(!g.pass && g.witness_degree == 2,
				           {{"maxdeg", md}, {"seed", seed}, {"degree", g.witness_degree}});
			}
		}
	}
	return rep;
}

// weights |m| of m in Z_{>=1}^2 minus (1,1) with m1 = m2 mod w
inline std::vector<int> index_alphabet(int w, int maxdeg)
{
	std::vector<int> out;
	for (int a = 1; a <= maxdeg; ++a)
		for (int b = 1; a + b <= maxdeg; ++b)
			if ((a != 1 || b != 1) && (a - b) % w == 0)
				out.push_back(a + b);
	return out;
}

inline SuiteReport run_witt(SuiteConfig const &cfg)
{
	SuiteReport rep{"witt", cfg.to_json()};
	int maxdeg = cfg.maxdeg ? cfg.maxdeg : 8;
	LieBasis B(2, maxdeg);
	auto wd = witt_dims({0, 2}, maxdeg);
	auto &hall = rep.add("hall_counts_equal_witt");
	for (int n = 1; n <= maxdeg; ++n)
		hall.record(i64(B.by_degree[n].size()) == wd[n], {{"degree", n}});
	auto &bi = rep.add("bigraded_degree5_multiset");
	std::map<std::string, int> got;
	if (maxdeg >= 5)
		for (int id : B.by_degree[5])
			got[BiDegree{B.words[id].mdeg[0], B.words[id].mdeg[1]}.str()]++;
	std::map<std::string, int> want{{"(4,1)", 1}, {"(3,2)", 2}, {"(2,3)", 2}, {"(1,4)", 1}};
	bi.record(got == want, nlohmann::json(got));
	auto &bg = rep.add("bigraded_dims_match_basis");
	for (int a = 0; a <= maxdeg; ++a)
		for (int b = 0; a + b <= maxdeg; ++b)
			if (a + b > 0) {
				auto it = B.by_mdeg.find(MDeg{a, b});
				i64 have = it == B.by_mdeg.end() ? 0 : i64(it->second.size());
				bg.record(have == bigraded_dim(a, b), {{"a", a}, {"b", b}});
			}
	auto &wf = rep.add("w_family_free_through_6");
	{
		TruncParams P(7, 1, 6);
		LieBasis B6(2, 6);
		auto X2 = NCSeries::letter(P, 1);
		std::vector<NCSeries> gens{NCSeries::letter(P, 0)};
		for (int n = 1; n <= 5; ++n)
			gens.push_back(X2.bracket(gens.back()));
		auto r = subalgebra_rank_check(B6, gens, 6);
		wf.record(r.free, {{"deficit", r.first_deficit}});
	}
	auto &ia = rep.add("index_alphabet_dims");
	auto d = witt_dims(weights_to_counts(index_alphabet(4, maxdeg)), maxdeg);
	ia.info = d;
	ia.record(maxdeg < 2 || d[2] == 0);
	return rep;
}

inline SuiteReport run_rbound(SuiteConfig const &cfg)
{
	SuiteReport rep{"rbound", cfg.to_json()};
	int maxdeg = cfg.maxdeg ? cfg.maxdeg : 9;
	struct Alpha {
		std::string name;
		std::vector<int> weights;
	};
	std::vector<Alpha> alphabets{{"two_letters", {1, 1}}};
	for (int w : {2, 4, 6})
		alphabets.push_back({"index_set_w" + std::to_string(w), index_alphabet(w, maxdeg)});
	auto &cont = rep.add("containment_n_2_3");
	for (auto const &a : alphabets)
		for (int n : {2, 3})
			for (auto const &row : fastest_filtration_ranks(a.weights, n, maxdeg))
				cont.record(row.contained, {{"alphabet", a.name}, {"n", n}, {"m", row.m},
				                            {"min_length", row.min_length}, {"r_m", row.r_m}});
	// every letter has weight <= n, so ceil(m/n) always holds; floor(m/n)+1 can fail
	// once a generator has weight exactly n
	auto &ceil = rep.add("ceiling_bound_all_n");
	auto &edge = rep.add("floor_bound_all_n");
	edge.advisory = true;
	for (auto const &a : alphabets)
		for (int n = 2; n <= maxdeg; ++n)
			for (auto const &row : fastest_filtration_ranks(a.weights, n, maxdeg)) {
				nlohmann::json w{{"alphabet", a.name}, {"n", n}, {"m", row.m},
				                 {"min_length", row.min_length}, {"r_m", row.r_m}};
				ceil.record(row.min_length == 0 || row.min_length >= (row.m + n - 1) / n, w);
				edge.record(row.contained, w);
			}
	return rep;
}

inline std::vector<std::string> suite_names()
{
	return {"filtration", "equivariance", "metabelian", "idempotent",
	        "tworoute",   "freebasis",    "witt",       "rbound"};
}

inline SuiteReport run_suite(std::string const &name, SuiteConfig const &cfg)
{
	if (name == "filtration")
		return run_filtration(cfg);
	if (name == "equivariance")
		return run_equivariance(cfg);
	if (name == "metabelian")
		return run_metabelian(cfg);
	if (name == "idempotent")
		return run_idempotent(cfg);
	if (name == "tworoute")
		return run_tworoute(cfg);
	if (name == "freebasis")
		return run_freebasis(cfg);
	if (name == "witt")
		return run_witt(cfg);
	if (name == "rbound")
		return run_rbound(cfg);
	throw ParamError("unknown suite '" + name + "'");
}

} // namespace propcal
