#pragma once

#include "propcal/lie.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace propcal {

struct BiDegree {
	int m1 = 0, m2 = 0;
	int total() const { return m1 + m2; }
	bool operator<(BiDegree const &o) const { return std::tie(m1, m2) < std::tie(o.m1, o.m2); }
	bool operator==(BiDegree const &o) const { return m1 == o.m1 && m2 == o.m2; }
	bool geq(BiDegree const &o) const { return m1 >= o.m1 && m2 >= o.m2; }
	BiDegree operator+(BiDegree const &o) const { return {m1 + o.m1, m2 + o.m2}; }
	std::string str() const
	{
		return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
	}
};

// Lie-side ideals L(m) of the two-variable filtration, one Howell module per
// bidegree, each row carrying a group element of Pi(m) whose leading term is
// that row
class IdealFamily {
public:
	struct Piece {
		Howell h;
		std::vector<NCSeries> series;    // row as Lie polynomial
		std::vector<GroupElement> lifts; // row lifted into the group
	};

	TruncParams P;
	Zq Z;
	LieBasis B;

	explicit IdealFamily(TruncParams const &p) : P(p), Z(p), B(2, p.D) {}

	int dim(int a, int b) const { return B.dim({a, b}); }

	Piece const &piece(BiDegree m, int a, int b)
	{
		std::lock_guard<std::recursive_mutex> lock(mu_);
		auto key = std::make_tuple(m.m1, m.m2, a, b);
		auto it = cache_.find(key);
		if (it != cache_.end())
			return it->second;
		Piece pc = compute(m, a, b);
		return cache_.emplace(key, std::move(pc)).first->second;
	}

	// ideal contains the whole bidegree
	bool full(BiDegree m, int a, int b) { return piece(m, a, b).h.full(); }

private:
	std::map<std::tuple<int, int, int, int>, Piece> cache_;
	std::recursive_mutex mu_;

	Piece finish(int a, int b, std::vector<Vec> const &gens,
	             std::vector<GroupElement> const &glifts)
	{
		Piece pc;
		int n = dim(a, b);
		pc.h = Howell::build(Z, n, gens, true);
		for (auto const &r : pc.h.rows) {
			pc.series.push_back(B.element({a, b}, r.v, P));
			GroupElement g = GroupElement::identity(P);
			for (std::size_t i = 0; i < glifts.size(); ++i)
				if (r.comb[i])
					g = g * pow(glifts[i], r.comb[i]);
			pc.lifts.push_back(g);
		}
		return pc;
	}

	Piece compute(BiDegree m, int a, int b)
	{
		int n = dim(a, b);
		if (a < m.m1 || b < m.m2 || a + b > P.D || n == 0 || m.total() == 0)
			return finish(a, b, {}, {});
		std::vector<Vec> gens;
		std::vector<GroupElement> glifts;
		if (m.total() == 1) {
			// graded normal closure of a generator: every Lyndon element using it
			auto const &blk = B.block({a, b});
			for (std::size_t i = 0; i < blk.size(); ++i) {
				Vec v(n, 0);
				v[i] = 1;
				gens.push_back(v);
				glifts.push_back(B.lift(blk[i], P));
			}
			return finish(a, b, gens, glifts);
		}
		Howell cur(Z, n);
		for (int s1 = 0; s1 <= m.m1; ++s1)
			for (int s2 = 0; s2 <= m.m2; ++s2) {
				BiDegree m1{s1, s2}, m2{m.m1 - s1, m.m2 - s2};
				if (m1.total() == 0 || m2.total() == 0 || m2 < m1)
					continue;
				for (int a1 = m1.m1; a1 <= a - m2.m1; ++a1)
					for (int b1 = m1.m2; b1 <= b - m2.m2; ++b1) {
						int a2 = a - a1, b2 = b - b1;
						if (a1 + b1 == 0 || a2 + b2 == 0)
							continue;
						if (cur.full())
							return finish(a, b, gens, glifts);
						Piece const &u = piece(m1, a1, b1);
						if (u.series.empty())
							continue;
						Piece const &v = piece(m2, a2, b2);
						for (std::size_t i = 0; i < u.series.size(); ++i)
							for (std::size_t j = 0; j < v.series.size(); ++j) {
								Vec vec = B.block_coords(u.series[i].bracket(v.series[j]),
								                         {a, b});
								if (cur.contains(vec))
									continue;
								gens.push_back(vec);
								glifts.push_back(commutator(u.lifts[i], v.lifts[j]));
								cur = Howell::build(Z, n, gens);
								if (cur.full())
									return finish(a, b, gens, glifts);
							}
					}
			}
		return finish(a, b, gens, glifts);
	}
};

} // namespace propcal
