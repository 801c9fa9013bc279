#pragma once

#include "propcal/ncseries.hpp"

#include <map>
#include <random>
#include <vector>

namespace testing_helpers {

using namespace propcal;

// sparse word-keyed oracle algebra, independent of the dense layout
using Sparse = std::map<std::vector<int>, i64>;

inline Sparse to_sparse(NCSeries const &s)
{
	Sparse out;
	for (int l = 0; l <= s.P.D; ++l)
		for (std::size_t v = 0; v < s.L->pw[l]; ++v)
			if (s.at(l, v))
				out[s.L->letters(l, v)] = i64(s.at(l, v));
	return out;
}

inline Sparse sparse_mul(Sparse const &a, Sparse const &b, int D, i64 q)
{
	Sparse out;
	for (auto const &[u, cu] : a)
		for (auto const &[v, cv] : b) {
			if (int(u.size() + v.size()) > D)
				continue;
			std::vector<int> w = u;
			w.insert(w.end(), v.begin(), v.end());
			auto &c = out[w];
			c = ((c + cu * cv) % q + q) % q;
		}
	for (auto it = out.begin(); it != out.end();)
		it = it->second == 0 ? out.erase(it) : std::next(it);
	return out;
}

inline GroupElement random_group(TruncParams const &P, std::mt19937_64 &rng, int rank = 2,
                                 int len = 6)
{
	std::uniform_int_distribution<int> letter(0, rank - 1);
	std::uniform_int_distribution<i64> ex(-i64(P.p) * 3, i64(P.p) * 3);
	GroupElement g = GroupElement::identity(P, rank);
	for (int i = 0; i < len; ++i)
		g = g * pow_int(GroupElement::generator(P, letter(rng), rank), ex(rng));
	return g;
}

// arbitrary unit series with constant 1
inline GroupElement random_unit(TruncParams const &P, std::mt19937_64 &rng, int rank = 2)
{
	NCSeries s(P, rank);
	std::uniform_int_distribution<u64> c(0, s.Z.q - 1);
	for (std::size_t i = 1; i < s.c.size(); ++i)
		s.c[i] = c(rng);
	s.c[0] = 1;
	return GroupElement(s);
}

inline NCSeries random_series(TruncParams const &P, std::mt19937_64 &rng, int rank = 2)
{
	NCSeries s(P, rank);
	std::uniform_int_distribution<u64> c(0, s.Z.q - 1);
	for (auto &x : s.c)
		x = c(rng);
	return s;
}

} // namespace testing_helpers
