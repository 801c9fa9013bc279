#include "propcal/howell.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace propcal;

namespace {

// brute-force span over Z/q for tiny modules
std::set<Vec> span(Zq const &Z, int n, std::vector<Vec> const &gens)
{
	std::set<Vec> out{Vec(n, 0)};
	bool grew = true;
	while (grew) {
		grew = false;
		std::vector<Vec> cur(out.begin(), out.end());
		for (auto const &v : cur)
			for (auto const &g : gens) {
				Vec w(n);
				for (int i = 0; i < n; ++i)
					w[i] = Z.add(v[i], g[i] % Z.q);
				grew |= out.insert(w).second;
			}
	}
	return out;
}

} // namespace

TEST(Howell, MembershipMatchesBruteForce)
{
	Zq Z(5, 2);
	std::mt19937_64 rng(1);
	std::uniform_int_distribution<u64> c(0, 24);
	for (int t = 0; t < 15; ++t) {
		int n = 2;
		std::vector<Vec> gens;
		for (int g = 0; g < 2; ++g)
			gens.push_back({c(rng) * (t % 3 ? 5 : 1) % 25, c(rng)});
		auto S = span(Z, n, gens);
		auto h = Howell::build(Z, n, gens);
		int len = 0;
		for (std::size_t sz = S.size(); sz > 1; sz /= 5)
			++len;
		EXPECT_EQ(h.length(), len);
		for (u64 a = 0; a < 25; ++a)
			for (u64 b = 0; b < 25; ++b)
				EXPECT_EQ(h.contains(Vec{a, b}), S.count(Vec{a, b}) > 0);
	}
}

TEST(Howell, CanonicalForm)
{
	Zq Z(7, 2);
	std::vector<Vec> g1{{7, 14, 3}, {0, 49 - 7, 1}}, g2{{0, 42, 1}, {7, 56 % 49, 4}};
	EXPECT_EQ(Howell::build(Z, 3, g1), Howell::build(Z, 3, g2));
}

TEST(Howell, TorsionRow)
{
	Zq Z(5, 2);
	// (5, 1) generates a module containing (0, 5) = 5*(5,1) - (25,0)
	auto h = Howell::build(Z, 2, {{5, 1}});
	EXPECT_TRUE(h.contains(Vec{0, 5}));
	EXPECT_FALSE(h.contains(Vec{0, 1}));
	EXPECT_EQ(h.unit_rank(), 0);
	EXPECT_EQ(h.length(), 2);
}

TEST(Howell, SolveAndKernel)
{
	Zq Z(7, 1);
	std::vector<Vec> cols{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
	Vec u;
	ASSERT_TRUE(solve_linear(Z, cols, {3, 4, 0}, u));
	Vec got(3, 0);
	for (std::size_t j = 0; j < cols.size(); ++j)
		for (int i = 0; i < 3; ++i)
			got[i] = Z.add(got[i], Z.mul(u[j], cols[j][i]));
	EXPECT_EQ(got, (Vec{3, 4, 0}));
	EXPECT_FALSE(solve_linear(Z, {{1, 0, 0}}, {0, 1, 0}, u));
	auto k = kernel(Z, 3, cols);
	EXPECT_EQ(k.length(), 1);
	EXPECT_TRUE(k.contains(Vec{1, 1, 6}));
}
