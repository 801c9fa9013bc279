#include "helpers.hpp"
#include "propcal/howell.hpp"
#include "propcal/lie.hpp"

#include <gtest/gtest.h>

using namespace propcal;
using namespace testing_helpers;

namespace {

// rank of the span of all left-normed brackets of letters in degree n, computed
// in the associative algebra without any Lie basis
int bracket_span_rank(int r, int n, TruncParams const &P)
{
	std::vector<NCSeries> cur;
	for (int i = 0; i < r; ++i)
		cur.push_back(NCSeries::letter(P, i, r));
	for (int d = 2; d <= n; ++d) {
		std::vector<NCSeries> nxt;
		for (auto const &s : cur)
			for (int i = 0; i < r; ++i)
				nxt.push_back(NCSeries::letter(P, i, r).bracket(s));
		cur = nxt;
	}
	std::vector<Vec> rows;
	for (auto const &s : cur) {
		Vec v(s.L->pw[n]);
		for (std::size_t w = 0; w < v.size(); ++w)
			v[w] = s.at(n, w);
		rows.push_back(v);
	}
	auto h = Howell::build(Zq(P), int(rows[0].size()), rows);
	return h.unit_rank();
}

std::map<MDeg, int> bidegree_counts(LieBasis const &B, int n)
{
	std::map<MDeg, int> m;
	for (int id : B.by_degree[n])
		++m[B.words[id].mdeg];
	return m;
}

} // namespace

TEST(Lie, LyndonWordsSmall)
{
	auto w = lyndon_words(2, 3);
	std::vector<std::vector<int>> expect{{0}, {0, 0, 1}, {0, 1}, {0, 1, 1}, {1}};
	EXPECT_EQ(w, expect);
}

TEST(Lie, BasisDegreeTwo)
{
	LieBasis B(2, 2);
	ASSERT_EQ(B.words.size(), 3u);
	EXPECT_EQ(B.words[2].mdeg, (MDeg{1, 1}));
	EXPECT_EQ(bidegree_counts(B, 2), (std::map<MDeg, int>{{{1, 1}, 1}}));
}

TEST(Lie, CountsMatchWittAndSpanningOracle)
{
	LieBasis B(2, 8);
	auto d = witt_dims({0, 2}, 8);
	std::vector<i64> classical{0, 2, 1, 2, 3, 6, 9, 18, 30};
	TruncParams P(11, 1, 8);
	for (int n = 1; n <= 8; ++n) {
		EXPECT_EQ(i64(B.by_degree[n].size()), d[n]);
		EXPECT_EQ(d[n], classical[n]);
		if (n <= 6)
			EXPECT_EQ(bracket_span_rank(2, n, P), d[n]);
	}
	LieBasis B3(3, 4);
	auto d3 = witt_dims({0, 3}, 4);
	for (int n = 1; n <= 4; ++n)
		EXPECT_EQ(i64(B3.by_degree[n].size()), d3[n]);
}

TEST(Lie, BidegreeMultisetDegreeFive)
{
	LieBasis B(2, 5);
	std::map<MDeg, int> expect{{{4, 1}, 1}, {{3, 2}, 2}, {{2, 3}, 2}, {{1, 4}, 1}};
	EXPECT_EQ(bidegree_counts(B, 5), expect);
	for (auto const &[m, c] : expect)
		EXPECT_EQ(bigraded_dim(m[0], m[1]), c);
	EXPECT_EQ(bidegree_counts(B, 3), (std::map<MDeg, int>{{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST(Lie, BracketPolynomialHasLyndonLeadingWord)
{
	LieBasis B(2, 7);
	for (auto const &lw : B.words) {
		auto mn = std::min_element(lw.poly.begin(), lw.poly.end());
		EXPECT_EQ(mn->first, lw.value);
		EXPECT_EQ(mn->second, 1);
	}
}

TEST(Lie, DecomposeRoundTripAndRejectsNonLie)
{
	TruncParams P(7, 2, 6);
	LieBasis B(2, 6);
	std::mt19937_64 rng(4);
	for (int t = 0; t < 20; ++t) {
		auto g = random_group(P, rng);
		auto a = lie_log(g);
		for (int n = 1; n <= 6; ++n) {
			auto parts = B.decompose(a, n);
			NCSeries back(P);
			for (auto const &[m, co] : parts)
				back += B.element(m, co, P);
			EXPECT_EQ(back, a.homogeneous(n));
		}
	}
	NCSeries sq = NCSeries::letter(P, 0) * NCSeries::letter(P, 1);
	EXPECT_THROW(B.decompose(sq, 2), std::domain_error);
}

TEST(Lie, AntisymmetryAndJacobi)
{
	TruncParams P(7, 2, 6);
	std::mt19937_64 rng(6);
	for (int t = 0; t < 20; ++t) {
		auto a = lie_log(random_group(P, rng)), b = lie_log(random_group(P, rng)),
		     c = lie_log(random_group(P, rng));
		EXPECT_TRUE((a.bracket(b) + b.bracket(a)).is_zero());
		auto j = a.bracket(b.bracket(c)) + b.bracket(c.bracket(a)) + c.bracket(a.bracket(b));
		EXPECT_TRUE(j.is_zero());
	}
}

TEST(Lie, GroupLiftLeadingTerm)
{
	TruncParams P(7, 1, 6);
	LieBasis B(2, 6);
	for (std::size_t id = 0; id < B.words.size(); ++id) {
		auto g = B.lift(int(id), P);
		int n = B.words[id].len();
		EXPECT_EQ(g.degree(), n);
		EXPECT_EQ(g.s.homogeneous(n), B.poly_series(int(id), P));
	}
}

TEST(Witt, WeightedAlphabets)
{
	EXPECT_EQ(witt_dims({0, 1}, 4), (std::vector<i64>{0, 1, 0, 0, 0}));
	// weights 1..5, one generator each
	auto d = witt_dims(weights_to_counts({1, 2, 3, 4, 5}), 5);
	// brute oracle: necklace count over the graded alphabet via Lyndon words
	std::vector<int> wt{1, 2, 3, 4, 5};
	std::vector<i64> brute(6, 0);
	for (auto const &w : lyndon_words(5, 5)) {
		int s = 0;
		for (int a : w)
			s += wt[a];
		if (s <= 5)
			++brute[s];
	}
	for (int n = 1; n <= 5; ++n)
		EXPECT_EQ(d[n], brute[n]);
	EXPECT_THROW(witt_dims({1, 1}, 3), ParamError);
}

TEST(Witt, IndexAlphabetForFive)
{
	// m >= (1,1), m != (1,1), m1 = m2 mod 4; weight |m|
	std::vector<int> w;
	for (int a = 1; a <= 8; ++a)
		for (int b = 1; a + b <= 8; ++b)
			if ((a != 1 || b != 1) && (a - b) % 4 == 0)
				w.push_back(a + b);
	auto d = witt_dims(weights_to_counts(w), 8);
	EXPECT_EQ(d[2], 0);
	EXPECT_EQ(d[4], 1); // (2,2)
	EXPECT_EQ(d[6], 3); // (3,3),(1,5),(5,1)
	EXPECT_EQ(d[8], 3); // (4,4),(2,6),(6,2); no brackets of weight 8 from 4+4
}

TEST(Subalgebra, FullAlgebraAndAbelianLine)
{
	TruncParams P(7, 1, 6);
	LieBasis B(2, 6);
	auto X1 = NCSeries::letter(P, 0), X2 = NCSeries::letter(P, 1);
	auto rep = subalgebra_rank_check(B, {X1, X2}, 6);
	EXPECT_TRUE(rep.free);
	for (int n = 1; n <= 6; ++n)
		EXPECT_EQ(rep.ranks[n], i64(B.by_degree[n].size()));
	auto line = subalgebra_rank_check(B, {X2.bracket(X1)}, 6);
	EXPECT_EQ(line.ranks[2], 1);
	EXPECT_EQ(line.ranks[4], 0);
	EXPECT_TRUE(line.free);
	EXPECT_THROW(subalgebra_rank_check(B, {X1 + X1 * X2}, 3), ParamError);
}

TEST(Subalgebra, WFamilyIsFree)
{
	TruncParams P(7, 1, 6);
	LieBasis B(2, 6);
	auto X2 = NCSeries::letter(P, 1);
	std::vector<NCSeries> gens{NCSeries::letter(P, 0)};
	for (int n = 1; n <= 4; ++n)
		gens.push_back(X2.bracket(gens.back()));
	auto rep = subalgebra_rank_check(B, gens, 6);
	EXPECT_TRUE(rep.free);
	auto exp = witt_dims(weights_to_counts({1, 2, 3, 4, 5}), 6);
	for (int n = 1; n <= 6; ++n)
		EXPECT_EQ(rep.ranks[n], exp[n]);
	gens.push_back(gens[2]);
	auto dup = subalgebra_rank_check(B, gens, 6);
	EXPECT_FALSE(dup.free);
	EXPECT_EQ(dup.first_deficit, 3);
}

TEST(Fastest, RBoundTable)
{
	auto rows = fastest_filtration_ranks({1, 1}, 2, 9);
	std::vector<int> rm;
	for (int m = 2; m <= 5; ++m)
		rm.push_back(rows[m - 1].r_m);
	EXPECT_EQ(rm, (std::vector<int>{2, 2, 3, 3}));
	EXPECT_EQ(fastest_filtration_ranks({1, 1}, 3, 9)[8].r_m, 4);
	EXPECT_EQ(rows[0].r_m, 1);
	EXPECT_THROW(fastest_filtration_ranks({1}, 1, 3), ParamError);
	for (auto const &r : rows)
		EXPECT_TRUE(r.contained) << r.m;
}

TEST(Fastest, GeneratorOfWeightExactlyN)
{
	// a generator of weight n sits in degree n with length 1 < r_n = 2
	auto rows = fastest_filtration_ranks({1, 2}, 2, 4);
	EXPECT_FALSE(rows[1].contained);
	EXPECT_EQ(rows[1].min_length, 1);
}
