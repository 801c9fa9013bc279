#include "propcal/words.hpp"

#include <gtest/gtest.h>

using namespace propcal;

TEST(Words, Generators)
{
	TruncParams P(7, 1, 5);
	auto x1 = GroupElement::generator(P, 0), x2 = GroupElement::generator(P, 1);
	EXPECT_EQ(eval_word(P, "x1"), x1);
	EXPECT_EQ(eval_word(P, "x"), x1);
	EXPECT_EQ(eval_word(P, "y"), x2);
	EXPECT_EQ(eval_word(P, "z"), commutator(x2, x1));
}

TEST(Words, GrammarSemantics)
{
	TruncParams P(7, 2, 6);
	auto x1 = GroupElement::generator(P, 0), x2 = GroupElement::generator(P, 1);
	EXPECT_EQ(eval_word(P, "[x2,x1]^3"), pow(commutator(x2, x1), 3));
	EXPECT_EQ(eval_word(P, "[x2,[x2,x1]]"), commutator(x2, commutator(x2, x1)));
	EXPECT_EQ(eval_word(P, "x1 x2^-2 (x1 x2)^4"),
	          x1 * pow_int(x2, -2) * pow(x1 * x2, 4));
	EXPECT_EQ(eval_word(P, "  x1x2 "), x1 * x2);
}

TEST(Words, ExponentReductionIsFlagged)
{
	TruncParams P(5, 1, 4);
	auto v = eval_word_ex(P, "x1^7");
	EXPECT_TRUE(v.exponent_reduced);
	EXPECT_EQ(v.value, pow(GroupElement::generator(P, 0), 2));
	EXPECT_FALSE(eval_word_ex(P, "x1^4").exponent_reduced);
	EXPECT_TRUE(eval_word_ex(P, "x1^99999999999999999999999").exponent_reduced);
}

TEST(Words, ParseErrorsCarryPosition)
{
	TruncParams P(5, 1, 4);
	try {
		eval_word(P, "x1 w");
		FAIL();
	} catch (ParseError const &e) {
		EXPECT_EQ(e.pos, 3u);
	}
	EXPECT_THROW(eval_word(P, "[x1,x2"), ParseError);
	EXPECT_THROW(eval_word(P, "x1^"), ParseError);
	EXPECT_THROW(eval_word(P, ""), ParseError);
	EXPECT_THROW(eval_word(P, "x3"), ParseError);
	EXPECT_THROW(eval_word(P, "x1)"), ParseError);
}

TEST(Words, JsonRoundTrip)
{
	TruncParams P(7, 1, 4);
	auto g = eval_word(P, "x1 [x2,x1]^2");
	auto j = to_json(g.s);
	EXPECT_EQ(j[""], 1);
	EXPECT_EQ(j["1"], 1);
	EXPECT_EQ(series_from_json(P, j), g.s);
}
