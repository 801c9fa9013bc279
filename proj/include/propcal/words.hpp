#pragma once

#include "propcal/ncseries.hpp"

#include <cctype>
#include <json.hpp>
#include <string>

namespace propcal {

struct ParseError : std::runtime_error {
	std::size_t pos;
	ParseError(std::string const &msg, std::size_t at)
	    : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at)
	{
	}
};

struct WordValue {
	GroupElement value;
	bool exponent_reduced = false; // some exponent exceeded p^k and was reduced
};

// expr := factor {factor} ; factor := atom ["^" int] ;
// atom := ident | "[" expr "," expr "]" | "(" expr ")"
class WordParser {
public:
	WordParser(TruncParams const &P, std::string text) : P_(P), s_(std::move(text)) {}

	WordValue parse()
	{
		pos_ = 0;
		reduced_ = false;
		GroupElement g = expr();
		skip();
		if (pos_ != s_.size())
			throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
		return {g, reduced_};
	}

private:
	TruncParams P_;
	std::string s_;
	std::size_t pos_ = 0;
	bool reduced_ = false;

	void skip()
	{
		while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
			++pos_;
	}
	bool at_atom_start()
	{
		skip();
		if (pos_ >= s_.size())
			return false;
		char c = s_[pos_];
		return c == '[' || c == '(' || std::isalpha((unsigned char)c);
	}

	GroupElement expr()
	{
		if (!at_atom_start())
			throw ParseError("expected a factor", pos_);
		GroupElement g = factor();
		while (at_atom_start())
			g = g * factor();
		return g;
	}

	GroupElement factor()
	{
		GroupElement a = atom();
		skip();
		if (pos_ < s_.size() && s_[pos_] == '^') {
			++pos_;
			skip();
			a = pow(a, integer());
		}
		return a;
	}

	u64 integer()
	{
		std::size_t start = pos_;
		bool negv = false;
		if (pos_ < s_.size() && s_[pos_] == '-') {
			negv = true;
			++pos_;
		}
		if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
			throw ParseError("expected an integer exponent", start);
		Zq Z(P_);
		u64 v = 0;
		bool big = false;
		while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
			u64 d = u64(s_[pos_] - '0');
			if (!big && v > (~u64(0) - d) / 10)
				big = true;
			if (!big)
				v = v * 10 + d;
			else
				v = (v % Z.q * 10 + d) % Z.q;
			++pos_;
		}
		if (big || v >= Z.q)
			reduced_ = true;
		v %= Z.q;
		return negv ? Z.neg(v) : v;
	}

	GroupElement atom()
	{
		skip();
		std::size_t start = pos_;
		char c = s_[pos_];
		if (c == '(') {
			++pos_;
			GroupElement g = expr();
			expect(')');
			return g;
		}
		if (c == '[') {
			++pos_;
			GroupElement a = expr();
			expect(',');
			GroupElement b = expr();
			expect(']');
			return commutator(a, b);
		}
		std::string id;
		id += c;
		++pos_;
		if (c == 'x' && pos_ < s_.size() && (s_[pos_] == '1' || s_[pos_] == '2'))
			id += s_[pos_++];
		auto x1 = GroupElement::generator(P_, 0), x2 = GroupElement::generator(P_, 1);
		if (id == "x1" || id == "x")
			return x1;
		if (id == "x2" || id == "y")
			return x2;
		if (id == "z")
			return commutator(x2, x1);
		throw ParseError("unknown generator '" + id + "'", start);
	}

	void expect(char c)
	{
		skip();
		if (pos_ >= s_.size() || s_[pos_] != c)
			throw ParseError(std::string("expected '") + c + "'", pos_);
		++pos_;
	}
};

inline WordValue eval_word_ex(TruncParams const &P, std::string const &expr)
{
	return WordParser(P, expr).parse();
}
inline GroupElement eval_word(TruncParams const &P, std::string const &expr)
{
	return eval_word_ex(P, expr).value;
}

inline nlohmann::json to_json(NCSeries const &s)
{
	nlohmann::json j = nlohmann::json::object();
	for (auto const &[w, c] : s.terms())
		j[w] = c;
	return j;
}

inline NCSeries series_from_json(TruncParams const &P, nlohmann::json const &j,
                                 int rank = 2)
{
	NCSeries s(P, rank);
	for (auto const &[w, c] : j.items()) {
		std::vector<int> word;
		for (char ch : w) {
			int a = ch - '1';
			if (a < 0 || a >= rank)
				throw ParamError("bad letter in word '" + w + "'");
			word.push_back(a);
		}
		if (int(word.size()) > P.D)
			throw ParamError("word longer than truncation degree");
		s.set(word, u64(s.Z.from(c.get<i64>())));
	}
	return s;
}

} // namespace propcal
