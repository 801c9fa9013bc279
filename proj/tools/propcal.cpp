#include "propcal/propcal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

using namespace propcal;
using nlohmann::json;

namespace {

enum Exit { ok = 0, math_failure = 1, usage = 2 };

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

const std::map<std::string, std::string> kSuiteHelp = {
    {"filtration", "two-variable filtration: (m,0)/(m,1) agreement, monotonicity, "
                   "inclusion in the lower central series, constructive generation, "
                   "x2-invariants and the four-term shift formula"},
    {"equivariance", "torus action on graded classes by chi1^m1 and twisted equivariance "
                     "of the comparison map i_{m,1}"},
    {"metabelian", "relation T1 G2 = G1 T2 versus preservation of <z>, H-map additivity, "
                   "alpha/kappa round trips and odd vanishing, determinant twist"},
    {"idempotent", "stabilization of the idempotent limit, twist identity, abelian "
                   "projector, worked value at p=5 k=2"},
    {"tworoute", "both route products agree in the annihilator module"},
    {"freebasis", "graded freeness and strong generation of the recursive free bases, "
                  "with deliberate defects"},
    {"witt", "Hall counts against Witt dimensions, bigraded ranks, freeness of the w_n family"},
    {"rbound", "fastest-filtration bound r_m for n in {2,3}"},
};

void emit(json const &j, std::string const &out)
{
	if (out.empty()) {
		std::cout << j.dump() << "\n";
		return;
	}
	std::ofstream f(out);
	if (!f)
		throw UsageError("cannot open '" + out + "' for writing");
	f << j.dump(2) << "\n";
	if (!f)
		throw UsageError("write to '" + out + "' failed");
}

std::vector<int> parse_weights(std::string const &s)
{
	std::vector<int> w;
	std::stringstream ss(s);
	std::string tok;
	while (std::getline(ss, tok, ',')) {
		std::size_t used = 0;
		int v = 0;
		try {
			v = std::stoi(tok, &used);
		} catch (std::exception const &) {
			throw UsageError("bad weight '" + tok + "'");
		}
		if (used != tok.size() || v < 1)
			throw UsageError("bad weight '" + tok + "'");
		w.push_back(v);
	}
	if (w.empty())
		throw UsageError("empty weight list");
	return w;
}

json record_json(CensusRecord const &r)
{
	json j{{"p", r.p}, {"split", r.split}, {"w", r.w}};
	if (r.split) {
		j["a"] = r.pi.a;
		j["b"] = r.pi.b;
		j["u"] = r.u;
		j["ord_index"] = r.ord_index;
		j["ord_ok"] = r.ord_ok;
		j["unit_ok"] = r.unit_ok;
		j["pass"] = r.pass;
	}
	return j;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"propcal: truncated free pro-p group calculus and property suites"};
	app.require_subcommand(1);
	app.fallthrough();

	int p = 7, k = 1, deg = 5, jobs = 1;
	u64 seed = 1;
	bool as_json = false;
	std::string out;
	app.add_option("--p", p, "prime, at least 5")->capture_default_str();
	app.add_option("--k", k, "coefficients mod p^k")->capture_default_str();
	app.add_option("--deg", deg, "truncation degree D < p")->capture_default_str();
	app.add_option("--seed", seed, "random seed")->capture_default_str();
	app.add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
	app.add_flag("--json", as_json, "JSON output where plain text is the default");
	app.add_option("--out", out, "output file");

	std::string suite_desc = "run a property suite:";
	for (auto const &n : suite_names())
		suite_desc += "\n  " + n + ": " + kSuiteHelp.at(n);
	auto *suite = app.add_subcommand("suite", suite_desc);
	std::string suite_name;
	int trials = 0, maxdeg = 0, r = 1, seeds = 3;
	suite->add_option("name", suite_name, "suite name")->required();
	suite->add_option("--trials", trials, "trial count (0: suite default)");
	suite->add_option("--maxdeg,--grid", maxdeg, "degree bound (0: suite default)");
	suite->add_option("--r", r, "number of x generators (freebasis)");
	suite->add_option("--seeds", seeds, "coefficient seeds (freebasis)");

	auto *census = app.add_subcommand("census", "sweep split primes below a limit");
	int disc = -1;
	u64 limit = 1000000;
	census->add_option("--disc", disc, "field Q(sqrt(d)), class number one")->capture_default_str();
	census->add_option("--limit", limit, "prime bound")->capture_default_str();

	auto *check = app.add_subcommand("census-check", "criterion record for one prime");
	u64 prime = 0;
	check->add_option("--disc", disc, "field Q(sqrt(d))")->capture_default_str();
	check->add_option("--prime", prime, "prime")->required();

	auto *member = app.add_subcommand("membership", "decide g in Pi(m1,m2)");
	int m1 = 0, m2 = 0;
	bool verbose = false;
	std::string word;
	member->add_option("--m1", m1)->required();
	member->add_option("--m2", m2)->required();
	member->add_option("word", word, "word, e.g. \"[x1,x2] x1^3\"")->required();
	member->add_flag("--verbose", verbose, "include degree, component and params");

	auto *weval = app.add_subcommand("word-eval", "Magnus series of a word");
	weval->add_option("word", word)->required();

	auto *alpha = app.add_subcommand("alpha", "assemble alpha from a kappa table");
	std::string kappa;
	alpha->add_option("--kappa", kappa, "JSON object {\"(a,b)\": value}")->required();

	auto *witt = app.add_subcommand("witt", "graded ranks of free Lie algebras");
	std::string weights = "1,1";
	bool bigraded = false;
	int wmax = 8;
	witt->add_option("--weights", weights, "comma-separated generator weights")->capture_default_str();
	witt->add_option("--maxdeg", wmax)->capture_default_str()->check(CLI::PositiveNumber);
	witt->add_flag("--bigraded", bigraded, "two letters, ranks per (a,b)");

	auto *list = app.add_subcommand("list", "list suites");

	try {
		app.parse(argc, argv);
	} catch (CLI::ParseError const &e) {
		int rc = app.exit(e);
		return rc == 0 ? Exit::ok : Exit::usage;
	}

	try {
		if (*list) {
			if (as_json)
				emit(json(suite_names()), out);
			else
				for (auto const &n : suite_names())
					std::cout << n << "\n";
			return Exit::ok;
		}
		if (*suite) {
			auto names = suite_names();
			if (std::find(names.begin(), names.end(), suite_name) == names.end()) {
				std::cerr << "unknown suite '" << suite_name << "'\n\n" << suite->help();
				return Exit::usage;
			}
			SuiteConfig cfg;
			cfg.p = p, cfg.k = k, cfg.D = deg, cfg.seed = seed, cfg.jobs = jobs;
			cfg.trials = trials, cfg.maxdeg = maxdeg, cfg.r = r, cfg.seeds = seeds;
			cfg.params(); // validates (p,k,D)
			auto rep = run_suite(suite_name, cfg);
			emit(rep.to_json(), out);
			return rep.pass() ? Exit::ok : Exit::math_failure;
		}
		if (*census) {
			ImQuadField K(disc);
			auto s = sweep(K, limit, jobs);
			if (!out.empty()) {
				std::ofstream f(out);
				if (!f)
					throw UsageError("cannot open '" + out + "' for writing");
				write_csv(f, s.records);
				if (!f)
					throw UsageError("write to '" + out + "' failed");
			}
			std::cout << json{{"split", s.split}, {"pass", s.pass}}.dump() << "\n";
			return Exit::ok;
		}
		if (*check) {
			if (!is_prime_u64(prime) || prime < 5)
				throw UsageError("--prime must be a prime >= 5");
			emit(record_json(cond2_check(ImQuadField(disc), prime)), out);
			return Exit::ok;
		}
		TruncParams P(p, k, deg);
		if (*member) {
			IdealFamily fam(P);
			auto v = pi_membership(fam, eval_word(P, word), {m1, m2});
			json j{{"status", status_name(v.status)}};
			if (v.status == Status::out)
				j["witness"] = v.witness.str();
			if (verbose) {
				j = v.to_json();
				j["params"] = {{"p", p}, {"k", k}, {"deg", deg}, {"m", BiDegree{m1, m2}.str()}};
			}
			emit(j, out);
			return Exit::ok;
		}
		if (*weval) {
			auto v = eval_word_ex(P, word);
			emit({{"series", to_json(v.value.s)}, {"exponent_reduced", v.exponent_reduced}}, out);
			return Exit::ok;
		}
		if (*alpha) {
			Zq Z(P);
			json kj;
			try {
				kj = json::parse(kappa);
			} catch (json::parse_error const &e) {
				throw UsageError(std::string("bad --kappa JSON: ") + e.what());
			}
			if (!kj.is_object())
				throw UsageError("--kappa must be a JSON object");
			auto a = alpha_from_kappa(Z, P.D, kappa_from_json(Z, kj));
			emit({{"alpha", a.to_json()}, {"u_coordinates", to_u_coordinates(a).to_json()}}, out);
			return Exit::ok;
		}
		if (*witt) {
			json j;
			if (bigraded) {
				j["bigraded"] = json::object();
				for (int a = 0; a <= wmax; ++a)
					for (int b = 0; a + b <= wmax; ++b)
						if (a + b > 0)
							j["bigraded"][BiDegree{a, b}.str()] = bigraded_dim(a, b);
			} else {
				auto w = parse_weights(weights);
				auto d = witt_dims(weights_to_counts(w), wmax);
				j["weights"] = w;
				j["dims"] = std::vector<i64>(d.begin() + 1, d.end());
			}
			emit(j, out);
			return Exit::ok;
		}
	} catch (UsageError const &e) {
		std::cerr << "error: " << e.what() << "\n";
		return Exit::usage;
	} catch (ParamError const &e) {
		std::cerr << "error: " << e.what() << "\n";
		return Exit::usage;
	} catch (ParseError const &e) {
		std::cerr << "error: " << e.what() << "\n";
		return Exit::usage;
	} catch (std::exception const &e) {
		std::cerr << "failure: " << e.what() << "\n";
		return Exit::math_failure;
	}
	return Exit::usage;
}
