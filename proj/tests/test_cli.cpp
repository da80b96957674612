#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbbw/cli.hpp"
#include "qbbw/jsonio.hpp"
#include "qbbw/textio.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

using namespace qbbw;

namespace {

struct CliRun {
	int code;
	std::string out, err;
};

CliRun run(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = run_cli(std::move(args), out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("weight parsing") {
	Weight w = parse_weight("2,0|-1", 2, 1);
	CHECK(w.to_string() == "(2,0|-1)");
	CHECK(parse_weight("(2,0|-1)", 2, 1) == w);
	CHECK_THROWS_AS(parse_weight("2,0,-1", 2, 1), std::invalid_argument);
	CHECK_THROWS_AS(parse_weight("2|0,-1", 2, 1), std::invalid_argument); // split disagrees with m,n
	CHECK_THROWS_AS(parse_weight("a,0|1", 2, 1), std::invalid_argument);
}

TEST_CASE("theta parsing") {
	RootData rd(2, 2);
	SubalgebraSpec s = parse_theta("theta+=1,3;theta-=all", rd);
	CHECK(s.theta0 == std::set<int>{1, 2, 3, 4});
	CHECK(s.theta_plus == std::set<int>{1, 3});
	CHECK(s.theta_minus == std::set<int>{1, 2, 3});

	CHECK(parse_theta("theta-=all", rd) == lower_borel_spec(rd));
	CHECK(parse_theta("theta+=all;theta-=all", rd) == full_spec(rd));
	CHECK_THROWS_AS(parse_theta("theta+=7", rd), std::invalid_argument);
	CHECK_THROWS_AS(parse_theta("junk", rd), std::invalid_argument);
}

TEST_CASE("weyl element parsing round trip") {
	WeylElement w({1, 0}, {0});
	CHECK(parse_weyl(w.to_string()) == w);
	CHECK(parse_weyl("[2,1|1]") == w);
	CHECK_THROWS_AS(parse_weyl("2,1|1"), std::invalid_argument);
}

TEST_CASE("cohomology subcommand output") {
	CliRun r = run({"cohomology", "-m", "2", "-n", "1", "--parabolic", "theta-=all", "--weight", "-2,0|0"});
	CHECK(r.code == 0);
	CHECK(r.out == "degree=1 mu=(-1,-1|0) dim=4\n");

	CliRun vanish = run({"cohomology", "-m", "2", "-n", "1", "--weight", "-1,0|0"});
	CHECK(vanish.code == 0);
	CHECK(vanish.out == "vanishes\n");

	CliRun usage = run({"cohomology", "-m", "2", "-n", "1", "--weight", "0|0,0"});
	CHECK(usage.code == 1);
	CHECK(usage.err.find("block sizes") != std::string::npos);

	CliRun hypothesis = run({"cohomology", "-m", "2", "-n", "1", "--weight", "0,0|0",
	                         "--parabolic", "theta+=2;theta-=all", "--input", "irreducible"});
	CHECK(hypothesis.code == 1);
	CHECK(hypothesis.err.find("dual_kac") != std::string::npos);
}

TEST_CASE("two parabolics with the same cohomology print a note") {
	CliRun r = run({"cohomology", "-m", "2", "-n", "1", "--weight", "0,0|0",
	                "--parabolic", "theta-=all", "--parabolic", "theta+=1;theta-=all"});
	CHECK(r.code == 0);
	CHECK(r.out.find("note: all given parabolics yield identical cohomology") != std::string::npos);
}

TEST_CASE("character subcommand") {
	CliRun r = run({"character", "-m", "1", "-n", "1", "--which", "dual_kac", "--weight", "0|0"});
	CHECK(r.code == 0);
	CHECK(r.out.find("terms=2") != std::string::npos);

	CliRun json = run({"character", "-m", "1", "-n", "1", "--which", "dual_kac", "--weight", "0|0", "--json"});
	CHECK(json.code == 0);
	Character c = character_from_json(nlohmann::json::parse(json.out));
	RootData rd(1, 1);
	CHECK(c == char_dual_kac(rd, full_spec(rd), Weight(1, 1)));

	CliRun lf = run({"character", "-m", "2", "-n", "2", "--which", "lambda_factor", "--json"});
	CHECK(lf.code == 0);
	CHECK(character_from_json(nlohmann::json::parse(lf.out)).dim() == 16);
}

TEST_CASE("QBBW_JSON environment variable selects json output") {
	setenv("QBBW_JSON", "1", 1);
	CliRun r = run({"cohomology", "-m", "2", "-n", "1", "--weight", "-2,0|0"});
	unsetenv("QBBW_JSON");
	CHECK(r.code == 0);
	auto j = nlohmann::json::parse(r.out);
	CHECK(j.at("status") == "concentrated");
	CHECK(j.at("degree") == 1);
}

TEST_CASE("character subcommand with an explicit levi") {
	CliRun r = run({"character", "-m", "2", "-n", "1", "--levi", "theta+=1;theta-=1",
	                "--which", "levi_irreducible", "--weight", "1,0|5", "--json"});
	CHECK(r.code == 0);
	Character c = character_from_json(nlohmann::json::parse(r.out));
	CHECK(c.dim() == 2);

	CliRun bad = run({"character", "-m", "2", "-n", "1", "--levi", "theta+=1",
	                  "--which", "dual_kac", "--weight", "0,0|0"});
	CHECK(bad.code == 1);
	CHECK(bad.err.find("reductive") != std::string::npos);
}

TEST_CASE("verify subcommand") {
	CliRun r = run({"verify", "-m", "1", "-n", "1", "--depth", "2"});
	CHECK(r.code == 0);
	CHECK(r.out.find("FAIL") == std::string::npos);
	CHECK(r.out.find("REL ") != std::string::npos);
	CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("malformed invocations exit with usage errors") {
	for (auto args : std::vector<std::vector<std::string>>{
	         {},
	         {"nonsense"},
	         {"cohomology"},                                              // missing required flags
	         {"cohomology", "-m", "0", "-n", "1", "--weight", "0|0"},     // m must be positive
	         {"cohomology", "-m", "2", "-n", "1", "--weight", "0,0|0", "--input", "bogus"},
	         {"cohomology", "-m", "2", "-n", "1", "--weight", "0,0|0", "--parabolic", "theta+=9"},
	         {"verify", "-m", "1", "-n", "1", "--depth", "3"},
	         {"scan", "-m", "1", "-n", "1"},                              // missing --range
	         {"scan", "-m", "1", "-n", "1", "--range", "-2"},
	         {"character", "-m", "1", "-n", "1", "--which", "unknown", "--weight", "0|0"},
	         {"character", "-m", "1", "-n", "1", "--which", "dual_kac"},  // weight required
	     }) {
		CliRun r = run(args);
		CHECK(r.code == 1);
		CHECK(r.out.empty());
		CHECK_FALSE(r.err.empty());
	}
}

TEST_CASE("irreducible input works for purely even levis") {
	CliRun r = run({"cohomology", "-m", "2", "-n", "1", "--weight", "1,0|0",
	                "--parabolic", "theta+=1;theta-=all", "--input", "irreducible"});
	CHECK(r.code == 0);
	CHECK(r.out.find("degree=0") != std::string::npos);
}

TEST_CASE("json round trip through the result schema") {
	RootData rd(2, 1);
	for (auto coords : {std::vector<long long>{-2, 0, 0}, std::vector<long long>{-1, 0, 0}}) {
		std::vector<BigRational> c(coords.begin(), coords.end());
		Weight lam(2, 1, std::move(c));
		CohomologyResult r = dolbeault(make_bundle_spec(rd, lower_borel_spec(rd), lam, InputKind::dual_kac));
		CohomologyResult back = result_from_json(nlohmann::json::parse(result_to_json(r).dump()));
		CHECK(back == r);
	}
}

TEST_CASE("scan is deterministic and sorted") {
	CliRun a = run({"scan", "-m", "1", "-n", "1", "--range", "1"});
	CliRun b = run({"scan", "-m", "1", "-n", "1", "--range", "1"});
	CHECK(a.code == 0);
	CHECK(a.out == b.out);

	std::istringstream lines(a.out);
	std::string line;
	std::vector<std::string> rows;
	while (std::getline(lines, line))
		rows.push_back(line);
	CHECK(rows.size() == 9);
	CHECK(rows.front().find("lambda=(-1|-1)") == 0);
	CHECK(rows.back().find("lambda=(1|1)") == 0);
	// every gl(1|1) row concentrates in degree 0 with dimension 2
	for (const std::string &row : rows) {
		CHECK(row.find("degree=0") != std::string::npos);
		CHECK(row.find("dim=2") != std::string::npos);
	}
}

TEST_CASE("weight format round trip") {
	std::mt19937 rng(3);
	std::uniform_int_distribution<long long> d(-9, 9);
	for (int iter = 0; iter < 30; ++iter) {
		int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
		std::vector<BigRational> c;
		for (int i = 0; i < m + n; ++i)
			c.emplace_back(d(rng));
		Weight w(m, n, std::move(c));
		CHECK(parse_weight(w.to_string(), m, n) == w);
	}
}

TEST_CASE("scan reports rows the bundle hypotheses reject") {
	// an irreducible input through a super-Levi parabolic is never valid
	CliRun r = run({"scan", "-m", "1", "-n", "1", "--range", "0", "--parabolic",
	                "theta+=1;theta-=all", "--input", "irreducible"});
	CHECK(r.code == 0);
	CHECK(r.out == "lambda=(0|0) invalid\n");
}

TEST_CASE("scan json rows parse") {
	CliRun r = run({"scan", "-m", "2", "-n", "1", "--range", "1", "--json"});
	CHECK(r.code == 0);
	std::istringstream lines(r.out);
	std::string line;
	int rows = 0, vanishing = 0, concentrated = 0, invalid = 0;
	while (std::getline(lines, line)) {
		auto j = nlohmann::json::parse(line);
		++rows;
		std::string status = j.at("status").get<std::string>();
		if (status == "vanishes")
			++vanishing;
		else if (status == "concentrated")
			++concentrated;
		else
			++invalid;
	}
	CHECK(rows == 27);
	CHECK(invalid == 0); // borel bundles accept every integral weight
	CHECK(vanishing > 0);
	CHECK(concentrated > 0);
}
