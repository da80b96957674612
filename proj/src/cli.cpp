#include "qbbw/cli.hpp"

#include "qbbw/cohomology.hpp"
#include "qbbw/jsonio.hpp"
#include "qbbw/textio.hpp"
#include "qbbw/uqrep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace qbbw {

namespace {

bool json_env() {
	const char *v = std::getenv("QBBW_JSON");
	return v != nullptr && std::string(v) == "1";
}

std::string human_result(const CohomologyResult &r) {
	if (r.is_vanishing())
		return "vanishes";
	const Concentrated &c = r.value();
	return "degree=" + std::to_string(c.degree) + " mu=" + c.mu.to_string() + " dim=" + c.dimension.str();
}

InputKind parse_kind(const std::string &s) {
	if (s == "irreducible")
		return InputKind::irreducible;
	if (s == "dual_kac")
		return InputKind::dual_kac;
	throw std::invalid_argument("input kind must be irreducible or dual_kac, got \"" + s + "\"");
}

int run_cohomology(int m, int n, const std::vector<std::string> &parabolics, const std::string &weight,
                   const std::string &kind, bool json, std::ostream &out) {
	RootData rd(m, n);
	Weight lambda = parse_weight(weight, m, n);
	std::vector<CohomologyResult> results;
	for (const std::string &ptext : parabolics) {
		BundleSpec spec = make_bundle_spec(rd, parse_theta(ptext, rd), lambda, parse_kind(kind));
		results.push_back(dolbeault(spec));
		if (json)
			out << result_to_json(results.back()).dump() << "\n";
		else
			out << human_result(results.back()) << "\n";
	}
	if (!json && results.size() > 1 &&
	    std::all_of(results.begin(), results.end(),
	                [&](const CohomologyResult &r) { return r == results.front(); }))
		out << "note: all given parabolics yield identical cohomology for lambda=" << lambda.to_string()
		    << "\n";
	return 0;
}

int run_character(int m, int n, const std::string &levi_text, const std::string &weight,
                  const std::string &which, bool json, std::ostream &out) {
	RootData rd(m, n);
	SubalgebraSpec levi = levi_text.empty() ? full_spec(rd) : parse_theta(levi_text, rd);
	if (!classify_subalgebra(rd, levi).reductive)
		throw std::invalid_argument("--levi must be a reductive spec (theta+ = theta-)");

	Character c(m, n);
	if (which == "lambda_factor") {
		auto odd = odd_positive_roots_of(rd, levi);
		c = char_lambda_factor(rd, odd);
	} else {
		if (weight.empty())
			throw std::invalid_argument("--weight is required for --which " + which);
		Weight mu = parse_weight(weight, m, n);
		if (which == "dual_kac")
			c = char_dual_kac(rd, levi, mu);
		else if (which == "levi_irreducible")
			c = char_levi_irreducible(rd, levi_blocks_of(rd, levi), mu);
		else
			throw std::invalid_argument("--which must be dual_kac, levi_irreducible or lambda_factor");
	}
	if (json) {
		out << character_to_json(c).dump() << "\n";
	} else {
		out << c.to_string() << "\n";
		out << "terms=" << c.terms().size() << " dim=" << c.dim().str() << "\n";
	}
	return 0;
}

int run_verify(int m, int n, int depth, std::ostream &out) {
	RelationReport report = verify_relations(vector_rep(m, n));
	RelationReport hopf = verify_hopf(m, n, depth); // includes tensor-square relations at depth 2

	for (const auto &c : hopf.checks)
		report.checks.push_back(c);

	Rep v = vector_rep(m, n);
	for (int a = 1; a <= m + n; ++a)
		for (int b = 1; b <= m + n; ++b) {
			if (a == b)
				continue;
			auto routes = root_vector_all_routes(v, a, b);
			bool ok = std::all_of(routes.begin(), routes.end(),
			                      [&](const PolyMatrix &r) { return r == routes.front(); });
			report.checks.push_back(RelationCheck{
			    "rootvec_c_independence(" + std::to_string(a) + "," + std::to_string(b) + ")", ok, 0});
			if ((a <= m) != (b <= m)) {
				PolyMatrix sq = routes.front() * routes.front();
				report.checks.push_back(RelationCheck{"rootvec_square(" + std::to_string(a) + "," +
				                                          std::to_string(b) + ")",
				                                      sq.is_zero(), sq.max_entry_exp()});
			}
		}

	// translation actions: super-commutation and the action law, aggregated
	// over all generator pairs and matrix elements
	bool commute_ok = true, action_ok = true;
	auto gens = all_generators(m, n);
	for (int i = 0; i < v.dim && (commute_ok || action_ok); ++i)
		for (int j = 0; j < v.dim; ++j) {
			FunctionElement f = matrix_element(v, i, j);
			for (Generator x : gens)
				for (Generator y : gens) {
					FunctionElement lr = dL(v, x, dR(v, y, f));
					FunctionElement rl = dR(v, y, dL(v, x, f));
					if (x.is_odd(m) && y.is_odd(m))
						rl.coeff = -rl.coeff;
					commute_ok &= lr == rl;
					GeneratorWord word{x, y};
					action_ok &= dL_word(v, word, f) == dL_word_direct(v, word, f) &&
					             dR_word(v, word, f) == dR_word_direct(v, word, f);
				}
		}
	report.checks.push_back(RelationCheck{"translation_supercommute", commute_ok, 0});
	report.checks.push_back(RelationCheck{"translation_action_law", action_ok, 0});

	out << report.summary();
	out << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << report.checks.size()
	    << " checks)\n";
	return report.all_pass() ? 0 : 2;
}

int run_scan(int m, int n, const std::string &parabolic_text, int range, const std::string &kind, bool json,
             std::ostream &out) {
	if (range < 0)
		throw std::invalid_argument("--range must be non-negative");
	RootData rd(m, n);
	SubalgebraSpec parabolic = parse_theta(parabolic_text, rd);

	std::vector<long long> coords(m + n, -range);
	bool done = false;
	while (!done) {
		std::vector<BigRational> c(coords.begin(), coords.end());
		Weight lambda(m, n, std::move(c));
		std::string status;
		nlohmann::ordered_json row;
		row["lambda"] = coords;
		try {
			BundleSpec spec = make_bundle_spec(rd, parabolic, lambda, parse_kind(kind));
			CohomologyResult r = dolbeault(spec);
			if (json) {
				row.update(result_to_json(r));
				out << row.dump() << "\n";
			} else {
				out << "lambda=" << lambda.to_string() << " " << human_result(r) << "\n";
			}
		} catch (const std::invalid_argument &) {
			if (json) {
				row["status"] = "invalid";
				out << row.dump() << "\n";
			} else {
				out << "lambda=" << lambda.to_string() << " invalid\n";
			}
		}
		// odometer over the box, last coordinate fastest
		done = true;
		for (int i = m + n - 1; i >= 0; --i) {
			if (coords[i] < range) {
				++coords[i];
				for (int j = i + 1; j < m + n; ++j)
					coords[j] = -range;
				done = false;
				break;
			}
		}
	}
	return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
	CLI::App app{"Dolbeault cohomology of quantum homogeneous supervector bundles over U_q(gl(m|n)), "
	             "with exact verification of the algebra's defining identities"};
	app.name("qbbw");
	app.require_subcommand(1);

	bool json = json_env();

	int m = 1, n = 1;
	std::string weight, kind = "dual_kac";
	std::vector<std::string> parabolics;

	auto add_common = [&](CLI::App *cmd) {
		cmd->add_option("-m", m, "even block size")->required()->check(CLI::PositiveNumber);
		cmd->add_option("-n", n, "odd block size")->required()->check(CLI::PositiveNumber);
		cmd->add_flag("--json", json, "emit JSON (also enabled by QBBW_JSON=1)");
	};

	CLI::App *coh = app.add_subcommand("cohomology", "cohomology of one bundle");
	add_common(coh);
	coh->add_option("--parabolic", parabolics, "lower parabolic theta spec, e.g. \"theta-=all\" (repeatable)");
	coh->add_option("--weight", weight, "highest weight, e.g. \"-2,0|0\"")->required();
	coh->add_option("--input", kind, "input module kind: irreducible | dual_kac");

	std::string levi_text, which = "dual_kac";
	CLI::App *chr = app.add_subcommand("character", "characters of Levi modules");
	add_common(chr);
	chr->add_option("--levi", levi_text, "reductive theta spec; defaults to the full algebra");
	chr->add_option("--weight", weight, "highest weight");
	chr->add_option("--which", which, "dual_kac | levi_irreducible | lambda_factor");

	int depth = 2;
	CLI::App *ver = app.add_subcommand("verify", "verify defining relations, Hopf axioms, root vectors");
	add_common(ver);
	ver->add_option("--depth", depth, "tensor depth 1 or 2")->check(CLI::Range(1, 2));

	int range = 1;
	std::string scan_parabolic = "theta-=all";
	CLI::App *scn = app.add_subcommand("scan", "tabulate cohomology over a weight box");
	add_common(scn);
	scn->add_option("--parabolic", scan_parabolic, "lower parabolic theta spec");
	scn->add_option("--range", range, "coordinate box [-range, range]")->required();
	scn->add_option("--input", kind, "input module kind: irreducible | dual_kac");

	std::vector<const char *> argv;
	argv.push_back("qbbw");
	for (const auto &s : args)
		argv.push_back(s.c_str());

	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError &e) {
		if (e.get_exit_code() == 0) { // --help
			out << app.help();
			return 0;
		}
		err << "usage error: " << e.what() << "\n";
		return 1;
	}

	try {
		if (coh->parsed()) {
			if (parabolics.empty())
				parabolics.push_back("theta-=all");
			return run_cohomology(m, n, parabolics, weight, kind, json, out);
		}
		if (chr->parsed())
			return run_character(m, n, levi_text, weight, which, json, out);
		if (ver->parsed())
			return run_verify(m, n, depth, out);
		if (scn->parsed())
			return run_scan(m, n, scan_parabolic, range, kind, json, out);
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}

} // namespace qbbw
