#include "qbbw/cohomology.hpp"

#include <sstream>

namespace qbbw {

BundleSpec make_bundle_spec(const RootData &rd, const SubalgebraSpec &parabolic, const Weight &lambda,
                            InputKind input_kind) {
	if (lambda.m() != rd.m() || lambda.n() != rd.n())
		throw std::invalid_argument("weight context does not match the root data");
	auto [levi, blocks] = levi_factor(rd, parabolic); // rejects non-lower parabolics
	if (!lambda.is_integral())
		throw std::invalid_argument("input module undefined: weight is not integral");
	if (!is_levi_dominant(rd, blocks, lambda))
		throw std::invalid_argument("input module undefined: weight is not dominant for the Levi");
	if (input_kind == InputKind::irreducible) {
		for (const LeviBlock &b : blocks.blocks)
			if (b.is_super)
				throw std::invalid_argument(
				    "irreducible input requires a purely even Levi factor; use input kind dual_kac");
	}
	return BundleSpec{rd, parabolic, std::move(levi), std::move(blocks), lambda, input_kind};
}

CohomologyResult dolbeault(const BundleSpec &spec) {
	const RootData &rd = spec.rd;
	auto rep = dominant_representative(spec.lambda, rd);
	if (!rep)
		return CohomologyResult::vanishes();
	auto &[w, mu] = *rep;

	SubalgebraSpec g = full_spec(rd);
	Character character = char_dual_kac(rd, g, mu);

	// dim = 2^{mn} * prod of even-block Weyl dimensions at mu
	std::vector<long long> c = mu.integer_coords();
	BigInt dimension = BigInt(1) << (rd.m() * rd.n());
	dimension *= dim_weyl_block(std::span<const long long>(c.data(), rd.m()));
	dimension *= dim_weyl_block(std::span<const long long>(c.data() + rd.m(), rd.n()));

	return CohomologyResult::concentrated(
	    Concentrated{w.length(), w, mu, std::move(character), std::move(dimension)});
}

namespace {

std::string describe(const CohomologyResult &r) {
	if (r.is_vanishing())
		return "vanishes";
	const Concentrated &c = r.value();
	std::ostringstream os;
	os << "degree=" << c.degree << " w=" << c.w.to_string() << " mu=" << c.mu.to_string()
	   << " dim=" << c.dimension.str();
	return os.str();
}

} // namespace

CrossCheckReport cross_check_theorems(const RootData &rd, const SubalgebraSpec &parabolic, const Weight &lambda) {
	CrossCheckReport rep;
	rep.irreducible_route = dolbeault(make_bundle_spec(rd, parabolic, lambda, InputKind::irreducible));
	rep.dual_kac_route = dolbeault(make_bundle_spec(rd, parabolic, lambda, InputKind::dual_kac));
	rep.agree = rep.irreducible_route == rep.dual_kac_route;
	if (!rep.agree)
		rep.diff = "irreducible route: " + describe(rep.irreducible_route) +
		           "; dual_kac route: " + describe(rep.dual_kac_route);
	return rep;
}

} // namespace qbbw
