#pragma once

#include "qbbw/character.hpp"
#include "qbbw/weyl.hpp"

namespace qbbw {

// Input module carried by the bundle: the irreducible module of the
// parabolic (requires a purely even Levi factor) or the dual Kac module of
// the Levi inflated to the parabolic.
enum class InputKind { irreducible, dual_kac };

// Validated description of a homogeneous supervector bundle: a lower
// parabolic with its Levi data and an l-dominant integral weight.
struct BundleSpec {
	RootData rd;
	SubalgebraSpec parabolic;
	SubalgebraSpec levi;
	LeviBlocks blocks;
	Weight lambda;
	InputKind input_kind = InputKind::dual_kac;
};

// Throws (with a one-line reason) when the parabolic is not lower, lambda is
// not integral or not l-dominant, or input_kind = irreducible is paired
// with a super Levi.
BundleSpec make_bundle_spec(const RootData &rd, const SubalgebraSpec &parabolic, const Weight &lambda,
                            InputKind input_kind);

struct Concentrated {
	int degree = 0;
	WeylElement w;
	Weight mu;
	Character character;
	BigInt dimension;

	bool operator==(const Concentrated &rhs) const = default;
};

class CohomologyResult {
 public:
	static CohomologyResult vanishes() { return CohomologyResult(); }
	static CohomologyResult concentrated(Concentrated c) {
		CohomologyResult r;
		r.c_ = std::move(c);
		return r;
	}

	bool is_vanishing() const { return !c_.has_value(); }
	const Concentrated &value() const {
		if (!c_)
			throw std::logic_error("vanishing cohomology has no value");
		return *c_;
	}

	bool operator==(const CohomologyResult &rhs) const = default;

 private:
	std::optional<Concentrated> c_;
};

// The cohomology of the bundle, concentrated in a single degree or zero:
// singular lambda vanishes; regular lambda yields degree |w| for the unique
// dominantizing w, with value the dual Kac module of the full algebra at
// mu = w(lambda+rho) - rho.
CohomologyResult dolbeault(const BundleSpec &spec);

struct CrossCheckReport {
	bool agree = false;
	CohomologyResult irreducible_route;
	CohomologyResult dual_kac_route;
	std::string diff; // empty when agree
};

// Runs both input kinds on the same bundle data (purely even Levi required)
// and diffs the results.
CrossCheckReport cross_check_theorems(const RootData &rd, const SubalgebraSpec &parabolic, const Weight &lambda);

} // namespace qbbw
