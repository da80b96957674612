#pragma once

#include "qbbw/rootdata.hpp"

#include <map>
#include <span>

namespace qbbw {

// Element of the formal character ring Z[h*_Z]: a sparse map from integral
// weights (as coordinate vectors) to integer multiplicities. Multiplication
// convolves weights (e^mu * e^nu = e^{mu+nu}).
class Character {
 public:
	Character(int m, int n) : m_(m), n_(n) {}

	static Character one(int m, int n); // e^0
	static Character of_weight(const Weight &w, long long mult = 1);

	int m() const { return m_; }
	int n() const { return n_; }
	const std::map<std::vector<long long>, long long> &terms() const { return terms_; }

	void add_term(const std::vector<long long> &weight, long long mult);
	long long mult_of(const Weight &w) const;

	Character operator+(const Character &rhs) const;
	Character operator*(const Character &rhs) const;
	bool operator==(const Character &rhs) const = default;

	// Evaluation e^mu -> 1: total dimension for characters of modules.
	BigInt dim() const;

	// The terms' maximum in the dominance order induced by the upper Borel
	// (mu >= nu iff mu - nu has non-negative prefix sums and total zero),
	// when a maximum exists.
	std::optional<std::pair<Weight, long long>> highest_term() const;

	std::string to_string() const;

 private:
	void check_context(const Character &rhs) const;

	int m_, n_;
	std::map<std::vector<long long>, long long> terms_;
};

// Character of the irreducible gl_k module with the given non-increasing
// highest weight, computed by Gelfand-Tsetlin pattern enumeration. The
// block occupies ambient 1-based indices [lo, lo+k-1]; coordinates outside
// the block are zero.
Character char_irreducible_block(const RootData &rd, int lo, std::span<const long long> mu_block);

// Weyl dimension formula for gl_k: prod_{i<j} (mu_i - mu_j + j - i)/(j - i).
// Independent of the pattern enumeration above.
BigInt dim_weyl_block(std::span<const long long> mu_block);

// Product over the Levi's even-split blocks of irreducible block characters
// at mu; this is the h-character of the irreducible module over the even
// part of the Levi (the odd lowering generator acts by zero, so the
// h-character sees only the even blocks).
Character char_levi_irreducible(const RootData &rd, const LeviBlocks &blocks, const Weight &mu);

// prod_{gamma in odd_roots} (1 + e^{-gamma}); the character of the exterior
// algebra on the odd negative root spaces. Dimension 2^{#odd_roots}.
Character char_lambda_factor(const RootData &rd, std::span<const Root> odd_roots);

// Character of the dual Kac module of the given reductive spec at an
// l-dominant integral mu: lambda-factor times the even-part irreducible
// character.
Character char_dual_kac(const RootData &rd, const SubalgebraSpec &levi, const Weight &mu);

// mu is non-increasing on every even-split block interval.
bool is_levi_dominant(const RootData &rd, const LeviBlocks &blocks, const Weight &mu);

} // namespace qbbw
