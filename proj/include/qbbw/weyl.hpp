#pragma once

#include "qbbw/rootdata.hpp"

#include <optional>
#include <span>

namespace qbbw {

// Element of the Weyl group S_m x S_n of the maximal even subalgebra, acting
// on weight coordinates blockwise. Permutations are stored as 0-based image
// tables; the action is (w.v)_i = v_{w^{-1}(i)} within each block.
class WeylElement {
 public:
	WeylElement(std::vector<int> perm_m, std::vector<int> perm_n);

	static WeylElement identity(int m, int n);

	int m() const { return static_cast<int>(perm_m_.size()); }
	int n() const { return static_cast<int>(perm_n_.size()); }
	const std::vector<int> &perm_m() const { return perm_m_; }
	const std::vector<int> &perm_n() const { return perm_n_; }

	WeylElement compose(const WeylElement &rhs) const; // this ∘ rhs
	WeylElement inverse() const;
	Weight act(const Weight &w) const;
	int length() const; // inversion count over both factors

	bool operator==(const WeylElement &rhs) const = default;
	bool operator<(const WeylElement &rhs) const;

	std::string to_string() const; // "[2,1|1]"

 private:
	std::vector<int> perm_m_, perm_n_;
};

// All m!*n! elements, for brute-force checks.
std::vector<WeylElement> all_weyl_elements(int m, int n);

// The rho-shifted action w.lambda = w(lambda+rho) - rho.
Weight dot(const WeylElement &w, const Weight &lambda, const RootData &rd);

// 2(lambda, alpha)/(alpha, alpha) is a non-negative integer for every root
// in the given even-positive subset. The caller picks the subset: the full
// even-positive set for g-dominance, a Levi's even-positive roots for
// l-dominance. For integral lambda the integrality part is automatic, so
// the test reduces to coordinate ordering.
bool is_dominant(const Weight &lambda, const RootData &rd, std::span<const Root> even_positive_subset);

bool is_g_dominant(const Weight &lambda, const RootData &rd);

// (lambda+rho, alpha) != 0 for all even roots: the coordinates of
// lambda+rho are pairwise distinct within each of the two blocks.
bool is_regular(const Weight &lambda, const RootData &rd);

// For g-regular lambda, the unique w making dot(w, lambda) g-dominant,
// found by sorting lambda+rho strictly decreasing within each block;
// empty for singular lambda.
std::optional<std::pair<WeylElement, Weight>> dominant_representative(const Weight &lambda, const RootData &rd);

} // namespace qbbw
