#pragma once

#include "qbbw/rational.hpp"

#include <set>
#include <vector>

namespace qbbw {

// Weight in the epsilon-basis of the Cartan dual of gl(m|n). Coordinates are
// rational so that rho-shifted weights (which may be half-integral) live in
// the same type; user-facing module weights are integral. Every weight
// carries its (m, n) context and cross-context arithmetic throws.
class Weight {
 public:
	Weight(int m, int n) : m_(m), n_(n), coords_(m + n, BigRational(0)) {}
	Weight(int m, int n, std::vector<BigRational> coords);

	static Weight epsilon(int m, int n, int a); // 1-based basis weight

	int m() const { return m_; }
	int n() const { return n_; }
	int dim() const { return m_ + n_; }
	const std::vector<BigRational> &coords() const { return coords_; }
	const BigRational &operator[](int i) const { return coords_[i]; } // 0-based

	bool is_integral() const;
	std::vector<long long> integer_coords() const; // throws if not integral

	Weight operator+(const Weight &rhs) const;
	Weight operator-(const Weight &rhs) const;
	bool operator==(const Weight &rhs) const = default;

	std::string to_string() const; // "(2,0|-1)"

 private:
	void check_context(const Weight &rhs) const;

	int m_, n_;
	std::vector<BigRational> coords_;
};

// The root eps_from - eps_to; odd exactly when one of the two indices
// exceeds m.
struct Root {
	int from = 0, to = 0; // 1-based
	bool odd = false;

	bool operator==(const Root &rhs) const = default;
	bool operator<(const Root &rhs) const {
		return std::pair(from, to) < std::pair(rhs.from, rhs.to);
	}
};

// Full root system of gl(m|n): all roots eps_a - eps_b (a != b), positive
// roots (a < b), simple roots (b = a+1), and the Weyl vector
// rho = rho0 - rho1 (even half-sum minus odd half-sum).
class RootData {
 public:
	RootData(int m, int n);

	int m() const { return m_; }
	int n() const { return n_; }
	int dim() const { return m_ + n_; }

	const std::vector<Root> &all_roots() const { return all_roots_; }
	const std::vector<Root> &positive_roots() const { return positive_roots_; }
	const std::vector<Root> &simple_roots() const { return simple_roots_; }
	std::vector<Root> even_positive_roots() const;
	std::vector<Root> odd_positive_roots() const;
	const Weight &rho() const { return rho_; }

	Weight root_weight(const Root &r) const; // eps_from - eps_to as a Weight

	// (mu, nu) = sum_{a<=m} mu_a nu_a - sum_{a>m} mu_a nu_a
	BigRational bilinear_form(const Weight &mu, const Weight &nu) const;

 private:
	int m_, n_;
	std::vector<Root> all_roots_, positive_roots_, simple_roots_;
	Weight rho_;
};

// (Theta0, Theta+, Theta-) generation data of a regular sub-superalgebra:
// Cartan indices in I = {1..m+n}, raising/lowering indices in
// I' = {1..m+n-1}.
struct SubalgebraSpec {
	std::set<int> theta0, theta_plus, theta_minus;

	bool operator==(const SubalgebraSpec &rhs) const = default;
};

SubalgebraSpec full_spec(const RootData &rd);        // g itself
SubalgebraSpec cartan_spec(const RootData &rd);      // h
SubalgebraSpec lower_borel_spec(const RootData &rd); // b-bar

struct SubalgebraClass {
	bool reductive = false;
	bool parabolic_lower = false;
	bool parabolic_upper = false;
};

// Total classification; throws only on out-of-range Theta indices.
SubalgebraClass classify_subalgebra(const RootData &rd, const SubalgebraSpec &spec);

// Connected index intervals of {1..m+n} cut out by a reductive spec's
// raising set; at most one block straddles index m and is super.
struct LeviBlock {
	int lo = 0, hi = 0; // 1-based inclusive
	bool is_super = false;

	int size() const { return hi - lo + 1; }
	bool operator==(const LeviBlock &rhs) const = default;
};

struct LeviBlocks {
	std::vector<LeviBlock> blocks;

	// Maximal intervals on which the bilinear form has constant sign: every
	// even block as-is, every super block split at index m.
	std::vector<std::pair<int, int>> even_intervals(int m) const;
};

// Levi factor of a lower parabolic (Theta- = I'): the reductive spec with
// Theta+ = Theta- = Theta+ of the input, plus its block decomposition.
std::pair<SubalgebraSpec, LeviBlocks> levi_factor(const RootData &rd, const SubalgebraSpec &parabolic);

// Block decomposition of a reductive spec (throws on non-reductive input).
LeviBlocks levi_blocks_of(const RootData &rd, const SubalgebraSpec &levi);

// Odd (resp. even) positive roots lying inside the blocks of a reductive spec.
std::vector<Root> odd_positive_roots_of(const RootData &rd, const SubalgebraSpec &levi);
std::vector<Root> even_positive_roots_of(const RootData &rd, const SubalgebraSpec &levi);

} // namespace qbbw
