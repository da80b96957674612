#pragma once

#include "qbbw/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace qbbw {

// Laurent polynomial in q over the rationals, stored as a sparse map from
// exponent to coefficient. No zero coefficient is ever stored; the zero
// polynomial is the empty map. Values are immutable in spirit: every
// operation returns a fresh canonical value.
class LaurentPoly {
 public:
	LaurentPoly() = default; // zero
	LaurentPoly(long long c) { set_coeff(0, BigRational(c)); }
	LaurentPoly(const BigRational &c) { set_coeff(0, c); }

	static LaurentPoly monomial(const BigRational &c, int exp) {
		LaurentPoly p;
		p.set_coeff(exp, c);
		return p;
	}
	// q^exp
	static LaurentPoly q(int exp = 1) { return monomial(BigRational(1), exp); }

	bool is_zero() const { return terms_.empty(); }
	const std::map<int, BigRational> &terms() const { return terms_; }

	// Lowest/highest exponent with nonzero coefficient; precondition: nonzero.
	int min_exp() const;
	int max_exp() const;
	BigRational coeff(int exp) const;
	BigRational leading_coeff() const;

	LaurentPoly operator-() const;
	LaurentPoly &operator+=(const LaurentPoly &rhs);
	LaurentPoly &operator-=(const LaurentPoly &rhs);
	LaurentPoly &operator*=(const LaurentPoly &rhs);
	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
	friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);

	bool operator==(const LaurentPoly &rhs) const = default;

	// A unit of the Laurent ring is a single nonzero term c*q^e.
	bool is_unit() const { return terms_.size() == 1; }
	LaurentPoly unit_inverse() const;

	// Exact evaluation at q = q0. q0 = 0 is rejected when negative exponents
	// are present.
	BigRational eval_at(const BigRational &q0) const;

	// Canonical serialization, terms in increasing exponent order, e.g.
	// "-1*q^-1 + 1*q^1"; the zero polynomial prints as "0".
	std::string to_string() const;

 private:
	void set_coeff(int exp, const BigRational &c) {
		if (c == 0)
			terms_.erase(exp);
		else
			terms_[exp] = c;
	}

	std::map<int, BigRational> terms_;
};

// Quotient and remainder of ordinary polynomials (min_exp >= 0 required,
// b nonzero): a = quot*b + rem with rem = 0 or deg(rem) < deg(b).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly &a, const LaurentPoly &b);

// Monic gcd of ordinary polynomials; gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

} // namespace qbbw
