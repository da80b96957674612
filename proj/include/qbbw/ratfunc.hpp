#pragma once

#include "qbbw/laurent.hpp"

namespace qbbw {

// Element of the rational-function field Q(q), kept in canonical form:
// den is an ordinary polynomial (lowest exponent 0) and monic, and
// gcd(num, den) = 1 after clearing q-powers from num. Equality is
// structural equality of canonical forms.
class RatFunc {
 public:
	RatFunc() : num_(), den_(1) {}
	RatFunc(long long c) : num_(c), den_(1) {}
	RatFunc(const BigRational &c) : num_(c), den_(1) {}
	RatFunc(const LaurentPoly &n) : num_(n), den_(1) {}
	RatFunc(LaurentPoly n, LaurentPoly d);

	const LaurentPoly &num() const { return num_; }
	const LaurentPoly &den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }

	RatFunc operator-() const;
	friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
	friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
	friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
	friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
	RatFunc invert() const;

	bool operator==(const RatFunc &rhs) const = default;

	std::string to_string() const;

 private:
	void canonicalize();

	LaurentPoly num_, den_;
};

} // namespace qbbw
