#include "qbbw/ratfunc.hpp"

namespace qbbw {

RatFunc::RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
	if (den_.is_zero())
		throw std::domain_error("rational function with zero denominator");
	canonicalize();
}

void RatFunc::canonicalize() {
	if (num_.is_zero()) {
		den_ = LaurentPoly(1);
		return;
	}
	// shift den to an ordinary polynomial with nonzero constant term
	int ed = den_.min_exp();
	if (ed != 0) {
		num_ *= LaurentPoly::q(-ed);
		den_ *= LaurentPoly::q(-ed);
	}
	// cancel common polynomial factors, ignoring num's q-power
	int en = num_.min_exp();
	LaurentPoly num0 = num_ * LaurentPoly::q(-en);
	LaurentPoly g = poly_gcd(num0, den_);
	if (!(g == LaurentPoly(1))) {
		num0 = poly_divmod(num0, g).first;
		den_ = poly_divmod(den_, g).first;
	}
	// monic denominator
	BigRational lc = den_.leading_coeff();
	if (lc != 1) {
		LaurentPoly inv_lc(reciprocal(lc));
		num0 *= inv_lc;
		den_ *= inv_lc;
	}
	num_ = num0 * LaurentPoly::q(en);
}

RatFunc RatFunc::operator-() const {
	RatFunc r = *this;
	r.num_ = -r.num_;
	return r;
}

RatFunc operator+(const RatFunc &a, const RatFunc &b) {
	return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc operator*(const RatFunc &a, const RatFunc &b) {
	return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.invert(); }

RatFunc RatFunc::invert() const {
	if (num_.is_zero())
		throw std::domain_error("inverting the zero rational function");
	return RatFunc(den_, num_);
}

std::string RatFunc::to_string() const {
	if (den_ == LaurentPoly(1))
		return num_.to_string();
	return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace qbbw
