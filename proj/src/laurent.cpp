#include "qbbw/laurent.hpp"

#include <sstream>

namespace qbbw {

int LaurentPoly::min_exp() const {
	if (is_zero())
		throw std::domain_error("min_exp of the zero polynomial");
	return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
	if (is_zero())
		throw std::domain_error("max_exp of the zero polynomial");
	return terms_.rbegin()->first;
}

BigRational LaurentPoly::coeff(int exp) const {
	auto it = terms_.find(exp);
	return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

LaurentPoly LaurentPoly::operator-() const {
	LaurentPoly r;
	for (const auto &[e, c] : terms_)
		r.terms_[e] = -c;
	return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
	for (const auto &[e, c] : rhs.terms_) {
		auto it = terms_.find(e);
		if (it == terms_.end()) {
			terms_[e] = c;
		} else {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}
	return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
	LaurentPoly r;
	for (const auto &[ea, ca] : a.terms_)
		for (const auto &[eb, cb] : b.terms_) {
			int e = ea + eb;
			auto it = r.terms_.find(e);
			if (it == r.terms_.end()) {
				BigRational c = ca * cb;
				if (c != 0)
					r.terms_[e] = std::move(c);
			} else {
				it->second += ca * cb;
				if (it->second == 0)
					r.terms_.erase(it);
			}
		}
	return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) {
	*this = *this * rhs;
	return *this;
}

LaurentPoly LaurentPoly::unit_inverse() const {
	if (is_zero())
		throw std::domain_error("inverting the zero polynomial");
	if (!is_unit())
		throw std::domain_error("inverting a non-unit Laurent polynomial: " + to_string());
	const auto &[e, c] = *terms_.begin();
	return monomial(reciprocal(c), -e);
}

BigRational LaurentPoly::eval_at(const BigRational &q0) const {
	if (q0 == 0) {
		if (!is_zero() && min_exp() < 0)
			throw std::domain_error("evaluating negative exponents at q = 0");
		return coeff(0);
	}
	BigRational r(0);
	for (const auto &[e, c] : terms_) {
		BigRational p(1);
		BigRational base = e >= 0 ? q0 : reciprocal(q0);
		for (int i = 0; i < (e >= 0 ? e : -e); ++i)
			p *= base;
		r += c * p;
	}
	return r;
}

std::string LaurentPoly::to_string() const {
	if (is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[e, c] : terms_) {
		if (!first)
			os << " + ";
		os << c.str() << "*q^" << e;
		first = false;
	}
	return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly &a, const LaurentPoly &b) {
	if (b.is_zero())
		throw std::domain_error("polynomial division by zero");
	if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
		throw std::domain_error("poly_divmod expects ordinary polynomials");
	LaurentPoly quot, rem = a;
	const int db = b.max_exp();
	const BigRational lb = b.leading_coeff();
	while (!rem.is_zero() && rem.max_exp() >= db) {
		int e = rem.max_exp() - db;
		BigRational c = rem.leading_coeff() / lb;
		LaurentPoly t = LaurentPoly::monomial(c, e);
		quot += t;
		rem -= t * b;
	}
	return {quot, rem};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
	while (!b.is_zero()) {
		auto [q, r] = poly_divmod(a, b);
		a = b;
		b = r;
	}
	if (a.is_zero())
		return a;
	// monic normalization
	return a * LaurentPoly(reciprocal(a.leading_coeff()));
}

} // namespace qbbw
