#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qbbw {

// Arbitrary-precision exact arithmetic. BigRational is always stored in
// lowest terms with a positive denominator; zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(BigInt num, BigInt den) {
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	if (den < 0) {
		num = -num;
		den = -den;
	}
	return BigRational(std::move(num), std::move(den));
}

inline BigRational reciprocal(const BigRational &r) {
	if (r == 0)
		throw std::domain_error("reciprocal of zero");
	return make_rational(denominator(r), numerator(r));
}

inline bool is_integer(const BigRational &r) { return denominator(r) == 1; }

inline BigInt to_integer(const BigRational &r) {
	if (!is_integer(r))
		throw std::domain_error("expected an integer, got " + r.str());
	return numerator(r);
}

inline std::string to_string(const BigRational &r) { return r.str(); }
inline std::string to_string(const BigInt &z) { return z.str(); }

} // namespace qbbw
