#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbbw/laurent.hpp"
#include "qbbw/ratfunc.hpp"

#include <random>

using namespace qbbw;

namespace {

LaurentPoly random_poly(std::mt19937 &rng) {
	std::uniform_int_distribution<int> nterms(0, 4), expd(-5, 5), coeffd(-6, 6);
	LaurentPoly p;
	int k = nterms(rng);
	for (int i = 0; i < k; ++i)
		p += LaurentPoly::monomial(BigRational(coeffd(rng)), expd(rng));
	return p;
}

} // namespace

TEST_CASE("rational invariants") {
	BigRational r = make_rational(BigInt(4), BigInt(-6));
	CHECK(numerator(r) == -2);
	CHECK(denominator(r) == 3);
	CHECK(make_rational(BigInt(0), BigInt(7)) == 0);
	CHECK(denominator(BigRational(0)) == 1);
	CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("laurent arithmetic basics") {
	LaurentPoly q = LaurentPoly::q();
	LaurentPoly qinv = LaurentPoly::q(-1);
	CHECK((q - qinv) + (qinv - q) == LaurentPoly());
	CHECK((q - qinv) * (q + qinv) == LaurentPoly::q(2) - LaurentPoly::q(-2));
	CHECK(LaurentPoly(3) * LaurentPoly(BigRational(1, 3)) == LaurentPoly(1));
}

TEST_CASE("laurent units") {
	CHECK(RatFunc(LaurentPoly::q(2)).invert() == RatFunc(LaurentPoly::q(-2)));
	CHECK(LaurentPoly::q(2).unit_inverse() == LaurentPoly::q(-2));
	CHECK(LaurentPoly::monomial(BigRational(-3, 2), 4).unit_inverse() ==
	      LaurentPoly::monomial(BigRational(-2, 3), -4));
	CHECK_THROWS_AS(LaurentPoly().unit_inverse(), std::domain_error);
	CHECK_THROWS_AS((LaurentPoly::q(1) + LaurentPoly(1)).unit_inverse(), std::domain_error);
}

TEST_CASE("eval_at") {
	LaurentPoly p = LaurentPoly::q(1) + LaurentPoly::q(-1);
	CHECK(p.eval_at(BigRational(2)) == BigRational(5, 2));
	CHECK(LaurentPoly().eval_at(BigRational(3)) == 0);
	CHECK((LaurentPoly::q(2) - LaurentPoly(1)).eval_at(BigRational(1)) == 0);
	CHECK((LaurentPoly::q(2) - LaurentPoly(1)).eval_at(BigRational(0)) == -1);
	CHECK_THROWS_AS(p.eval_at(BigRational(0)), std::domain_error);
}

TEST_CASE("eval_at is a ring homomorphism") {
	std::mt19937 rng(12345);
	std::uniform_int_distribution<int> qd(1, 7);
	for (int iter = 0; iter < 50; ++iter) {
		LaurentPoly a = random_poly(rng), b = random_poly(rng);
		BigRational q0(qd(rng), qd(rng) + 1);
		CHECK((a * b).eval_at(q0) == a.eval_at(q0) * b.eval_at(q0));
		CHECK((a + b).eval_at(q0) == a.eval_at(q0) + b.eval_at(q0));
	}
}

TEST_CASE("ring axioms on random triples") {
	std::mt19937 rng(777);
	for (int iter = 0; iter < 40; ++iter) {
		LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("no zero coefficients survive arithmetic") {
	std::mt19937 rng(9);
	for (int iter = 0; iter < 40; ++iter) {
		LaurentPoly a = random_poly(rng), b = random_poly(rng);
		for (const LaurentPoly &p : {a + b, a - b, a * b, a - a}) {
			for (const auto &[e, c] : p.terms())
				CHECK(c != 0);
		}
	}
}

TEST_CASE("ratfunc division") {
	LaurentPoly q = LaurentPoly::q();
	RatFunc f(q + LaurentPoly(1), q - LaurentPoly(1));
	RatFunc g(LaurentPoly::q(-2), q + LaurentPoly(3));
	CHECK(f / g * g == f);
	CHECK((f / f) == RatFunc(1));
	CHECK_THROWS_AS(f / RatFunc(), std::domain_error);
}

TEST_CASE("laurent serialization") {
	CHECK((LaurentPoly::q(1) - LaurentPoly::q(-1)).to_string() == "-1*q^-1 + 1*q^1");
	CHECK(LaurentPoly().to_string() == "0");
	CHECK(LaurentPoly(BigRational(3, 2)).to_string() == "3/2*q^0");
	CHECK((LaurentPoly(5) + LaurentPoly::q(-2)).to_string() == "1*q^-2 + 5*q^0");
}

TEST_CASE("ratfunc canonical form") {
	LaurentPoly q = LaurentPoly::q();
	// (q^2 - 1)/(q - 1) reduces to q + 1
	RatFunc f(q * q - LaurentPoly(1), q - LaurentPoly(1));
	CHECK(f == RatFunc(q + LaurentPoly(1)));
	CHECK(f.den() == LaurentPoly(1));

	// denominator is shifted to an ordinary monic polynomial
	RatFunc g(LaurentPoly(1), LaurentPoly::monomial(BigRational(2), -3) + LaurentPoly::monomial(BigRational(2), -2));
	CHECK(g.den().min_exp() == 0);
	CHECK(g.den().leading_coeff() == 1);

	// canonicalization is idempotent
	RatFunc again(g.num(), g.den());
	CHECK(again == g);

	CHECK_THROWS_AS(RatFunc(q, LaurentPoly()), std::domain_error);
}

TEST_CASE("ratfunc field axioms on random values") {
	std::mt19937 rng(4242);
	for (int iter = 0; iter < 25; ++iter) {
		LaurentPoly a = random_poly(rng), b = random_poly(rng);
		if (b.is_zero())
			b = LaurentPoly(1);
		RatFunc f(a, b);
		if (!f.is_zero())
			CHECK(f * f.invert() == RatFunc(1));
		LaurentPoly c = random_poly(rng), d = random_poly(rng);
		if (d.is_zero())
			d = LaurentPoly::q(1) + LaurentPoly(2);
		RatFunc g(c, d);
		CHECK(f * g == g * f);
		CHECK(f + g == g + f);
		CHECK((f + g) - g == f);
	}
	CHECK_THROWS_AS(RatFunc().invert(), std::domain_error);
}
