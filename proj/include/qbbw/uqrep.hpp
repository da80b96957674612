#pragma once

#include "qbbw/polymatrix.hpp"
#include "qbbw/rootdata.hpp"

#include <span>
#include <string>
#include <vector>

namespace qbbw {

// Generator of the quantized enveloping algebra: E(a,a+1), E(a+1,a) for a
// in I', K(b)^{+-1} for b in I. The two simple root generators at index m
// are odd, everything else is even.
struct Generator {
	enum class Kind { raise, lower, k, kinv };

	Kind kind = Kind::k;
	int index = 1; // 1-based

	static Generator raise(int a) { return {Kind::raise, a}; }
	static Generator lower(int a) { return {Kind::lower, a}; }
	static Generator k(int b) { return {Kind::k, b}; }
	static Generator kinv(int b) { return {Kind::kinv, b}; }

	bool is_odd(int m) const { return (kind == Kind::raise || kind == Kind::lower) && index == m; }
	std::string name() const;

	bool operator==(const Generator &rhs) const = default;
};

using GeneratorWord = std::vector<Generator>;

bool word_is_odd(std::span<const Generator> word, int m);

// Finite-dimensional matrix model: parity and weight per basis vector plus
// the generator images. Weight homogeneity and K(b)*Kinv(b) = 1 hold by
// construction for the reps built below; validate() re-checks them.
struct Rep {
	int m = 0, n = 0, dim = 0;
	std::vector<bool> odd;       // basis parity
	std::vector<Weight> weights; // basis weight
	std::vector<PolyMatrix> raise_images, lower_images; // index a-1, a in I'
	std::vector<PolyMatrix> k_images, kinv_images;      // index b-1, b in I

	const PolyMatrix &image(Generator g) const;
	PolyMatrix word_image(std::span<const Generator> word) const; // left-to-right product; empty word = identity
	void validate() const;
};

// The (m+n)-dimensional vector representation: basis vector b has weight
// eps_b and is odd iff b > m; E(a,a+1), E(a+1,a) act as matrix units and
// K(b) is diagonal with entries q^{(eps_a, eps_b)}.
Rep vector_rep(int m, int n);

// One-dimensional representation with K = 1, E = 0 (the counit in matrix
// form).
Rep trivial_rep(int m, int n);

// Super tensor product via the coproduct, with the sign rule
// (x (x) y)(v (x) w) = (-1)^{[y][v]} xv (x) yw.
Rep tensor_rep(const Rep &a, const Rep &b);

// Image of the root vector E_{ab} (a != b) under the rep, by the recursion
// E_{ab} = E_{ac}E_{cb} - q_c^{-1} E_{cb}E_{ac} (a < c < b) and
// E_{ab} = E_{ac}E_{cb} - q_c E_{cb}E_{ac} (a > c > b), with the innermost
// admissible c by default.
PolyMatrix root_vector(const Rep &rep, int a, int b);

// One matrix per admissible top-level c; all must agree.
std::vector<PolyMatrix> root_vector_all_routes(const Rep &rep, int a, int b);

struct RelationCheck {
	std::string name;
	bool pass = false;
	int residual_degree = 0; // max exponent of the residual, failures only

	std::string line() const; // "REL <name> PASS|FAIL [degree]"
};

struct RelationReport {
	std::vector<RelationCheck> checks;

	bool all_pass() const;
	std::string summary() const;
};

// Every defining relation, evaluated as a matrix of Laurent polynomials and
// required to vanish identically in q (denominator-cleared where the
// relation divides by q_a - q_a^{-1}).
RelationReport verify_relations(const Rep &rep);

// Antipode axiom on every generator, evaluated in the vector rep (depth 1)
// and additionally in its tensor square (depth 2); the coproduct is checked
// as an algebra map by re-verifying the relations on the tensor square, the
// counit by verifying them in the one-dimensional counit rep.
RelationReport verify_hopf(int m, int n, int depth);

// Functional on the algebra spanned by matrix elements of a rep: the
// coefficient matrix C stands for sum_ij C_ij pi_ij. All contributing
// pi_ij share the parity [i]+[j] recorded here.
struct FunctionElement {
	PolyMatrix coeff;
	bool odd = false;

	bool operator==(const FunctionElement &rhs) const = default;
};

FunctionElement matrix_element(const Rep &rep, int i, int j);

// Antipode image of a generator (resp. word, with the anti-homomorphism
// sign (-1)^{sum_{i<j} [g_i][g_j]}) in the rep.
PolyMatrix antipode_image(const Rep &rep, Generator g);
PolyMatrix antipode_word_image(const Rep &rep, std::span<const Generator> word);

// Left and right translation actions on matrix elements:
//   <dL_x f, y> = (-1)^{[x][f]} <f, S(x) y>,  <dR_x f, y> = (-1)^{[x]} <f, y x>.
FunctionElement dL(const Rep &rep, Generator x, const FunctionElement &f);
FunctionElement dR(const Rep &rep, Generator x, const FunctionElement &f);

// Word actions as compositions (dL_{xy} = dL_x dL_y, applied rightmost
// first) and as single contractions through S(word)/word; the two routes
// must agree.
FunctionElement dL_word(const Rep &rep, std::span<const Generator> word, const FunctionElement &f);
FunctionElement dR_word(const Rep &rep, std::span<const Generator> word, const FunctionElement &f);
FunctionElement dL_word_direct(const Rep &rep, std::span<const Generator> word, const FunctionElement &f);
FunctionElement dR_word_direct(const Rep &rep, std::span<const Generator> word, const FunctionElement &f);

// Both translation actions of a generator word on f, as coefficient
// combinations of matrix elements.
std::pair<FunctionElement, FunctionElement> translation_actions(const Rep &rep,
                                                                std::span<const Generator> word,
                                                                const FunctionElement &f);

// All generators of U_q(gl(m|n)) in a fixed order.
std::vector<Generator> all_generators(int m, int n);

} // namespace qbbw
