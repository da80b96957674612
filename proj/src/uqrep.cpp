#include "qbbw/uqrep.hpp"

#include <sstream>

namespace qbbw {

std::string Generator::name() const {
	std::ostringstream os;
	switch (kind) {
	case Kind::raise:
		os << "E(" << index << "," << index + 1 << ")";
		break;
	case Kind::lower:
		os << "E(" << index + 1 << "," << index << ")";
		break;
	case Kind::k:
		os << "K(" << index << ")";
		break;
	case Kind::kinv:
		os << "Kinv(" << index << ")";
		break;
	}
	return os.str();
}

bool word_is_odd(std::span<const Generator> word, int m) {
	bool odd = false;
	for (const Generator &g : word)
		odd ^= g.is_odd(m);
	return odd;
}

const PolyMatrix &Rep::image(Generator g) const {
	switch (g.kind) {
	case Generator::Kind::raise:
		return raise_images.at(g.index - 1);
	case Generator::Kind::lower:
		return lower_images.at(g.index - 1);
	case Generator::Kind::k:
		return k_images.at(g.index - 1);
	case Generator::Kind::kinv:
		return kinv_images.at(g.index - 1);
	}
	throw std::logic_error("unreachable");
}

PolyMatrix Rep::word_image(std::span<const Generator> word) const {
	PolyMatrix r = PolyMatrix::identity(dim);
	for (const Generator &g : word)
		r = r * image(g);
	return r;
}

void Rep::validate() const {
	const PolyMatrix id = PolyMatrix::identity(dim);
	RootData rd(m, n);
	for (int b = 1; b <= m + n; ++b) {
		if (!(k_images[b - 1] * kinv_images[b - 1] == id))
			throw std::logic_error("K(b)*Kinv(b) != 1");
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j) {
				const LaurentPoly &e = k_images[b - 1].at(i, j);
				if (i != j && !e.is_zero())
					throw std::logic_error("K image is not diagonal");
				if (i == j) {
					int exp = to_integer(rd.bilinear_form(weights[i], Weight::epsilon(m, n, b)))
					              .convert_to<int>();
					if (!(e == LaurentPoly::q(exp)))
						throw std::logic_error("K eigenvalue disagrees with basis weight");
				}
			}
	}
	for (int a = 1; a < m + n; ++a) {
		Weight alpha = Weight::epsilon(m, n, a) - Weight::epsilon(m, n, a + 1);
		bool gen_odd = a == m;
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j) {
				if (!raise_images[a - 1].at(i, j).is_zero()) {
					if (!(weights[i] == weights[j] + alpha))
						throw std::logic_error("raising image is not weight homogeneous");
					if ((odd[i] != odd[j]) != gen_odd)
						throw std::logic_error("raising image parity mismatch");
				}
				if (!lower_images[a - 1].at(i, j).is_zero()) {
					if (!(weights[i] + alpha == weights[j]))
						throw std::logic_error("lowering image is not weight homogeneous");
					if ((odd[i] != odd[j]) != gen_odd)
						throw std::logic_error("lowering image parity mismatch");
				}
			}
	}
}

Rep vector_rep(int m, int n) {
	RootData rd(m, n);
	const int N = m + n;
	Rep rep;
	rep.m = m;
	rep.n = n;
	rep.dim = N;
	for (int b = 1; b <= N; ++b) {
		rep.odd.push_back(b > m);
		rep.weights.push_back(Weight::epsilon(m, n, b));
	}
	for (int a = 1; a < N; ++a) {
		PolyMatrix up(N, N), down(N, N);
		up.at(a - 1, a) = LaurentPoly(1);   // e_{a,a+1}
		down.at(a, a - 1) = LaurentPoly(1); // e_{a+1,a}
		rep.raise_images.push_back(std::move(up));
		rep.lower_images.push_back(std::move(down));
	}
	for (int b = 1; b <= N; ++b) {
		PolyMatrix k(N, N), kinv(N, N);
		for (int i = 0; i < N; ++i) {
			int exp = to_integer(rd.bilinear_form(rep.weights[i], Weight::epsilon(m, n, b))).convert_to<int>();
			k.at(i, i) = LaurentPoly::q(exp);
			kinv.at(i, i) = LaurentPoly::q(-exp);
		}
		rep.k_images.push_back(std::move(k));
		rep.kinv_images.push_back(std::move(kinv));
	}
	return rep;
}

Rep trivial_rep(int m, int n) {
	Rep rep;
	rep.m = m;
	rep.n = n;
	rep.dim = 1;
	rep.odd.push_back(false);
	rep.weights.push_back(Weight(m, n));
	for (int a = 1; a < m + n; ++a) {
		rep.raise_images.push_back(PolyMatrix(1, 1));
		rep.lower_images.push_back(PolyMatrix(1, 1));
	}
	for (int b = 1; b <= m + n; ++b) {
		rep.k_images.push_back(PolyMatrix::identity(1));
		rep.kinv_images.push_back(PolyMatrix::identity(1));
	}
	return rep;
}

namespace {

// Matrix of x (x) y on the tensor basis (i,j) -> i*dim_b + j, with the super
// interchange sign keyed by [y] and the parity of the source A-vector.
PolyMatrix superkron(const PolyMatrix &x, const PolyMatrix &y, bool y_odd, const std::vector<bool> &a_odd) {
	const int da = x.rows(), db = y.rows();
	PolyMatrix r(da * db, da * db);
	for (int ip = 0; ip < da; ++ip)
		for (int i = 0; i < da; ++i) {
			const LaurentPoly &xe = x.at(ip, i);
			if (xe.is_zero())
				continue;
			const bool flip = y_odd && a_odd[i];
			for (int jp = 0; jp < db; ++jp)
				for (int j = 0; j < db; ++j) {
					const LaurentPoly &ye = y.at(jp, j);
					if (ye.is_zero())
						continue;
					LaurentPoly prod = xe * ye;
					r.at(ip * db + jp, i * db + j) = flip ? -prod : prod;
				}
		}
	return r;
}

} // namespace

Rep tensor_rep(const Rep &a, const Rep &b) {
	if (a.m != b.m || a.n != b.n)
		throw std::invalid_argument("tensor factors from different gl(m|n) contexts");
	Rep rep;
	rep.m = a.m;
	rep.n = a.n;
	rep.dim = a.dim * b.dim;
	for (int i = 0; i < a.dim; ++i)
		for (int j = 0; j < b.dim; ++j) {
			rep.odd.push_back(a.odd[i] != b.odd[j]);
			rep.weights.push_back(a.weights[i] + b.weights[j]);
		}
	const PolyMatrix ida = PolyMatrix::identity(a.dim);
	const int N = a.m + a.n;
	for (int x = 1; x < N; ++x) {
		bool gen_odd = x == a.m;
		// Delta(E_{a,a+1}) = E (x) K_a Kinv_{a+1} + 1 (x) E
		PolyMatrix kk = b.k_images[x - 1] * b.kinv_images[x];
		rep.raise_images.push_back(superkron(a.raise_images[x - 1], kk, false, a.odd) +
		                           superkron(ida, b.raise_images[x - 1], gen_odd, a.odd));
		// Delta(E_{a+1,a}) = E (x) 1 + Kinv_a K_{a+1} (x) E
		PolyMatrix kinvk = a.kinv_images[x - 1] * a.k_images[x];
		rep.lower_images.push_back(superkron(a.lower_images[x - 1], PolyMatrix::identity(b.dim), false, a.odd) +
		                           superkron(kinvk, b.lower_images[x - 1], gen_odd, a.odd));
	}
	for (int x = 1; x <= N; ++x) {
		rep.k_images.push_back(superkron(a.k_images[x - 1], b.k_images[x - 1], false, a.odd));
		rep.kinv_images.push_back(superkron(a.kinv_images[x - 1], b.kinv_images[x - 1], false, a.odd));
	}
	return rep;
}

namespace {

// q_c = q for c <= m, q^{-1} for c > m
LaurentPoly q_sub(int c, int m, int power) { return LaurentPoly::q(c <= m ? power : -power); }

PolyMatrix root_vector_via(const Rep &rep, int a, int b, int c) {
	if (a < b) {
		PolyMatrix eac = root_vector(rep, a, c), ecb = root_vector(rep, c, b);
		return eac * ecb - q_sub(c, rep.m, -1) * (ecb * eac);
	}
	PolyMatrix eac = root_vector(rep, a, c), ecb = root_vector(rep, c, b);
	return eac * ecb - q_sub(c, rep.m, 1) * (ecb * eac);
}

} // namespace

PolyMatrix root_vector(const Rep &rep, int a, int b) {
	if (a == b || a < 1 || b < 1 || a > rep.m + rep.n || b > rep.m + rep.n)
		throw std::invalid_argument("root vector indices must be distinct and in range");
	if (a + 1 == b)
		return rep.raise_images[a - 1];
	if (a == b + 1)
		return rep.lower_images[b - 1];
	return root_vector_via(rep, a, b, a < b ? a + 1 : b + 1);
}

std::vector<PolyMatrix> root_vector_all_routes(const Rep &rep, int a, int b) {
	std::vector<PolyMatrix> out;
	int lo = std::min(a, b), hi = std::max(a, b);
	for (int c = lo + 1; c < hi; ++c)
		out.push_back(root_vector_via(rep, a, b, c));
	if (out.empty())
		out.push_back(root_vector(rep, a, b));
	return out;
}

std::string RelationCheck::line() const {
	std::ostringstream os;
	os << "REL " << name << " " << (pass ? "PASS" : "FAIL");
	if (!pass)
		os << " " << residual_degree;
	return os.str();
}

bool RelationReport::all_pass() const {
	for (const RelationCheck &c : checks)
		if (!c.pass)
			return false;
	return true;
}

std::string RelationReport::summary() const {
	std::ostringstream os;
	for (const RelationCheck &c : checks)
		os << c.line() << "\n";
	return os.str();
}

namespace {

void record(RelationReport &report, const std::string &name, const PolyMatrix &residual) {
	report.checks.push_back(RelationCheck{name, residual.is_zero(), residual.max_entry_exp()});
}

} // namespace

RelationReport verify_relations(const Rep &rep) {
	const int m = rep.m, n = rep.n, N = m + n;
	RootData rd(m, n);
	RelationReport report;
	const PolyMatrix id = PolyMatrix::identity(rep.dim);

	for (int b = 1; b <= N; ++b)
		record(report, "kkinv(" + std::to_string(b) + ")",
		       rep.k_images[b - 1] * rep.kinv_images[b - 1] - id);

	auto comm = [](const PolyMatrix &x, const PolyMatrix &y) { return x * y - y * x; };
	for (int a = 1; a <= N; ++a)
		for (int b = a + 1; b <= N; ++b) {
			std::string ab = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
			record(report, "kcomm" + ab, comm(rep.k_images[a - 1], rep.k_images[b - 1]));
			record(report, "kcomm_inv" + ab, comm(rep.k_images[a - 1], rep.kinv_images[b - 1]));
			record(report, "kinvcomm" + ab, comm(rep.kinv_images[a - 1], rep.kinv_images[b - 1]));
		}

	// K_a E K_a^{-1} = q^{(eps_a, wt(E))} E
	for (int a = 1; a <= N; ++a) {
		Weight ea = Weight::epsilon(m, n, a);
		for (int b = 1; b < N; ++b) {
			Weight alpha = Weight::epsilon(m, n, b) - Weight::epsilon(m, n, b + 1);
			int e = to_integer(rd.bilinear_form(ea, alpha)).convert_to<int>();
			std::string ab = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
			record(report, "weight_raise" + ab,
			       rep.k_images[a - 1] * rep.raise_images[b - 1] * rep.kinv_images[a - 1] -
			           LaurentPoly::q(e) * rep.raise_images[b - 1]);
			record(report, "weight_lower" + ab,
			       rep.k_images[a - 1] * rep.lower_images[b - 1] * rep.kinv_images[a - 1] -
			           LaurentPoly::q(-e) * rep.lower_images[b - 1]);
		}
	}

	// (q_a - q_a^{-1}) [E_{a,a+1}, E_{b+1,b}} = delta_ab (K_a Kinv_{a+1} - Kinv_a K_{a+1})
	for (int a = 1; a < N; ++a)
		for (int b = 1; b < N; ++b) {
			const PolyMatrix &x = rep.raise_images[a - 1];
			const PolyMatrix &y = rep.lower_images[b - 1];
			PolyMatrix bracket = a == m && b == m ? x * y + y * x : x * y - y * x;
			LaurentPoly qa = q_sub(a, m, 1) - q_sub(a, m, -1);
			PolyMatrix lhs = qa * bracket;
			if (a == b)
				lhs = lhs - (rep.k_images[a - 1] * rep.kinv_images[a] -
				             rep.kinv_images[a - 1] * rep.k_images[a]);
			record(report, "bracket(" + std::to_string(a) + "," + std::to_string(b) + ")", lhs);
		}

	record(report, "square_raise(m)", rep.raise_images[m - 1] * rep.raise_images[m - 1]);
	record(report, "square_lower(m)", rep.lower_images[m - 1] * rep.lower_images[m - 1]);

	for (int a = 1; a < N; ++a)
		for (int b = a + 2; b < N; ++b) {
			std::string ab = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
			record(report, "comm_raise" + ab, comm(rep.raise_images[a - 1], rep.raise_images[b - 1]));
			record(report, "comm_lower" + ab, comm(rep.lower_images[a - 1], rep.lower_images[b - 1]));
		}

	LaurentPoly qq = LaurentPoly::q(1) + LaurentPoly::q(-1);
	auto serre = [&](const PolyMatrix &x, const PolyMatrix &y) {
		return x * x * y - qq * (x * y * x) + y * x * x;
	};
	for (int a = 1; a < N; ++a) {
		if (a == m)
			continue;
		for (int delta : {+1, -1}) {
			int b = a + delta;
			if (b < 1 || b >= N)
				continue;
			std::string ab = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
			record(report, "serre_raise" + ab, serre(rep.raise_images[a - 1], rep.raise_images[b - 1]));
			record(report, "serre_lower" + ab, serre(rep.lower_images[a - 1], rep.lower_images[b - 1]));
		}
	}

	if (m >= 2 && n >= 2) {
		PolyMatrix up = root_vector(rep, m - 1, m + 2);
		PolyMatrix down = root_vector(rep, m + 2, m - 1);
		record(report, "quartic_raise", up * rep.raise_images[m - 1] + rep.raise_images[m - 1] * up);
		record(report, "quartic_lower", down * rep.lower_images[m - 1] + rep.lower_images[m - 1] * down);
	}
	return report;
}

namespace {

struct CoproductTerm {
	GeneratorWord left, right;
};

std::vector<CoproductTerm> coproduct_terms(Generator g) {
	const int a = g.index;
	switch (g.kind) {
	case Generator::Kind::raise:
		return {{{g}, {Generator::k(a), Generator::kinv(a + 1)}}, {{}, {g}}};
	case Generator::Kind::lower:
		return {{{g}, {}}, {{Generator::kinv(a), Generator::k(a + 1)}, {g}}};
	case Generator::Kind::k:
	case Generator::Kind::kinv:
		return {{{g}, {g}}};
	}
	throw std::logic_error("unreachable");
}

long long counit_scalar(Generator g) {
	return g.kind == Generator::Kind::k || g.kind == Generator::Kind::kinv ? 1 : 0;
}

void check_antipode_axiom(RelationReport &report, const Rep &rep, const std::string &tag) {
	const PolyMatrix id = PolyMatrix::identity(rep.dim);
	for (Generator g : all_generators(rep.m, rep.n)) {
		PolyMatrix left(rep.dim, rep.dim), right(rep.dim, rep.dim);
		for (const CoproductTerm &t : coproduct_terms(g)) {
			left = left + antipode_word_image(rep, t.left) * rep.word_image(t.right);
			right = right + rep.word_image(t.left) * antipode_word_image(rep, t.right);
		}
		PolyMatrix eps = LaurentPoly(counit_scalar(g)) * id;
		record(report, "antipode_left(" + g.name() + ")" + tag, left - eps);
		record(report, "antipode_right(" + g.name() + ")" + tag, right - eps);
	}
}

} // namespace

RelationReport verify_hopf(int m, int n, int depth) {
	if (depth < 1 || depth > 2)
		throw std::invalid_argument("depth must be 1 or 2");
	RelationReport report;
	Rep v = vector_rep(m, n);
	check_antipode_axiom(report, v, "@V");

	for (const RelationCheck &c : verify_relations(trivial_rep(m, n)).checks)
		report.checks.push_back(RelationCheck{"counit:" + c.name, c.pass, c.residual_degree});

	if (depth == 2) {
		Rep t = tensor_rep(v, v);
		check_antipode_axiom(report, t, "@VxV");
		for (const RelationCheck &c : verify_relations(t).checks)
			report.checks.push_back(RelationCheck{"coproduct:" + c.name, c.pass, c.residual_degree});
	}
	return report;
}

FunctionElement matrix_element(const Rep &rep, int i, int j) {
	if (i < 0 || j < 0 || i >= rep.dim || j >= rep.dim)
		throw std::invalid_argument("matrix element index out of range");
	PolyMatrix c(rep.dim, rep.dim);
	c.at(i, j) = LaurentPoly(1);
	return FunctionElement{std::move(c), rep.odd[i] != rep.odd[j]};
}

PolyMatrix antipode_image(const Rep &rep, Generator g) {
	const int a = g.index;
	switch (g.kind) {
	case Generator::Kind::raise:
		return -(rep.raise_images[a - 1] * rep.kinv_images[a - 1] * rep.k_images[a]);
	case Generator::Kind::lower:
		return -(rep.k_images[a - 1] * rep.kinv_images[a] * rep.lower_images[a - 1]);
	case Generator::Kind::k:
		return rep.kinv_images[a - 1];
	case Generator::Kind::kinv:
		return rep.k_images[a - 1];
	}
	throw std::logic_error("unreachable");
}

PolyMatrix antipode_word_image(const Rep &rep, std::span<const Generator> word) {
	// S is an anti-homomorphism with the super sign (-1)^{#odd pairs}
	int odd_count = 0;
	for (const Generator &g : word)
		if (g.is_odd(rep.m))
			++odd_count;
	bool flip = (odd_count * (odd_count - 1) / 2) % 2 == 1;
	PolyMatrix r = PolyMatrix::identity(rep.dim);
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		r = r * antipode_image(rep, *it);
	return flip ? -r : r;
}

FunctionElement dL(const Rep &rep, Generator x, const FunctionElement &f) {
	bool x_odd = x.is_odd(rep.m);
	PolyMatrix c = antipode_image(rep, x).transpose() * f.coeff;
	return FunctionElement{x_odd && f.odd ? -c : c, f.odd != x_odd};
}

FunctionElement dR(const Rep &rep, Generator x, const FunctionElement &f) {
	bool x_odd = x.is_odd(rep.m);
	PolyMatrix c = f.coeff * rep.image(x).transpose();
	return FunctionElement{x_odd ? -c : c, f.odd != x_odd};
}

FunctionElement dL_word(const Rep &rep, std::span<const Generator> word, const FunctionElement &f) {
	FunctionElement g = f;
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		g = dL(rep, *it, g);
	return g;
}

FunctionElement dR_word(const Rep &rep, std::span<const Generator> word, const FunctionElement &f) {
	FunctionElement g = f;
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		g = dR(rep, *it, g);
	return g;
}

FunctionElement dL_word_direct(const Rep &rep, std::span<const Generator> word, const FunctionElement &f) {
	bool w_odd = word_is_odd(word, rep.m);
	PolyMatrix c = antipode_word_image(rep, word).transpose() * f.coeff;
	return FunctionElement{w_odd && f.odd ? -c : c, f.odd != w_odd};
}

FunctionElement dR_word_direct(const Rep &rep, std::span<const Generator> word, const FunctionElement &f) {
	bool w_odd = word_is_odd(word, rep.m);
	PolyMatrix c = f.coeff * rep.word_image(word).transpose();
	return FunctionElement{w_odd ? -c : c, f.odd != w_odd};
}

std::pair<FunctionElement, FunctionElement> translation_actions(const Rep &rep,
                                                                std::span<const Generator> word,
                                                                const FunctionElement &f) {
	return {dL_word(rep, word, f), dR_word(rep, word, f)};
}

std::vector<Generator> all_generators(int m, int n) {
	std::vector<Generator> out;
	for (int a = 1; a < m + n; ++a) {
		out.push_back(Generator::raise(a));
		out.push_back(Generator::lower(a));
	}
	for (int b = 1; b <= m + n; ++b) {
		out.push_back(Generator::k(b));
		out.push_back(Generator::kinv(b));
	}
	return out;
}

} // namespace qbbw
