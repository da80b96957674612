#include "qbbw/rootdata.hpp"

#include <algorithm>
#include <sstream>

namespace qbbw {

Weight::Weight(int m, int n, std::vector<BigRational> coords)
    : m_(m), n_(n), coords_(std::move(coords)) {
	if (static_cast<int>(coords_.size()) != m_ + n_)
		throw std::invalid_argument("weight coordinate count does not match m+n");
}

Weight Weight::epsilon(int m, int n, int a) {
	if (a < 1 || a > m + n)
		throw std::invalid_argument("epsilon index out of range");
	Weight w(m, n);
	w.coords_[a - 1] = 1;
	return w;
}

bool Weight::is_integral() const {
	return std::all_of(coords_.begin(), coords_.end(), [](const BigRational &c) { return is_integer(c); });
}

std::vector<long long> Weight::integer_coords() const {
	std::vector<long long> v;
	v.reserve(coords_.size());
	for (const auto &c : coords_)
		v.push_back(to_integer(c).convert_to<long long>());
	return v;
}

void Weight::check_context(const Weight &rhs) const {
	if (m_ != rhs.m_ || n_ != rhs.n_)
		throw std::invalid_argument("weights from different gl(m|n) contexts");
}

Weight Weight::operator+(const Weight &rhs) const {
	check_context(rhs);
	Weight w = *this;
	for (size_t i = 0; i < coords_.size(); ++i)
		w.coords_[i] += rhs.coords_[i];
	return w;
}

Weight Weight::operator-(const Weight &rhs) const {
	check_context(rhs);
	Weight w = *this;
	for (size_t i = 0; i < coords_.size(); ++i)
		w.coords_[i] -= rhs.coords_[i];
	return w;
}

std::string Weight::to_string() const {
	std::ostringstream os;
	os << "(";
	for (int i = 0; i < dim(); ++i) {
		if (i == m_)
			os << "|";
		else if (i > 0)
			os << ",";
		os << coords_[i].str();
	}
	os << ")";
	return os.str();
}

namespace {

// rho = rho0 - rho1. The odd-part sign is the one supersymmetric convention
// that makes the purely even case reduce to the classical statement; it is
// isolated here so it can be flipped in one place.
constexpr int kOddRhoSign = -1;

} // namespace

RootData::RootData(int m, int n) : m_(m), n_(n), rho_(m > 0 && n > 0 ? m : 1, m > 0 && n > 0 ? n : 1) {
	if (m < 1 || n < 1)
		throw std::invalid_argument("super setting requires m,n >= 1");
	const int N = m_ + n_;
	for (int a = 1; a <= N; ++a)
		for (int b = 1; b <= N; ++b) {
			if (a == b)
				continue;
			Root r{a, b, (a <= m_) != (b <= m_)};
			all_roots_.push_back(r);
			if (a < b) {
				positive_roots_.push_back(r);
				if (b == a + 1)
					simple_roots_.push_back(r);
			}
		}

	// 2*rho0 = sum of even positive roots, 2*rho1 = sum of odd positive roots
	std::vector<BigRational> acc(N, BigRational(0));
	const BigRational half(1, 2);
	for (const Root &r : positive_roots_) {
		BigRational s = r.odd ? BigRational(kOddRhoSign) * half : half;
		acc[r.from - 1] += s;
		acc[r.to - 1] -= s;
	}
	rho_ = Weight(m_, n_, std::move(acc));
}

std::vector<Root> RootData::even_positive_roots() const {
	std::vector<Root> v;
	for (const Root &r : positive_roots_)
		if (!r.odd)
			v.push_back(r);
	return v;
}

std::vector<Root> RootData::odd_positive_roots() const {
	std::vector<Root> v;
	for (const Root &r : positive_roots_)
		if (r.odd)
			v.push_back(r);
	return v;
}

Weight RootData::root_weight(const Root &r) const {
	return Weight::epsilon(m_, n_, r.from) - Weight::epsilon(m_, n_, r.to);
}

BigRational RootData::bilinear_form(const Weight &mu, const Weight &nu) const {
	if (mu.m() != m_ || mu.n() != n_ || nu.m() != m_ || nu.n() != n_)
		throw std::invalid_argument("bilinear form: weight context mismatch");
	BigRational s(0);
	for (int a = 1; a <= m_ + n_; ++a) {
		BigRational t = mu[a - 1] * nu[a - 1];
		s += a <= m_ ? t : -t;
	}
	return s;
}

SubalgebraSpec full_spec(const RootData &rd) {
	SubalgebraSpec s;
	for (int a = 1; a <= rd.dim(); ++a)
		s.theta0.insert(a);
	for (int a = 1; a < rd.dim(); ++a) {
		s.theta_plus.insert(a);
		s.theta_minus.insert(a);
	}
	return s;
}

SubalgebraSpec cartan_spec(const RootData &rd) {
	SubalgebraSpec s;
	for (int a = 1; a <= rd.dim(); ++a)
		s.theta0.insert(a);
	return s;
}

SubalgebraSpec lower_borel_spec(const RootData &rd) {
	SubalgebraSpec s = cartan_spec(rd);
	for (int a = 1; a < rd.dim(); ++a)
		s.theta_minus.insert(a);
	return s;
}

namespace {

void check_ranges(const RootData &rd, const SubalgebraSpec &spec) {
	for (int a : spec.theta0)
		if (a < 1 || a > rd.dim())
			throw std::invalid_argument("theta0 index out of range");
	for (int a : spec.theta_plus)
		if (a < 1 || a >= rd.dim())
			throw std::invalid_argument("theta+ index out of range");
	for (int a : spec.theta_minus)
		if (a < 1 || a >= rd.dim())
			throw std::invalid_argument("theta- index out of range");
}

} // namespace

SubalgebraClass classify_subalgebra(const RootData &rd, const SubalgebraSpec &spec) {
	check_ranges(rd, spec);
	const bool full_cartan = static_cast<int>(spec.theta0.size()) == rd.dim();
	const bool plus_full = static_cast<int>(spec.theta_plus.size()) == rd.dim() - 1;
	const bool minus_full = static_cast<int>(spec.theta_minus.size()) == rd.dim() - 1;
	SubalgebraClass c;
	c.reductive = full_cartan && spec.theta_plus == spec.theta_minus;
	c.parabolic_lower = full_cartan && minus_full;
	c.parabolic_upper = full_cartan && plus_full;
	return c;
}

std::vector<std::pair<int, int>> LeviBlocks::even_intervals(int m) const {
	std::vector<std::pair<int, int>> v;
	for (const LeviBlock &b : blocks) {
		if (b.is_super) {
			v.emplace_back(b.lo, m);
			v.emplace_back(m + 1, b.hi);
		} else {
			v.emplace_back(b.lo, b.hi);
		}
	}
	return v;
}

namespace {

LeviBlocks blocks_from_edges(const RootData &rd, const std::set<int> &edges) {
	LeviBlocks out;
	int lo = 1;
	for (int a = 1; a <= rd.dim(); ++a) {
		bool connects = a < rd.dim() && edges.count(a) > 0;
		if (!connects) {
			LeviBlock b{lo, a, lo <= rd.m() && a > rd.m()};
			out.blocks.push_back(b);
			lo = a + 1;
		}
	}
	return out;
}

} // namespace

std::pair<SubalgebraSpec, LeviBlocks> levi_factor(const RootData &rd, const SubalgebraSpec &parabolic) {
	SubalgebraClass c = classify_subalgebra(rd, parabolic);
	if (!c.parabolic_lower)
		throw std::invalid_argument("levi_factor requires a lower parabolic (theta- = all)");
	std::set<int> edges;
	std::set_intersection(parabolic.theta_plus.begin(), parabolic.theta_plus.end(),
	                      parabolic.theta_minus.begin(), parabolic.theta_minus.end(),
	                      std::inserter(edges, edges.begin()));
	SubalgebraSpec levi = cartan_spec(rd);
	levi.theta_plus = edges;
	levi.theta_minus = edges;
	return {levi, blocks_from_edges(rd, edges)};
}

LeviBlocks levi_blocks_of(const RootData &rd, const SubalgebraSpec &levi) {
	if (!classify_subalgebra(rd, levi).reductive)
		throw std::invalid_argument("block decomposition requires a reductive spec");
	return blocks_from_edges(rd, levi.theta_plus);
}

namespace {

std::vector<Root> positive_roots_in_blocks(const RootData &rd, const SubalgebraSpec &levi, bool odd) {
	LeviBlocks blocks = levi_blocks_of(rd, levi);
	std::vector<Root> out;
	for (const Root &r : rd.positive_roots()) {
		if (r.odd != odd)
			continue;
		for (const LeviBlock &b : blocks.blocks)
			if (b.lo <= r.from && r.to <= b.hi) {
				out.push_back(r);
				break;
			}
	}
	return out;
}

} // namespace

std::vector<Root> odd_positive_roots_of(const RootData &rd, const SubalgebraSpec &levi) {
	return positive_roots_in_blocks(rd, levi, true);
}

std::vector<Root> even_positive_roots_of(const RootData &rd, const SubalgebraSpec &levi) {
	return positive_roots_in_blocks(rd, levi, false);
}

} // namespace qbbw
