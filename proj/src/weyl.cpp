#include "qbbw/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qbbw {

namespace {

bool is_permutation_table(const std::vector<int> &p) {
	std::vector<bool> seen(p.size(), false);
	for (int v : p) {
		if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
			return false;
		seen[v] = true;
	}
	return true;
}

int inversions(const std::vector<int> &p) {
	int c = 0;
	for (size_t i = 0; i < p.size(); ++i)
		for (size_t j = i + 1; j < p.size(); ++j)
			if (p[i] > p[j])
				++c;
	return c;
}

std::vector<int> compose_tables(const std::vector<int> &a, const std::vector<int> &b) {
	std::vector<int> r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[b[i]];
	return r;
}

std::vector<int> invert_table(const std::vector<int> &p) {
	std::vector<int> r(p.size());
	for (size_t i = 0; i < p.size(); ++i)
		r[p[i]] = static_cast<int>(i);
	return r;
}

} // namespace

WeylElement::WeylElement(std::vector<int> perm_m, std::vector<int> perm_n)
    : perm_m_(std::move(perm_m)), perm_n_(std::move(perm_n)) {
	if (!is_permutation_table(perm_m_) || !is_permutation_table(perm_n_))
		throw std::invalid_argument("not a permutation table");
}

WeylElement WeylElement::identity(int m, int n) {
	std::vector<int> pm(m), pn(n);
	std::iota(pm.begin(), pm.end(), 0);
	std::iota(pn.begin(), pn.end(), 0);
	return WeylElement(std::move(pm), std::move(pn));
}

WeylElement WeylElement::compose(const WeylElement &rhs) const {
	if (m() != rhs.m() || n() != rhs.n())
		throw std::invalid_argument("composing Weyl elements of different contexts");
	return WeylElement(compose_tables(perm_m_, rhs.perm_m_), compose_tables(perm_n_, rhs.perm_n_));
}

WeylElement WeylElement::inverse() const {
	return WeylElement(invert_table(perm_m_), invert_table(perm_n_));
}

Weight WeylElement::act(const Weight &w) const {
	if (w.m() != m() || w.n() != n())
		throw std::invalid_argument("Weyl element and weight contexts differ");
	std::vector<BigRational> c(w.dim());
	std::vector<int> im = invert_table(perm_m_), in = invert_table(perm_n_);
	for (int i = 0; i < m(); ++i)
		c[i] = w[im[i]];
	for (int i = 0; i < n(); ++i)
		c[m() + i] = w[m() + in[i]];
	return Weight(w.m(), w.n(), std::move(c));
}

int WeylElement::length() const { return inversions(perm_m_) + inversions(perm_n_); }

bool WeylElement::operator<(const WeylElement &rhs) const {
	return std::pair(perm_m_, perm_n_) < std::pair(rhs.perm_m_, rhs.perm_n_);
}

std::string WeylElement::to_string() const {
	std::ostringstream os;
	os << "[";
	for (int i = 0; i < m(); ++i)
		os << (i ? "," : "") << perm_m_[i] + 1;
	os << "|";
	for (int i = 0; i < n(); ++i)
		os << (i ? "," : "") << perm_n_[i] + 1;
	os << "]";
	return os.str();
}

std::vector<WeylElement> all_weyl_elements(int m, int n) {
	std::vector<int> pm(m), pn(n);
	std::iota(pm.begin(), pm.end(), 0);
	std::vector<WeylElement> out;
	do {
		std::iota(pn.begin(), pn.end(), 0);
		do {
			out.emplace_back(pm, pn);
		} while (std::next_permutation(pn.begin(), pn.end()));
	} while (std::next_permutation(pm.begin(), pm.end()));
	return out;
}

Weight dot(const WeylElement &w, const Weight &lambda, const RootData &rd) {
	return w.act(lambda + rd.rho()) - rd.rho();
}

bool is_dominant(const Weight &lambda, const RootData &rd, std::span<const Root> even_positive_subset) {
	for (const Root &r : even_positive_subset) {
		if (r.odd)
			throw std::invalid_argument("dominance subset must consist of even roots");
		Weight alpha = rd.root_weight(r);
		BigRational t = 2 * rd.bilinear_form(lambda, alpha) / rd.bilinear_form(alpha, alpha);
		if (t < 0)
			return false;
	}
	return true;
}

bool is_g_dominant(const Weight &lambda, const RootData &rd) {
	auto even = rd.even_positive_roots();
	return is_dominant(lambda, rd, even);
}

bool is_regular(const Weight &lambda, const RootData &rd) {
	Weight s = lambda + rd.rho();
	auto distinct = [&](int lo, int hi) {
		for (int a = lo; a <= hi; ++a)
			for (int b = a + 1; b <= hi; ++b)
				if (s[a - 1] == s[b - 1])
					return false;
		return true;
	};
	return distinct(1, rd.m()) && distinct(rd.m() + 1, rd.m() + rd.n());
}

namespace {

// Permutation table sorting coords strictly decreasing: the i-th largest
// value moves to position i. Precondition: values pairwise distinct.
std::vector<int> sorting_table(std::span<const BigRational> coords) {
	std::vector<int> order(coords.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](int a, int b) { return coords[a] > coords[b]; });
	// order[i] = index of i-th largest = w^{-1}(i)
	return invert_table(order);
}

} // namespace

std::optional<std::pair<WeylElement, Weight>> dominant_representative(const Weight &lambda, const RootData &rd) {
	if (!is_regular(lambda, rd))
		return std::nullopt;
	Weight s = lambda + rd.rho();
	std::span<const BigRational> c(s.coords());
	WeylElement w(sorting_table(c.subspan(0, rd.m())), sorting_table(c.subspan(rd.m(), rd.n())));
	return std::pair(w, dot(w, lambda, rd));
}

} // namespace qbbw
