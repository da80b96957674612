#include "qbbw/character.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qbbw {

Character Character::one(int m, int n) {
	Character c(m, n);
	c.add_term(std::vector<long long>(m + n, 0), 1);
	return c;
}

Character Character::of_weight(const Weight &w, long long mult) {
	Character c(w.m(), w.n());
	c.add_term(w.integer_coords(), mult);
	return c;
}

void Character::add_term(const std::vector<long long> &weight, long long mult) {
	if (static_cast<int>(weight.size()) != m_ + n_)
		throw std::invalid_argument("character term of wrong dimension");
	if (mult == 0)
		return;
	auto it = terms_.find(weight);
	if (it == terms_.end()) {
		terms_[weight] = mult;
	} else {
		it->second += mult;
		if (it->second == 0)
			terms_.erase(it);
	}
}

long long Character::mult_of(const Weight &w) const {
	auto it = terms_.find(w.integer_coords());
	return it == terms_.end() ? 0 : it->second;
}

void Character::check_context(const Character &rhs) const {
	if (m_ != rhs.m_ || n_ != rhs.n_)
		throw std::invalid_argument("characters from different gl(m|n) contexts");
}

Character Character::operator+(const Character &rhs) const {
	check_context(rhs);
	Character r = *this;
	for (const auto &[w, k] : rhs.terms_)
		r.add_term(w, k);
	return r;
}

Character Character::operator*(const Character &rhs) const {
	check_context(rhs);
	Character r(m_, n_);
	std::vector<long long> sum(m_ + n_);
	for (const auto &[wa, ka] : terms_)
		for (const auto &[wb, kb] : rhs.terms_) {
			for (int i = 0; i < m_ + n_; ++i)
				sum[i] = wa[i] + wb[i];
			r.add_term(sum, ka * kb);
		}
	return r;
}

BigInt Character::dim() const {
	BigInt d = 0;
	for (const auto &[w, k] : terms_)
		d += k;
	return d;
}

std::optional<std::pair<Weight, long long>> Character::highest_term() const {
	auto dominates = [&](const std::vector<long long> &a, const std::vector<long long> &b) {
		long long prefix = 0, total = 0;
		for (int i = 0; i < m_ + n_; ++i)
			total += a[i] - b[i];
		if (total != 0)
			return false;
		for (int i = 0; i < m_ + n_; ++i) {
			prefix += a[i] - b[i];
			if (prefix < 0)
				return false;
		}
		return true;
	};
	for (const auto &[w, k] : terms_) {
		bool top = true;
		for (const auto &[v, k2] : terms_)
			if (v != w && !dominates(w, v)) {
				top = false;
				break;
			}
		if (top) {
			std::vector<BigRational> c(w.begin(), w.end());
			return std::pair(Weight(m_, n_, std::move(c)), k);
		}
	}
	return std::nullopt;
}

std::string Character::to_string() const {
	std::ostringstream os;
	bool first = true;
	for (const auto &[w, k] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		if (k != 1)
			os << k << "*";
		os << "e(";
		for (int i = 0; i < m_ + n_; ++i) {
			if (i == m_)
				os << "|";
			else if (i > 0)
				os << ",";
			os << w[i];
		}
		os << ")";
	}
	return first ? "0" : os.str();
}

namespace {

// Enumerate Gelfand-Tsetlin patterns with the given non-negative top row and
// feed each pattern's weight (row-sum differences) to sink.
void gt_enumerate(const std::vector<long long> &top,
                  const std::function<void(const std::vector<long long> &)> &sink) {
	const int k = static_cast<int>(top.size());
	std::vector<std::vector<long long>> rows(k);
	rows[k - 1] = top;
	std::vector<long long> weight(k);

	std::function<void(int)> descend = [&](int r) {
		// rows[r] (length r+1) is set; build rows[r-1] or emit.
		if (r == 0) {
			long long prev = 0;
			for (int i = 0; i < k; ++i) {
				long long s = std::accumulate(rows[i].begin(), rows[i].end(), 0LL);
				weight[i] = s - prev;
				prev = s;
			}
			sink(weight);
			return;
		}
		std::vector<long long> &row = rows[r - 1];
		row.assign(r, 0);
		std::function<void(int)> fill = [&](int i) {
			if (i == r) {
				descend(r - 1);
				return;
			}
			for (long long v = rows[r][i + 1]; v <= rows[r][i]; ++v) {
				row[i] = v;
				fill(i + 1);
			}
		};
		fill(0);
	};
	descend(k - 1);
}

} // namespace

Character char_irreducible_block(const RootData &rd, int lo, std::span<const long long> mu_block) {
	const int k = static_cast<int>(mu_block.size());
	if (k < 1 || lo < 1 || lo + k - 1 > rd.dim())
		throw std::invalid_argument("block interval out of range");
	for (int i = 0; i + 1 < k; ++i)
		if (mu_block[i] < mu_block[i + 1])
			throw std::invalid_argument("block highest weight is not non-increasing");

	// determinant shift to a partition, undone on the emitted weights
	long long shift = mu_block[k - 1] < 0 ? -mu_block[k - 1] : 0;
	std::vector<long long> top(mu_block.begin(), mu_block.end());
	for (auto &v : top)
		v += shift;

	Character out(rd.m(), rd.n());
	std::vector<long long> ambient(rd.dim(), 0);
	gt_enumerate(top, [&](const std::vector<long long> &w) {
		for (int i = 0; i < k; ++i)
			ambient[lo - 1 + i] = w[i] - shift;
		out.add_term(ambient, 1);
	});
	return out;
}

BigInt dim_weyl_block(std::span<const long long> mu_block) {
	const int k = static_cast<int>(mu_block.size());
	for (int i = 0; i + 1 < k; ++i)
		if (mu_block[i] < mu_block[i + 1])
			throw std::invalid_argument("block highest weight is not non-increasing");
	BigInt num = 1, den = 1;
	for (int i = 0; i < k; ++i)
		for (int j = i + 1; j < k; ++j) {
			num *= mu_block[i] - mu_block[j] + j - i;
			den *= j - i;
		}
	return num / den;
}

bool is_levi_dominant(const RootData &rd, const LeviBlocks &blocks, const Weight &mu) {
	for (auto [lo, hi] : blocks.even_intervals(rd.m()))
		for (int a = lo; a < hi; ++a)
			if (mu[a - 1] < mu[a])
				return false;
	return true;
}

Character char_levi_irreducible(const RootData &rd, const LeviBlocks &blocks, const Weight &mu) {
	if (!mu.is_integral())
		throw std::invalid_argument("character weights must be integral");
	if (!is_levi_dominant(rd, blocks, mu))
		throw std::invalid_argument("weight is not dominant for the Levi's even blocks");
	std::vector<long long> c = mu.integer_coords();
	Character out = Character::one(rd.m(), rd.n());
	for (auto [lo, hi] : blocks.even_intervals(rd.m())) {
		std::span<const long long> piece(c.data() + lo - 1, static_cast<size_t>(hi - lo + 1));
		out = out * char_irreducible_block(rd, lo, piece);
	}
	return out;
}

Character char_lambda_factor(const RootData &rd, std::span<const Root> odd_roots) {
	Character out = Character::one(rd.m(), rd.n());
	for (const Root &r : odd_roots) {
		Character factor = Character::one(rd.m(), rd.n());
		std::vector<long long> neg(rd.dim(), 0);
		neg[r.from - 1] = -1;
		neg[r.to - 1] = 1;
		factor.add_term(neg, 1);
		out = out * factor;
	}
	return out;
}

Character char_dual_kac(const RootData &rd, const SubalgebraSpec &levi, const Weight &mu) {
	LeviBlocks blocks = levi_blocks_of(rd, levi);
	auto odd = odd_positive_roots_of(rd, levi);
	return char_lambda_factor(rd, odd) * char_levi_irreducible(rd, blocks, mu);
}

} // namespace qbbw
