#include "qbbw/polymatrix.hpp"

#include <algorithm>

namespace qbbw {

PolyMatrix PolyMatrix::identity(int n) {
	PolyMatrix m(n, n);
	for (int i = 0; i < n; ++i)
		m.at(i, i) = LaurentPoly(1);
	return m;
}

bool PolyMatrix::is_zero() const {
	return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly &p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
	PolyMatrix t(cols_, rows_);
	for (int i = 0; i < rows_; ++i)
		for (int j = 0; j < cols_; ++j)
			t.at(j, i) = at(i, j);
	return t;
}

PolyMatrix PolyMatrix::operator-() const {
	PolyMatrix r = *this;
	for (auto &p : r.data_)
		p = -p;
	return r;
}

namespace {

void check_same_shape(const PolyMatrix &a, const PolyMatrix &b) {
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("matrix shape mismatch");
}

} // namespace

PolyMatrix operator+(const PolyMatrix &a, const PolyMatrix &b) {
	check_same_shape(a, b);
	PolyMatrix r = a;
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < a.cols(); ++j)
			r.at(i, j) += b.at(i, j);
	return r;
}

PolyMatrix operator-(const PolyMatrix &a, const PolyMatrix &b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
	if (a.cols() != b.rows())
		throw std::invalid_argument("matrix product shape mismatch");
	PolyMatrix r(a.rows(), b.cols());
	for (int i = 0; i < a.rows(); ++i)
		for (int k = 0; k < a.cols(); ++k) {
			const LaurentPoly &aik = a.at(i, k);
			if (aik.is_zero())
				continue;
			for (int j = 0; j < b.cols(); ++j) {
				const LaurentPoly &bkj = b.at(k, j);
				if (!bkj.is_zero())
					r.at(i, j) += aik * bkj;
			}
		}
	return r;
}

PolyMatrix operator*(const LaurentPoly &s, const PolyMatrix &a) {
	PolyMatrix r(a.rows(), a.cols());
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < a.cols(); ++j)
			if (!a.at(i, j).is_zero())
				r.at(i, j) = s * a.at(i, j);
	return r;
}

int PolyMatrix::max_entry_exp() const {
	int e = 0;
	bool any = false;
	for (const auto &p : data_)
		if (!p.is_zero()) {
			e = any ? std::max(e, p.max_exp()) : p.max_exp();
			any = true;
		}
	return any ? e : 0;
}

} // namespace qbbw
