#pragma once

#include "qbbw/laurent.hpp"

#include <vector>

namespace qbbw {

// Dense matrix over the Laurent polynomial ring; all arithmetic is exact.
class PolyMatrix {
 public:
	PolyMatrix() = default;
	PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

	static PolyMatrix identity(int n);

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	LaurentPoly &at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
	const LaurentPoly &at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

	bool is_zero() const;
	PolyMatrix transpose() const;

	PolyMatrix operator-() const;
	friend PolyMatrix operator+(const PolyMatrix &a, const PolyMatrix &b);
	friend PolyMatrix operator-(const PolyMatrix &a, const PolyMatrix &b);
	friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b);
	friend PolyMatrix operator*(const LaurentPoly &s, const PolyMatrix &a);

	bool operator==(const PolyMatrix &rhs) const = default;

	// Largest exponent appearing in any nonzero entry; 0 for the zero matrix.
	int max_entry_exp() const;

 private:
	int rows_ = 0, cols_ = 0;
	std::vector<LaurentPoly> data_;
};

} // namespace qbbw
