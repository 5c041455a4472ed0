#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace divides {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), data_(rows * cols, T(0))
	{
	}
	Matrix(std::initializer_list<std::initializer_list<T>> init)
	    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0)
	{
		data_.reserve(rows_ * cols_);
		for (const auto& row : init) {
			assert(row.size() == cols_);
			data_.insert(data_.end(), row.begin(), row.end());
		}
	}

	static Matrix identity(std::size_t n)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}

	/// Columns given as vectors of length `rows`.
	static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows)
	{
		Matrix m(rows, columns.size());
		for (std::size_t j = 0; j < columns.size(); ++j) {
			assert(columns[j].size() == rows);
			for (std::size_t i = 0; i < rows; ++i)
				m(i, j) = columns[j][i];
		}
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }
	bool empty() const { return rows_ == 0 || cols_ == 0; }

	T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	std::vector<T> column(std::size_t j) const
	{
		std::vector<T> c(rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			c[i] = (*this)(i, j);
		return c;
	}

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j)
				t(j, i) = (*this)(i, j);
		return t;
	}

	/// Copies `block` with its top-left corner at (row, col).
	void set_block(std::size_t row, std::size_t col, const Matrix& block)
	{
		assert(row + block.rows() <= rows_ && col + block.cols() <= cols_);
		for (std::size_t i = 0; i < block.rows(); ++i)
			for (std::size_t j = 0; j < block.cols(); ++j)
				(*this)(row + i, col + j) = block(i, j);
	}

	Matrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const
	{
		assert(row + rows <= rows_ && col + cols <= cols_);
		Matrix b(rows, cols);
		for (std::size_t i = 0; i < rows; ++i)
			for (std::size_t j = 0; j < cols; ++j)
				b(i, j) = (*this)(row + i, col + j);
		return b;
	}

	T trace() const
	{
		T t = 0;
		for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
			t += (*this)(i, i);
		return t;
	}

	bool is_identity() const { return is_square() && *this == identity(rows_); }

	Matrix& operator+=(const Matrix& o)
	{
		assert(rows_ == o.rows_ && cols_ == o.cols_);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] += o.data_[k];
		return *this;
	}
	Matrix& operator-=(const Matrix& o)
	{
		assert(rows_ == o.rows_ && cols_ == o.cols_);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] -= o.data_[k];
		return *this;
	}
	Matrix& operator*=(const T& s)
	{
		for (auto& x : data_)
			x *= s;
		return *this;
	}

	friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
	friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
	friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
	friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
	friend Matrix operator-(Matrix a)
	{
		for (auto& x : a.data_)
			x = -x;
		return a;
	}

	friend Matrix operator*(const Matrix& a, const Matrix& b)
	{
		assert(a.cols_ == b.rows_);
		Matrix c(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k) {
				const T& aik = a(i, k);
				if (sgn(aik) == 0)
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					c(i, j) += aik * b(k, j);
			}
		return c;
	}

	friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
	{
		assert(a.cols_ == v.size());
		std::vector<T> out(a.rows_, T(0));
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k)
				out[i] += a(i, k) * v[k];
		return out;
	}

	friend bool operator==(const Matrix& a, const Matrix& b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);
/// True when every entry has denominator 1.
bool is_integral(const RationalMatrix& m);
IntegerMatrix to_integer(const RationalMatrix& m);

/// Block-diagonal assembly.
template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks)
{
	std::size_t n = 0;
	for (const auto& b : blocks)
		n += b.rows();
	Matrix<T> m(n, n);
	std::size_t at = 0;
	for (const auto& b : blocks) {
		m.set_block(at, at, b);
		at += b.rows();
	}
	return m;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned k)
{
	Matrix<T> result = Matrix<T>::identity(m.rows());
	Matrix<T> base = m;
	while (k) {
		if (k & 1u)
			result = result * base;
		k >>= 1u;
		if (k)
			base = base * base;
	}
	return result;
}

} // namespace divides
