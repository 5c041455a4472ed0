#include <divides/error.hpp>
#include <divides/linalg.hpp>

#include <utility>

namespace divides {

RationalMatrix to_rational(const IntegerMatrix& m)
{
	RationalMatrix r(m.rows(), m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			r(i, j) = Rational(m(i, j));
	return r;
}

bool is_integral(const RationalMatrix& m)
{
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			if (m(i, j).get_den() != 1)
				return false;
	return true;
}

IntegerMatrix to_integer(const RationalMatrix& m)
{
	if (!is_integral(m))
		throw Error(ErrorKind::InvalidArgument, "matrix has non-integral entries");
	IntegerMatrix r(m.rows(), m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			r(i, j) = m(i, j).get_num();
	return r;
}

EchelonForm row_reduce(RationalMatrix m)
{
	EchelonForm out;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
		std::size_t p = row;
		while (p < m.rows() && sgn(m(p, col)) == 0)
			++p;
		if (p == m.rows())
			continue;
		if (p != row)
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m(p, j), m(row, j));
		Rational inv = 1 / m(row, col);
		for (std::size_t j = col; j < m.cols(); ++j)
			m(row, j) *= inv;
		for (std::size_t i = 0; i < m.rows(); ++i) {
			if (i == row || sgn(m(i, col)) == 0)
				continue;
			Rational f = m(i, col);
			for (std::size_t j = col; j < m.cols(); ++j)
				m(i, j) -= f * m(row, j);
		}
		out.pivots.push_back(col);
		++row;
	}
	out.reduced = std::move(m);
	return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m)
{
	auto ef = row_reduce(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : ef.pivots)
		is_pivot[p] = true;
	std::vector<std::vector<Rational>> basis;
	for (std::size_t free = 0; free < m.cols(); ++free) {
		if (is_pivot[free])
			continue;
		std::vector<Rational> v(m.cols(), Rational(0));
		v[free] = 1;
		for (std::size_t r = 0; r < ef.pivots.size(); ++r)
			v[ef.pivots[r]] = -ef.reduced(r, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::vector<Rational> solve_any(const RationalMatrix& m, const std::vector<Rational>& rhs)
{
	RationalMatrix aug(m.rows(), m.cols() + 1);
	aug.set_block(0, 0, m);
	for (std::size_t i = 0; i < m.rows(); ++i)
		aug(i, m.cols()) = rhs[i];
	auto ef = row_reduce(aug);
	std::vector<Rational> x(m.cols(), Rational(0));
	for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
		if (ef.pivots[r] == m.cols())
			throw Error(ErrorKind::Singular, "inconsistent linear system");
		x[ef.pivots[r]] = ef.reduced(r, m.cols());
	}
	return x;
}

Rational determinant(const RationalMatrix& m)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
	RationalMatrix a = m;
	Rational det = 1;
	const std::size_t n = a.rows();
	for (std::size_t c = 0; c < n; ++c) {
		std::size_t p = c;
		while (p < n && sgn(a(p, c)) == 0)
			++p;
		if (p == n)
			return 0;
		if (p != c) {
			for (std::size_t j = 0; j < n; ++j)
				std::swap(a(p, j), a(c, j));
			det = -det;
		}
		det *= a(c, c);
		for (std::size_t i = c + 1; i < n; ++i) {
			if (sgn(a(i, c)) == 0)
				continue;
			Rational f = a(i, c) / a(c, c);
			for (std::size_t j = c; j < n; ++j)
				a(i, j) -= f * a(c, j);
		}
	}
	return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
	const std::size_t n = m.rows();
	RationalMatrix aug(n, 2 * n);
	aug.set_block(0, 0, m);
	aug.set_block(0, n, RationalMatrix::identity(n));
	auto ef = row_reduce(aug);
	if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1))
		throw Error(ErrorKind::Singular, "matrix is not invertible");
	return ef.reduced.block(0, n, n, n);
}

Integer determinant(const IntegerMatrix& m)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
	const std::size_t n = m.rows();
	if (n == 0)
		return 1;
	IntegerMatrix a = m;
	Integer prev = 1;
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (sgn(a(k, k)) == 0) {
			std::size_t p = k + 1;
			while (p < n && sgn(a(p, k)) == 0)
				++p;
			if (p == n)
				return 0;
			for (std::size_t j = 0; j < n; ++j)
				std::swap(a(p, j), a(k, j));
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i) {
			for (std::size_t j = k + 1; j < n; ++j) {
				Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
				mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
				a(i, j) = v;
			}
		}
		prev = a(k, k);
	}
	return sign * a(n - 1, n - 1);
}

IntegerMatrix adjugate(const IntegerMatrix& m)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "adjugate of a non-square matrix");
	const std::size_t n = m.rows();
	IntegerMatrix adj(n, n);
	if (n == 1) {
		adj(0, 0) = 1;
		return adj;
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			IntegerMatrix minor(n - 1, n - 1);
			for (std::size_t r = 0, mr = 0; r < n; ++r) {
				if (r == i)
					continue;
				for (std::size_t c = 0, mc = 0; c < n; ++c) {
					if (c == j)
						continue;
					minor(mr, mc++) = m(r, c);
				}
				++mr;
			}
			Integer cof = determinant(minor);
			adj(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
		}
	return adj;
}

RationalMatrix restrict_to(const RationalMatrix& m, const RationalMatrix& basis)
{
	// Solve basis * L = m * basis column by column.
	RationalMatrix image = m * basis;
	const std::size_t k = basis.cols();
	RationalMatrix aug(basis.rows(), k + k);
	aug.set_block(0, 0, basis);
	aug.set_block(0, k, image);
	auto ef = row_reduce(aug);
	if (ef.pivots.size() != k || (k > 0 && ef.pivots[k - 1] != k - 1))
		throw Error(ErrorKind::Inconsistency, "subspace is not invariant or basis is dependent");
	return ef.reduced.block(0, k, k, k);
}

std::size_t krylov_dimension(const RationalMatrix& m, const std::vector<Rational>& v)
{
	const std::size_t n = m.rows();
	std::vector<std::vector<Rational>> cols;
	std::vector<Rational> x = v;
	std::size_t dim = 0;
	for (std::size_t k = 0; k < n; ++k) {
		cols.push_back(x);
		std::size_t r = rank(RationalMatrix::from_columns(cols, n));
		if (r == dim)
			break;
		dim = r;
		x = m * x;
	}
	return dim;
}

} // namespace divides
