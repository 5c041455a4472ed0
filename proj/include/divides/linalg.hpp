#pragma once

#include <divides/matrix.hpp>

#include <vector>

namespace divides {

struct EchelonForm {
	RationalMatrix reduced;         // reduced row echelon form
	std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

EchelonForm row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Some x with m x = rhs; free variables set to zero. Throws Singular when
/// the system is inconsistent.
std::vector<Rational> solve_any(const RationalMatrix& m, const std::vector<Rational>& rhs);

Rational determinant(const RationalMatrix& m);

/// Throws Error(Singular) for a singular matrix, Error(NonSquare) otherwise
/// when not square.
RationalMatrix inverse(const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntegerMatrix& m);

/// Classical adjugate from cofactors; adj(m) m = det(m) Id.
IntegerMatrix adjugate(const IntegerMatrix& m);

/// Coordinates of M restricted to the invariant subspace spanned by the
/// columns of `basis` (full column rank): the matrix L with M basis = basis L.
RationalMatrix restrict_to(const RationalMatrix& m, const RationalMatrix& basis);

/// Dimension of span{v, m v, m^2 v, ...}.
std::size_t krylov_dimension(const RationalMatrix& m, const std::vector<Rational>& v);

} // namespace divides
