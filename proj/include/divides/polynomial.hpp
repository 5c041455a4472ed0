#pragma once

#include <divides/matrix.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divides {

/// Univariate polynomial in t with exact rational coefficients, stored in
/// ascending order with no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
public:
	Polynomial() = default;
	explicit Polynomial(std::vector<Rational> ascending);
	Polynomial(std::initializer_list<long> ascending);

	static Polynomial constant(const Rational& c);
	static Polynomial monomial(int degree, const Rational& c = 1);

	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	bool is_zero() const { return coeffs_.empty(); }
	bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
	bool has_integer_coefficients() const;
	const std::vector<Rational>& coefficients() const { return coeffs_; }
	/// Coefficient of t^k, zero beyond the degree.
	Rational coeff(int k) const;
	const Rational& leading() const { return coeffs_.back(); }

	Rational operator()(const Rational& t) const;
	RationalMatrix operator()(const RationalMatrix& m) const;

	/// t^deg p(1/t).
	Polynomial reversed() const;

	Polynomial& operator+=(const Polynomial& o);
	Polynomial& operator-=(const Polynomial& o);
	friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
	friend Polynomial operator-(const Polynomial& a);
	friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
	friend Polynomial operator*(const Rational& s, const Polynomial& a);
	friend bool operator==(const Polynomial&, const Polynomial&) = default;

	/// Human-readable form, e.g. "t^2 - t + 1".
	std::string to_string() const;

private:
	void trim();
	std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws Error(InvalidArgument) on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned k);

/// Text form `poly <degree>: c0 c1 ... cd`.
std::string write_polynomial(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

/// Monic characteristic polynomial det(t Id - m), by exact Hessenberg
/// reduction. Throws Error(NonSquare).
Polynomial charpoly(const RationalMatrix& m);

long euler_phi(long n);

/// n-th cyclotomic polynomial, by exact division of t^n - 1 by every Phi_d
/// with d | n, d < n.
Polynomial cyclotomic(long n);

struct CyclotomicFactorization {
	std::vector<std::pair<long, int>> factors; // (n, multiplicity), ascending n
	Polynomial remainder;

	bool complete() const { return remainder == Polynomial{1}; }
	/// prod Phi_n^mult * remainder.
	Polynomial product() const;
};

/// Greedy trial division by Phi_n for every n with phi(n) <= deg p.
/// Non-cyclotomic content stays in the remainder.
CyclotomicFactorization factor_cyclotomic(const Polynomial& p);

} // namespace divides
