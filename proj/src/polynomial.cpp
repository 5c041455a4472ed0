#include <divides/error.hpp>
#include <divides/polynomial.hpp>

#include <map>
#include <sstream>

namespace divides {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
	for (auto& c : coeffs_)
		c.canonicalize();
	trim();
}

Polynomial::Polynomial(std::initializer_list<long> ascending)
{
	for (long c : ascending)
		coeffs_.emplace_back(c);
	trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c)
{
	std::vector<Rational> v(degree + 1, Rational(0));
	v[degree] = c;
	return Polynomial(std::move(v));
}

void Polynomial::trim()
{
	while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
		coeffs_.pop_back();
}

bool Polynomial::has_integer_coefficients() const
{
	for (const auto& c : coeffs_)
		if (c.get_den() != 1)
			return false;
	return true;
}

Rational Polynomial::coeff(int k) const
{
	if (k < 0 || k > degree())
		return 0;
	return coeffs_[k];
}

Rational Polynomial::operator()(const Rational& t) const
{
	Rational acc = 0;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		acc = acc * t + *it;
	return acc;
}

RationalMatrix Polynomial::operator()(const RationalMatrix& m) const
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "polynomial evaluated at a non-square matrix");
	const std::size_t n = m.rows();
	RationalMatrix acc(n, n);
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
		acc = acc * m;
		for (std::size_t i = 0; i < n; ++i)
			acc(i, i) += *it;
	}
	return acc;
}

Polynomial Polynomial::reversed() const
{
	return Polynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
	if (o.coeffs_.size() > coeffs_.size())
		coeffs_.resize(o.coeffs_.size(), Rational(0));
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] += o.coeffs_[i];
	trim();
	return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
	if (o.coeffs_.size() > coeffs_.size())
		coeffs_.resize(o.coeffs_.size(), Rational(0));
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] -= o.coeffs_[i];
	trim();
	return *this;
}

Polynomial operator-(const Polynomial& a)
{
	Polynomial r = a;
	for (auto& c : r.coeffs_)
		c = -c;
	return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
			c[i + j] += a.coeffs_[i] * b.coeffs_[j];
	return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a)
{
	std::vector<Rational> c = a.coeffs_;
	for (auto& x : c)
		x *= s;
	return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const
{
	if (is_zero())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (int k = degree(); k >= 0; --k) {
		const Rational& c = coeffs_[k];
		if (sgn(c) == 0)
			continue;
		Rational mag = abs(c);
		if (first)
			out << (sgn(c) < 0 ? "-" : "");
		else
			out << (sgn(c) < 0 ? " - " : " + ");
		first = false;
		bool unit = mag == 1;
		if (!unit || k == 0)
			out << mag.get_str();
		if (k > 0)
			out << "t";
		if (k > 1)
			out << "^" << k;
	}
	return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
	if (b.is_zero())
		throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
	if (a.degree() < b.degree())
		return {Polynomial{}, a};
	std::vector<Rational> rem = a.coefficients();
	std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
	const auto& bc = b.coefficients();
	const Rational lead = b.leading();
	for (int k = a.degree() - b.degree(); k >= 0; --k) {
		Rational q = rem[k + b.degree()] / lead;
		quot[k] = q;
		if (sgn(q) == 0)
			continue;
		for (int j = 0; j <= b.degree(); ++j)
			rem[k + j] -= q * bc[j];
	}
	rem.resize(b.degree() > 0 ? b.degree() : 0);
	return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial pow(const Polynomial& p, unsigned k)
{
	Polynomial r{1};
	for (unsigned i = 0; i < k; ++i)
		r = r * p;
	return r;
}

std::string write_polynomial(const Polynomial& p)
{
	std::ostringstream out;
	out << "poly " << p.degree() << ":";
	for (const auto& c : p.coefficients())
		out << ' ' << c.get_str();
	return out.str();
}

Polynomial parse_polynomial(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string word, deg;
	if (!(in >> word >> deg) || word != "poly" || deg.empty() || deg.back() != ':')
		throw Error(ErrorKind::Syntax, "expected 'poly <degree>: c0 ... cd'");
	int d = 0;
	try {
		d = std::stoi(deg.substr(0, deg.size() - 1));
	} catch (const std::exception&) {
		throw Error(ErrorKind::Syntax, "bad polynomial degree '" + deg + "'");
	}
	std::vector<Rational> c;
	std::string tok;
	while (in >> tok) {
		Rational q;
		if (q.set_str(tok, 10) != 0 || (tok.find('/') != std::string::npos && q.get_den() == 0))
			throw Error(ErrorKind::Syntax, "bad coefficient '" + tok + "'");
		q.canonicalize();
		c.push_back(q);
	}
	if (static_cast<int>(c.size()) != d + 1)
		throw Error(ErrorKind::Syntax, "polynomial of degree " + std::to_string(d) + " needs "
		    + std::to_string(d + 1) + " coefficients");
	Polynomial p(std::move(c));
	if (p.degree() != d)
		throw Error(ErrorKind::Syntax, "leading coefficient is zero");
	return p;
}

Polynomial charpoly(const RationalMatrix& m)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "characteristic polynomial of a non-square matrix");
	const std::size_t n = m.rows();
	RationalMatrix h = m;

	// similarity reduction to upper Hessenberg form
	for (std::size_t j = 0; j + 2 < n; ++j) {
		std::size_t p = j + 1;
		while (p < n && sgn(h(p, j)) == 0)
			++p;
		if (p == n)
			continue;
		if (p != j + 1) {
			for (std::size_t c = 0; c < n; ++c)
				std::swap(h(p, c), h(j + 1, c));
			for (std::size_t r = 0; r < n; ++r)
				std::swap(h(r, p), h(r, j + 1));
		}
		for (std::size_t r = j + 2; r < n; ++r) {
			if (sgn(h(r, j)) == 0)
				continue;
			Rational u = h(r, j) / h(j + 1, j);
			for (std::size_t c = 0; c < n; ++c)
				h(r, c) -= u * h(j + 1, c);
			for (std::size_t c = 0; c < n; ++c)
				h(c, j + 1) += u * h(c, r);
		}
	}

	// p[k] = charpoly of the leading k x k block
	std::vector<Polynomial> p(n + 1);
	p[0] = Polynomial{1};
	const Polynomial t = Polynomial::monomial(1);
	for (std::size_t k = 1; k <= n; ++k) {
		p[k] = (t - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
		Rational sub = 1;
		for (std::size_t i = k - 1; i >= 1; --i) {
			sub *= h(i, i - 1);
			if (sgn(sub) == 0)
				break;
			p[k] -= (sub * h(i - 1, k - 1)) * p[i - 1];
		}
	}
	return p[n];
}

long euler_phi(long n)
{
	long result = n;
	for (long q = 2; q * q <= n; ++q) {
		if (n % q != 0)
			continue;
		while (n % q == 0)
			n /= q;
		result -= result / q;
	}
	if (n > 1)
		result -= result / n;
	return result;
}

namespace {

Polynomial cyclotomic_memo(long n, std::map<long, Polynomial>& memo)
{
	if (auto it = memo.find(n); it != memo.end())
		return it->second;
	Polynomial p = Polynomial::monomial(static_cast<int>(n)) - Polynomial{1};
	for (long d = 1; d < n; ++d) {
		if (n % d != 0)
			continue;
		auto [q, r] = divmod(p, cyclotomic_memo(d, memo));
		if (!r.is_zero())
			throw Error(ErrorKind::Inconsistency, "cyclotomic division left a remainder");
		p = q;
	}
	memo.emplace(n, p);
	return p;
}

} // namespace

Polynomial cyclotomic(long n)
{
	if (n < 1)
		throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
	std::map<long, Polynomial> memo;
	return cyclotomic_memo(n, memo);
}

Polynomial CyclotomicFactorization::product() const
{
	Polynomial p = remainder;
	for (auto [n, mult] : factors)
		p = p * pow(cyclotomic(n), static_cast<unsigned>(mult));
	return p;
}

CyclotomicFactorization factor_cyclotomic(const Polynomial& p)
{
	if (!p.is_monic() || !p.has_integer_coefficients())
		throw Error(ErrorKind::InvalidArgument, "factor_cyclotomic needs a monic integer polynomial");
	CyclotomicFactorization out;
	Polynomial rest = p;
	const long d = p.degree();
	// phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2 d^2
	const long cap = 3 * d * d;
	std::map<long, Polynomial> memo;
	for (long n = 1; n <= cap && rest.degree() > 0; ++n) {
		if (euler_phi(n) > rest.degree())
			continue;
		Polynomial phi = cyclotomic_memo(n, memo);
		int mult = 0;
		for (;;) {
			auto [q, r] = divmod(rest, phi);
			if (!r.is_zero())
				break;
			rest = q;
			++mult;
		}
		if (mult > 0)
			out.factors.emplace_back(n, mult);
	}
	out.remainder = rest;
	return out;
}

} // namespace divides
