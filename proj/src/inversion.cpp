#include <divides/error.hpp>
#include <divides/inversion.hpp>
#include <divides/linalg.hpp>
#include <divides/text_format.hpp>

#include <random>
#include <sstream>

namespace divides {

RationalMatrix InvariantDecomposition::change_of_basis() const
{
	std::vector<std::vector<Rational>> cols;
	for (const auto& s : summands)
		cols.insert(cols.end(), s.basis.begin(), s.basis.end());
	const std::size_t n = cols.empty() ? 0 : cols.front().size();
	return RationalMatrix::from_columns(cols, n);
}

namespace {

bool is_zero(const RationalMatrix& m)
{
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			if (sgn(m(i, j)) != 0)
				return false;
	return true;
}

bool is_zero(const std::vector<Rational>& v)
{
	for (const auto& x : v)
		if (sgn(x) != 0)
			return false;
	return true;
}

std::vector<Rational> unit(std::size_t n, std::size_t k)
{
	std::vector<Rational> v(n, Rational(0));
	v[k] = 1;
	return v;
}

/// A vector whose annihilator under `a` is the full minimal polynomial,
/// i.e. not killed by `below` = Phi(a)^{e-1}.
std::vector<Rational> cyclic_generator(const RationalMatrix& below, std::mt19937_64& rng)
{
	const std::size_t n = below.rows();
	for (std::size_t k = 0; k < n; ++k) {
		auto v = unit(n, k);
		if (!is_zero(below * v))
			return v;
	}
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (int attempt = 0; attempt < 1000; ++attempt) {
		std::vector<Rational> v(n);
		for (auto& x : v)
			x = coeff(rng);
		if (!is_zero(below * v))
			return v;
	}
	throw Error(ErrorKind::Inconsistency, "no cyclic generator found");
}

/// Cyclic splitting of a primary block whose minimal polynomial is a power
/// of `phi`. `embed` maps local coordinates to ambient ones.
void split_primary(RationalMatrix a, RationalMatrix embed, const Polynomial& phi,
    std::mt19937_64& rng, std::vector<std::vector<std::vector<Rational>>>& out)
{
	while (a.rows() > 0) {
		const std::size_t dim = a.rows();
		const RationalMatrix phi_a = phi(a);
		RationalMatrix below = RationalMatrix::identity(dim);
		RationalMatrix power = phi_a;
		int e = 1;
		while (!is_zero(power)) {
			below = power;
			power = power * phi_a;
			++e;
		}
		const std::size_t m = static_cast<std::size_t>(e * phi.degree());

		std::vector<std::vector<Rational>> krylov;
		krylov.push_back(cyclic_generator(below, rng));
		while (krylov.size() < m)
			krylov.push_back(a * krylov.back());
		const RationalMatrix kry = RationalMatrix::from_columns(krylov, dim);

		std::vector<std::vector<Rational>> ambient;
		for (const auto& v : krylov)
			ambient.push_back(embed * v);
		out.push_back(std::move(ambient));
		if (m == dim)
			return;

		// invariant complement {w : f(p(a) w) = 0 for all p}, with f dual to
		// the last Krylov vector
		auto f = solve_any(kry.transpose(), unit(m, m - 1));
		RationalMatrix rows(m, dim);
		std::vector<Rational> fa = f;
		for (std::size_t j = 0; j < m; ++j) {
			for (std::size_t c = 0; c < dim; ++c)
				rows(j, c) = fa[c];
			// fa <- fa * a, as a row vector
			fa = a.transpose() * fa;
		}
		auto comp = nullspace(rows);
		if (comp.size() != dim - m)
			throw Error(ErrorKind::Inconsistency, "invariant complement has wrong dimension");
		RationalMatrix nb = RationalMatrix::from_columns(comp, dim);
		a = restrict_to(a, nb);
		embed = embed * nb;
	}
}

} // namespace

InvariantDecomposition primary_cyclic_decomposition(const RationalMatrix& m,
    const CyclotomicFactorization& fact, std::uint64_t seed)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "decomposition of a non-square matrix");
	if (sgn(determinant(m)) == 0)
		throw Error(ErrorKind::Singular, "matrix is not invertible");
	if (!fact.complete())
		throw Error(ErrorKind::NotCyclotomic, "characteristic polynomial has non-cyclotomic factor "
		    + fact.remainder.to_string());

	const std::size_t n = m.rows();
	std::mt19937_64 rng(seed);
	InvariantDecomposition dec;
	std::size_t total = 0;
	for (auto [order, mult] : fact.factors) {
		const Polynomial phi = cyclotomic(order);
		auto kernel = nullspace(pow(phi, static_cast<unsigned>(mult))(m));
		if (kernel.size() != static_cast<std::size_t>(phi.degree() * mult))
			throw Error(ErrorKind::Inconsistency, "primary component of Phi_" + std::to_string(order)
			    + " has unexpected dimension");
		RationalMatrix basis = RationalMatrix::from_columns(kernel, n);
		std::vector<std::vector<std::vector<Rational>>> pieces;
		split_primary(restrict_to(m, basis), basis, phi, rng, pieces);
		for (auto& vecs : pieces) {
			CyclicSummand s;
			s.basis = std::move(vecs);
			s.local = restrict_to(m, RationalMatrix::from_columns(s.basis, n));
			s.psi = charpoly(s.local);
			s.order = order;
			s.power = static_cast<int>(s.dimension()) / phi.degree();
			if (s.psi != pow(phi, static_cast<unsigned>(s.power)))
				throw Error(ErrorKind::Inconsistency, "summand is not a cyclotomic power");
			total += s.dimension();
			dec.summands.push_back(std::move(s));
		}
	}
	if (total != n || rank(dec.change_of_basis()) != n)
		throw Error(ErrorKind::Inconsistency, "summands do not decompose the space");
	return dec;
}

ProofPolynomials proof_polynomials(const Polynomial& psi)
{
	if (!psi.is_monic())
		throw Error(ErrorKind::InvalidArgument, "psi must be monic");
	const Rational c0 = psi.coeff(0);
	if (sgn(c0) == 0)
		throw Error(ErrorKind::ZeroConstantTerm, "psi(0) = 0");
	ProofPolynomials out;
	out.psi1 = Polynomial::monomial(psi.degree()) - psi;
	// (psi - psi(0)) / t has the coefficients shifted down by one
	std::vector<Rational> shifted(psi.coefficients().begin() + 1, psi.coefficients().end());
	out.psi0 = Rational(-1 / c0) * Polynomial(std::move(shifted));
	const Polynomial rev = psi.reversed();
	out.reciprocal = rev == psi || rev == -psi;

	if (psi.has_integer_coefficients()) {
		auto fact = factor_cyclotomic(psi);
		if (fact.complete() && fact.factors.size() == 1 && !out.reciprocal)
			throw Error(ErrorKind::Inconsistency, "cyclotomic power is not reciprocal");
	}
	return out;
}

bool StrongInversionCertificate::verified() const
{
	if (!involution || !inverts)
		return false;
	for (const auto& c : summand_checks)
		if (!c.ok())
			return false;
	return true;
}

StrongInversionCertificate strong_inversion(const RationalMatrix& m, std::uint64_t seed)
{
	if (!m.is_square())
		throw Error(ErrorKind::NonSquare, "strong inversion of a non-square matrix");
	if (sgn(determinant(m)) == 0)
		throw Error(ErrorKind::Singular, "matrix is not invertible");
	const auto fact = factor_cyclotomic(charpoly(m));
	if (!fact.complete())
		throw Error(ErrorKind::NotCyclotomic, "characteristic polynomial has non-cyclotomic factor "
		    + fact.remainder.to_string());

	StrongInversionCertificate cert;
	cert.decomposition = primary_cyclic_decomposition(m, fact, seed);

	for (const auto& s : cert.decomposition.summands) {
		const std::size_t dim = s.dimension();
		const RationalMatrix& a = s.local;
		const RationalMatrix a_inv = inverse(a);

		// in Krylov coordinates e_1 is the first unit vector
		std::vector<std::vector<Rational>> f;
		f.push_back(unit(dim, 0));
		while (f.size() < dim)
			f.push_back(a_inv * f.back());
		RationalMatrix bi = RationalMatrix::from_columns(f, dim);

		SummandCheck chk;
		const auto pp = proof_polynomials(s.psi);
		chk.annihilated = is_zero(s.psi(a));
		chk.psi0_inverse = pp.psi0(a) == a_inv && pp.psi0(a_inv) == a;
		chk.psi1_power = pp.psi1(a) == power(a, dim) && pp.psi1(a_inv) == power(a_inv, dim);
		chk.cyclic_both_ways = krylov_dimension(a, unit(dim, 0)) == dim
		    && krylov_dimension(a_inv, unit(dim, 0)) == dim;
		chk.local_involution = (bi * bi).is_identity() && bi * a * bi == a_inv;

		cert.local_b.push_back(std::move(bi));
		cert.summand_checks.push_back(chk);
	}

	const RationalMatrix p = cert.decomposition.change_of_basis();
	cert.b = p * block_diagonal(cert.local_b) * inverse(p);
	cert.involution = (cert.b * cert.b).is_identity();
	cert.inverts = cert.involution && cert.b * m == inverse(m) * cert.b;
	cert.integral = is_integral(cert.b);
	if (!cert.verified())
		throw Error(ErrorKind::CertificateFailure, "strong inversion failed verification");
	return cert;
}

std::string write_certificate(const StrongInversionCertificate& cert)
{
	std::ostringstream out;
	out << "certificate\n";
	out << "dimension " << cert.b.rows() << '\n';
	out << "summands " << cert.decomposition.summands.size() << '\n';
	for (std::size_t i = 0; i < cert.decomposition.summands.size(); ++i) {
		const auto& s = cert.decomposition.summands[i];
		out << "summand " << i + 1 << " dim " << s.dimension() << " psi Phi_" << s.order << '^'
		    << s.power << ' ' << write_polynomial(s.psi) << '\n';
	}
	out << write_matrix(cert.b);
	out << "integral: " << (cert.integral ? "true" : "false") << '\n';
	out << "verified: " << (cert.verified() ? "true" : "false") << '\n';
	return out.str();
}

} // namespace divides
