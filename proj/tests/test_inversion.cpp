#include "support.hpp"

#include <divides/error.hpp>
#include <divides/inversion.hpp>
#include <divides/linalg.hpp>

#include <doctest.h>

#include <random>

using namespace divides;

namespace {

ErrorKind inversion_failure(const RationalMatrix& m)
{
	try {
		strong_inversion(m);
	} catch (const Error& e) {
		return e.kind();
	}
	FAIL("strong inversion unexpectedly succeeded");
	return ErrorKind::Inconsistency;
}

// Independent check of a claimed strong inversion.
void check_inverts(const RationalMatrix& m, const RationalMatrix& b)
{
	CHECK((b * b).is_identity());
	CHECK(b * m * b == inverse(m));
}

} // namespace

TEST_CASE("A2 monodromy is one cyclic summand")
{
	RationalMatrix m{{1, 1}, {-1, 0}};
	auto fact = factor_cyclotomic(charpoly(m));
	auto dec = primary_cyclic_decomposition(m, fact);
	REQUIRE(dec.summands.size() == 1);
	CHECK(dec.summands[0].dimension() == 2);
	CHECK(dec.summands[0].psi == cyclotomic(6));
	CHECK(dec.summands[0].order == 6);
	CHECK(dec.summands[0].power == 1);

	auto cert = strong_inversion(m);
	CHECK(cert.verified());
	CHECK(cert.integral);
	check_inverts(m, cert.b);
}

TEST_CASE("minus identity splits into lines")
{
	auto m = RationalMatrix::identity(2) * Rational(-1);
	auto dec = primary_cyclic_decomposition(m, factor_cyclotomic(charpoly(m)));
	REQUIRE(dec.summands.size() == 2);
	for (const auto& s : dec.summands) {
		CHECK(s.dimension() == 1);
		CHECK(s.psi == Polynomial{1, 1});
	}
	auto cert = strong_inversion(m);
	CHECK(cert.b.is_identity());
}

TEST_CASE("identity is its own strong inversion")
{
	auto cert = strong_inversion(RationalMatrix::identity(3));
	CHECK(cert.verified());
	CHECK(cert.b.is_identity());
}

TEST_CASE("conjugated block diagonal recovers its blocks")
{
	std::mt19937_64 rng(99);
	auto blocks = block_diagonal<Integer>(
	    {test_support::companion(cyclotomic(6)), test_support::companion(pow(cyclotomic(1), 2))});
	auto u = test_support::random_unimodular(4, rng, 12);
	auto m = to_rational(u * blocks * test_support::unimodular_inverse(u));
	auto dec = primary_cyclic_decomposition(m, factor_cyclotomic(charpoly(m)));
	REQUIRE(dec.summands.size() == 2);
	CHECK(dec.summands[0].dimension() == 2);
	CHECK(dec.summands[1].dimension() == 2);
	std::vector<Polynomial> psis{dec.summands[0].psi, dec.summands[1].psi};
	CHECK(std::count(psis.begin(), psis.end(), cyclotomic(6)) == 1);
	CHECK(std::count(psis.begin(), psis.end(), pow(cyclotomic(1), 2)) == 1);

	// summand bases are M-invariant and together span the space
	auto p = dec.change_of_basis();
	CHECK(determinant(p) != 0);
	for (const auto& s : dec.summands) {
		auto basis = RationalMatrix::from_columns(s.basis, m.rows());
		CHECK(m * basis == basis * s.local);
		CHECK(charpoly(s.local) == s.psi);
	}
	check_inverts(m, strong_inversion(m).b);
}

TEST_CASE("repeated blocks need more than one summand per primary component")
{
	// Phi_4 twice: the primary component is not cyclic
	auto c = test_support::companion(cyclotomic(4));
	auto m = to_rational(block_diagonal<Integer>({c, c}));
	auto dec = primary_cyclic_decomposition(m, factor_cyclotomic(charpoly(m)));
	CHECK(dec.summands.size() == 2);
	auto cert = strong_inversion(m);
	CHECK(cert.verified());
	check_inverts(m, cert.b);
}

TEST_CASE("generator search is reproducible across seeds")
{
	std::mt19937_64 rng(3);
	auto sample = test_support::random_quasi_unipotent(rng, 10);
	auto m = to_rational(sample.matrix);
	for (std::uint64_t seed : {0u, 1u, 12345u}) {
		auto a = strong_inversion(m, seed);
		auto b = strong_inversion(m, seed);
		CHECK(a.b == b.b);
		CHECK(a.verified());
	}
}

TEST_CASE("proof polynomials")
{
	auto pp = proof_polynomials(cyclotomic(6));
	CHECK(pp.psi0 == Polynomial{1, -1});
	CHECK(pp.psi1 == Polynomial{-1, 1});
	CHECK(pp.reciprocal);

	RationalMatrix a{{1, 1}, {-1, 0}};
	CHECK(pp.psi0(a) == inverse(a));
	CHECK(pp.psi1(a) == a * a);

	auto sq = proof_polynomials(pow(cyclotomic(1), 2));
	CHECK(sq.reciprocal);
	CHECK_THROWS_AS(proof_polynomials(Polynomial{0, 0, 1}), Error);
}

TEST_CASE("refusals")
{
	CHECK(inversion_failure(RationalMatrix{{2}}) == ErrorKind::NotCyclotomic);
	// charpoly t^2 - 3t + 1
	CHECK(inversion_failure(RationalMatrix{{2, 1}, {1, 1}}) == ErrorKind::NotCyclotomic);
	CHECK(inversion_failure(RationalMatrix{{0, 1}, {0, 0}}) == ErrorKind::Singular);
	CHECK(inversion_failure(RationalMatrix(2, 3)) == ErrorKind::NonSquare);
}

TEST_CASE("certificate text")
{
	auto text = write_certificate(strong_inversion(RationalMatrix{{1, 1}, {-1, 0}}));
	CHECK(text.find("certificate\n") == 0);
	CHECK(text.find("psi Phi_6^1") != std::string::npos);
	CHECK(text.find("verified: true") != std::string::npos);
}

TEST_CASE("random quasi-unipotent matrices")
{
	std::mt19937_64 rng(1234);
	for (int trial = 0; trial < 40; ++trial) {
		auto sample = test_support::random_quasi_unipotent(rng, 8);
		auto m = to_rational(sample.matrix);
		auto cert = strong_inversion(m, static_cast<std::uint64_t>(trial));
		CHECK(cert.verified());
		check_inverts(m, cert.b);
		for (const auto& chk : cert.summand_checks)
			CHECK(chk.ok());
	}
}
