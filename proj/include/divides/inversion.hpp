#pragma once

#include <divides/matrix.hpp>
#include <divides/polynomial.hpp>

#include <cstdint>
#include <vector>

namespace divides {

/// One cyclic invariant summand E_i. `basis` is the Krylov basis
/// e_1, M e_1, ..., M^{m-1} e_1 in ambient coordinates, and `local` is the
/// matrix of M on that basis.
struct CyclicSummand {
	std::vector<std::vector<Rational>> basis;
	RationalMatrix local;
	Polynomial psi;   // charpoly of `local`, a cyclotomic power
	long order = 1;   // psi = Phi_order^power
	int power = 1;

	std::size_t dimension() const { return basis.size(); }
	const std::vector<Rational>& generator() const { return basis.front(); }
};

struct InvariantDecomposition {
	std::vector<CyclicSummand> summands;

	/// Columns are the summand bases, in order.
	RationalMatrix change_of_basis() const;
};

/// Splits each primary component ker Phi_n(M)^mult into cyclic M-invariant
/// summands. `seed` drives the fallback random search for cyclic
/// generators. Throws Error(NotCyclotomic) or Error(Singular).
InvariantDecomposition primary_cyclic_decomposition(const RationalMatrix& m,
    const CyclotomicFactorization& fact, std::uint64_t seed = 0);

struct ProofPolynomials {
	Polynomial psi0; // (psi(t) - psi(0)) / (-t psi(0)); psi0(A) = A^{-1}
	Polynomial psi1; // -psi(t) + t^{deg psi}; psi1(A^{+-1}) = A^{+-deg psi}
	bool reciprocal = false; // t^deg psi(1/t) = +-psi(t)
};

/// Throws Error(ZeroConstantTerm) when psi(0) = 0.
ProofPolynomials proof_polynomials(const Polynomial& psi);

struct SummandCheck {
	bool annihilated = false;     // psi(A_i) = 0
	bool psi0_inverse = false;    // psi0(A_i) = A_i^{-1}
	bool psi1_power = false;      // psi1(A_i^{+-1}) = A_i^{+-dim}
	bool cyclic_both_ways = false; // Krylov dims of A_i, A_i^{-1} at e_1 equal dim
	bool local_involution = false; // b_i^2 = Id and b_i A_i b_i = A_i^{-1}

	bool ok() const
	{
		return annihilated && psi0_inverse && psi1_power && cyclic_both_ways && local_involution;
	}
};

struct StrongInversionCertificate {
	RationalMatrix b;
	std::vector<RationalMatrix> local_b; // b_i in Krylov coordinates
	InvariantDecomposition decomposition;
	std::vector<SummandCheck> summand_checks;
	bool involution = false;  // b^2 = Id
	bool inverts = false;     // b M b^{-1} = M^{-1}
	bool integral = false;    // b happens to have integer entries

	bool verified() const;
};

/// Builds b = sum b_i with b_i(e_j) = f_j, f_j = A_i^{-(j-1)} e_1, and
/// verifies it exactly before returning. Throws Error(NonSquare),
/// Error(Singular), Error(NotCyclotomic) or Error(CertificateFailure).
StrongInversionCertificate strong_inversion(const RationalMatrix& m, std::uint64_t seed = 0);

/// Text dump: `certificate`, summand lines, b in matrix format, `verified: true`.
std::string write_certificate(const StrongInversionCertificate& cert);

} // namespace divides
