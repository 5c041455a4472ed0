#pragma once

#include <divides/analysis.hpp>
#include <divides/matrix.hpp>

#include <string>
#include <vector>

namespace divides {

/// Index ranges of the vanishing cycles: maxima first, then saddles, then
/// minima. Indices are 0-based and half-open.
struct BasisOrdering {
	std::size_t plus_begin = 0, plus_end = 0;
	std::size_t zero_begin = 0, zero_end = 0;
	std::size_t minus_begin = 0, minus_end = 0;

	static BasisOrdering from(const AdjacencyBlocks& blocks);
	std::size_t size() const { return minus_end; }
};

/// S = [[Id, A, G], [0, Id, B], [0, 0, Id]].
IntegerMatrix seifert_matrix(const AdjacencyBlocks& blocks);

/// T = (S^t)^{-1} S by integer forward substitution.
/// Throws Error(NotUnimodular) unless S is unit upper triangular.
IntegerMatrix monodromy_matrix(const IntegerMatrix& s);

/// C = [[Id, A, G], [0, -Id, -B], [0, 0, Id]]; throws Error(Involution)
/// when C^2 != Id.
IntegerMatrix conjugation_matrix(const AdjacencyBlocks& blocks);

/// The block form T C must have: [[Id, 0, 0], [-A^t, -Id, 0], [G^t, B^t, Id]].
IntegerMatrix transgradient_form(const AdjacencyBlocks& blocks);

/// Returns T C; throws Error(BlockMismatch) if it differs from
/// transgradient_form or does not square to Id.
IntegerMatrix involution_product(const IntegerMatrix& t, const IntegerMatrix& c,
    const AdjacencyBlocks& blocks);

/// Image of the i-th vanishing cycle (1-based) under complex conjugation,
/// written in the vanishing-cycle basis. Throws Error(IndexOutOfRange).
std::vector<Integer> conjugation_action(std::size_t i, const AdjacencyBlocks& blocks,
    const BasisOrdering& ordering);

/// T^{-1} as S^{-1} S^t, with S^{-1} by back substitution.
IntegerMatrix monodromy_inverse(const IntegerMatrix& s);

struct IdentityCheck {
	std::string name;
	bool passed = false;
};

struct IdentityReport {
	std::vector<IdentityCheck> checks;

	bool all_passed() const;
	std::string to_string() const;
};

/// Checks C^2 = Id, (TC)^2 = Id, CTC = T^{-1}, T = (TC)C, 2G = AB, the
/// transgradient block form of TC, Trace C = mu+ - mu0 + mu-, and
/// mu = 2 delta + Trace C. Failures are entries, not exceptions.
IdentityReport verify_identities(const DivideAnalysis& a);

struct FiberInvariants {
	int b1 = 0;    // first Betti number = mu
	int r = 0;     // boundary components
	int euler = 0; // 1 - mu
	int genus = 0; // (1 + mu - r) / 2
};

/// Requires a connected divide (Error(InvalidArgument) otherwise); throws
/// Error(Parity) when mu + 1 - r is odd.
FiberInvariants fiber_invariants(const DivideStats& stats);

} // namespace divides
