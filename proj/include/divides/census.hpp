#pragma once

#include <divides/canonical.hpp>
#include <divides/divide.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace divides {

/// Visit sequence of one immersed interval with g crossings. Crossings first
/// appear in increasing order; a first visit enters slot 0 and a second
/// visit enters slot 1 or 3 (the side bit).
struct SignedGaussWord {
	std::vector<Visit> visits;

	int crossings() const { return static_cast<int>(visits.size()) / 2; }
	std::string to_string() const;
};

/// (2g-1)!! * 2^g.
std::uint64_t word_count(int g);

/// Calls `fn` once for each candidate word with g crossings.
void for_each_word(int g, const std::function<void(const SignedGaussWord&)>& fn);
std::vector<SignedGaussWord> words(int g);

/// Interval divide with boundary (b1.start, b1.end), or nullopt when the
/// rotation system is not planar.
std::optional<DivideMap> realize(const SignedGaussWord& w);

struct CensusOptions {
	std::uint64_t budget = 50'000'000; // max candidates per genus
	unsigned workers = 1;
	bool keep_divides = false;
};

struct GenusCensus {
	int g = 0;
	std::uint64_t candidates = 0;
	std::uint64_t planar = 0;
	std::uint64_t classes = 0;
	/// Number of planar candidates per class, in canonical-code order.
	std::vector<std::uint64_t> class_sizes;
	/// One representative per class (the earliest candidate), canonical-code
	/// order; filled when keep_divides is set.
	std::vector<DivideMap> divides;
	std::vector<std::string> codes;
};

struct CensusResult {
	Symmetries symmetries;
	std::vector<GenusCensus> genera;

	std::vector<std::uint64_t> counts() const;
};

/// Counts interval divides with g <= g_max double points up to relabeling
/// and `sym`. Throws Error(BudgetExceeded) when a genus has more candidates
/// than the budget.
CensusResult census(int g_max, Symmetries sym, const CensusOptions& opt = {});

} // namespace divides
