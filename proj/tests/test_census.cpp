#include "support.hpp"

#include <divides/canonical.hpp>
#include <divides/census.hpp>
#include <divides/error.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace divides;

namespace {

// Normal form of an interval word: crossings renumbered by first appearance
// and each crossing rotated so that its first visit enters slot 0. With one
// interval and two boundary stubs this is a complete relabeling invariant.
std::vector<Visit> normalize(const std::vector<Visit>& visits)
{
	std::vector<int> id(visits.size() + 1, 0), turn(visits.size() + 1, 0);
	int next = 0;
	std::vector<Visit> out;
	for (const auto& v : visits) {
		if (id[v.crossing] == 0) {
			id[v.crossing] = ++next;
			turn[v.crossing] = (4 - v.slot) % 4;
		}
		out.push_back({id[v.crossing], (v.slot + turn[v.crossing]) % 4});
	}
	return out;
}

std::vector<Visit> reversed(std::vector<Visit> visits)
{
	std::reverse(visits.begin(), visits.end());
	for (auto& v : visits)
		v.slot = v.exit_slot();
	return visits;
}

std::vector<Visit> mirrored(std::vector<Visit> visits)
{
	for (auto& v : visits)
		v.slot = (4 - v.slot) % 4;
	return visits;
}

std::vector<Visit> orbit_minimum(const std::vector<Visit>& w, Symmetries sym)
{
	std::vector<std::vector<Visit>> images{w};
	if (sym.reversal)
		images.push_back(reversed(w));
	if (sym.reflection) {
		const auto n = images.size();
		for (std::size_t i = 0; i < n; ++i)
			images.push_back(mirrored(images[i]));
	}
	std::vector<Visit> best = normalize(images[0]);
	for (const auto& img : images)
		best = std::min(best, normalize(img));
	return best;
}

std::uint64_t oracle_classes(int g, Symmetries sym)
{
	std::set<std::vector<Visit>> classes;
	for_each_word(g, [&](const SignedGaussWord& w) {
		if (realize(w))
			classes.insert(orbit_minimum(w.visits, sym));
	});
	return classes.size();
}

} // namespace

TEST_CASE("candidate words")
{
	CHECK(word_count(0) == 1);
	CHECK(word_count(1) == 2);
	CHECK(word_count(2) == 12);
	CHECK(word_count(3) == 120);
	CHECK(word_count(4) == 1680);
	for (int g = 0; g <= 4; ++g) {
		auto ws = words(g);
		CHECK(ws.size() == word_count(g));
		std::set<std::string> distinct;
		for (const auto& w : ws) {
			CHECK(w.crossings() == g);
			distinct.insert(w.to_string());
			CHECK(normalize(w.visits) == w.visits);
		}
		CHECK(distinct.size() == ws.size());
	}
}

TEST_CASE("realized words are planar interval divides")
{
	const std::uint64_t planar_expected[] = {1, 2, 8, 42, 260};
	for (int g = 0; g <= 4; ++g) {
		std::uint64_t planar = 0;
		for_each_word(g, [&](const SignedGaussWord& w) {
			if (auto d = realize(w)) {
				++planar;
				CHECK(d->crossings == g);
				CHECK(d->interval_count() == 1);
				CHECK(validate_planarity(*d).euler_characteristic() == 2);
			}
		});
		CHECK(planar == planar_expected[g]);
	}
}

TEST_CASE("class counts match the word-orbit oracle for every symmetry set")
{
	for (auto sym : {Symmetries{false, false}, Symmetries{true, false}, Symmetries{false, true},
	         Symmetries{true, true}}) {
		CAPTURE(sym.to_string());
		auto result = census(4, sym);
		REQUIRE(result.genera.size() == 5);
		for (int g = 0; g <= 4; ++g)
			CHECK(result.genera[g].classes == oracle_classes(g, sym));
	}
}

TEST_CASE("class sizes add up to the planar candidates")
{
	auto result = census(4, {});
	for (const auto& g : result.genera) {
		std::uint64_t sum = 0;
		for (auto s : g.class_sizes)
			sum += s;
		CHECK(sum == g.planar);
		CHECK(g.class_sizes.size() == g.classes);
		CHECK(g.candidates == word_count(g.g));
	}
	CHECK(result.counts() == std::vector<std::uint64_t>{1, 1, 4, 15, 82});
}

TEST_CASE("parallel census is deterministic")
{
	CensusOptions one;
	one.keep_divides = true;
	CensusOptions four = one;
	four.workers = 4;
	auto a = census(4, {}, one);
	auto b = census(4, {}, four);
	REQUIRE(a.genera.size() == b.genera.size());
	for (std::size_t i = 0; i < a.genera.size(); ++i) {
		CHECK(a.genera[i].codes == b.genera[i].codes);
		CHECK(a.genera[i].class_sizes == b.genera[i].class_sizes);
		CHECK(a.genera[i].divides == b.genera[i].divides);
	}
}

TEST_CASE("representatives carry their class code")
{
	CensusOptions opt;
	opt.keep_divides = true;
	auto result = census(3, {}, opt);
	for (const auto& g : result.genera) {
		REQUIRE(g.divides.size() == g.classes);
		for (std::size_t i = 0; i < g.divides.size(); ++i) {
			CHECK(canonical_code(g.divides[i], {}) == g.codes[i]);
			CHECK(g.divides[i].name.find(code_hash(g.codes[i])) != std::string::npos);
		}
		CHECK(std::is_sorted(g.codes.begin(), g.codes.end()));
	}
}

TEST_CASE("budget is enforced")
{
	CensusOptions opt;
	opt.budget = 100;
	try {
		census(4, {}, opt);
		FAIL("budget ignored");
	} catch (const Error& e) {
		CHECK(e.kind() == ErrorKind::BudgetExceeded);
	}
}
