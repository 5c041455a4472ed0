#include <divides/analysis.hpp>
#include <divides/census.hpp>
#include <divides/error.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

namespace divides {

std::string SignedGaussWord::to_string() const
{
	std::ostringstream out;
	for (std::size_t i = 0; i < visits.size(); ++i)
		out << (i ? " " : "") << visits[i].crossing << '.' << visits[i].slot;
	return out.str();
}

std::uint64_t word_count(int g)
{
	std::uint64_t n = 1;
	for (int k = 1; k <= g; ++k)
		n *= static_cast<std::uint64_t>(2 * k - 1) * 2;
	return n;
}

namespace {

void matchings(int g, std::vector<int>& seq, std::vector<int>& open, int next,
    const std::function<void(const std::vector<int>&)>& fn)
{
	if (static_cast<int>(seq.size()) == 2 * g) {
		fn(seq);
		return;
	}
	if (next <= g) {
		seq.push_back(next);
		open.push_back(next);
		matchings(g, seq, open, next + 1, fn);
		open.pop_back();
		seq.pop_back();
	}
	for (std::size_t i = 0; i < open.size(); ++i) {
		int c = open[i];
		seq.push_back(c);
		open.erase(open.begin() + static_cast<long>(i));
		matchings(g, seq, open, next, fn);
		open.insert(open.begin() + static_cast<long>(i), c);
		seq.pop_back();
	}
}

} // namespace

void for_each_word(int g, const std::function<void(const SignedGaussWord&)>& fn)
{
	if (g < 0)
		throw Error(ErrorKind::InvalidArgument, "negative number of crossings");
	std::vector<int> seq, open;
	matchings(g, seq, open, 1, [&](const std::vector<int>& s) {
		for (std::uint32_t bits = 0; bits < (1u << g); ++bits) {
			SignedGaussWord w;
			std::vector<bool> seen(g + 1, false);
			for (int c : s) {
				int slot = 0;
				if (seen[c])
					slot = (bits >> (c - 1)) & 1u ? 3 : 1;
				seen[c] = true;
				w.visits.push_back({c, slot});
			}
			fn(w);
		}
	});
}

std::vector<SignedGaussWord> words(int g)
{
	std::vector<SignedGaussWord> out;
	for_each_word(g, [&](const SignedGaussWord& w) { out.push_back(w); });
	return out;
}

std::optional<DivideMap> realize(const SignedGaussWord& w)
{
	DivideMap d;
	d.name = "g" + std::to_string(w.crossings());
	d.crossings = w.crossings();
	d.branches.push_back({BranchKind::Interval, w.visits});
	d.boundary = {{1, true}, {1, false}};
	validate_structure(d);
	try {
		validate_planarity(d);
	} catch (const Error& e) {
		if (e.kind() == ErrorKind::NonPlanar)
			return std::nullopt;
		throw;
	}
	return d;
}

std::vector<std::uint64_t> CensusResult::counts() const
{
	std::vector<std::uint64_t> c;
	for (const auto& g : genera)
		c.push_back(g.classes);
	return c;
}

namespace {

struct ClassEntry {
	std::uint64_t first_index = 0;
	std::uint64_t size = 0;
	DivideMap representative;
};

using ClassTable = std::map<std::string, ClassEntry>;

void merge(ClassTable& into, ClassTable&& from)
{
	for (auto& [code, e] : from) {
		auto it = into.find(code);
		if (it == into.end()) {
			into.emplace(code, std::move(e));
			continue;
		}
		it->second.size += e.size;
		if (e.first_index < it->second.first_index) {
			it->second.first_index = e.first_index;
			it->second.representative = std::move(e.representative);
		}
	}
}

} // namespace

CensusResult census(int g_max, Symmetries sym, const CensusOptions& opt)
{
	if (g_max < 0)
		throw Error(ErrorKind::InvalidArgument, "g_max must be non-negative");
	CensusResult result;
	result.symmetries = sym;
	for (int g = 0; g <= g_max; ++g) {
		GenusCensus gc;
		gc.g = g;
		gc.candidates = word_count(g);
		if (gc.candidates > opt.budget)
			throw Error(ErrorKind::BudgetExceeded, "genus " + std::to_string(g) + " has "
			    + std::to_string(gc.candidates) + " candidates, budget is "
			    + std::to_string(opt.budget));
		auto all = words(g);

		const unsigned workers = std::max(1u, opt.workers);
		auto chunk = [&](std::size_t begin, std::size_t end) {
			ClassTable table;
			std::uint64_t planar = 0;
			for (std::size_t i = begin; i < end; ++i) {
				auto d = realize(all[i]);
				if (!d)
					continue;
				++planar;
				auto code = canonical_code(*d, sym);
				auto [it, fresh] = table.try_emplace(code);
				if (fresh) {
					it->second.first_index = i;
					it->second.representative = std::move(*d);
				}
				++it->second.size;
			}
			return std::make_pair(std::move(table), planar);
		};

		ClassTable table;
		if (workers == 1) {
			auto [t, p] = chunk(0, all.size());
			table = std::move(t);
			gc.planar = p;
		} else {
			std::vector<std::future<std::pair<ClassTable, std::uint64_t>>> jobs;
			const std::size_t per = (all.size() + workers - 1) / workers;
			for (std::size_t b = 0; b < all.size(); b += per)
				jobs.push_back(std::async(std::launch::async, chunk, b, std::min(all.size(), b + per)));
			for (auto& j : jobs) {
				auto [t, p] = j.get();
				merge(table, std::move(t));
				gc.planar += p;
			}
		}

		gc.classes = table.size();
		for (auto& [code, e] : table) {
			gc.class_sizes.push_back(e.size);
			if (opt.keep_divides) {
				e.representative.name = "g" + std::to_string(g) + "_" + code_hash(code);
				gc.divides.push_back(std::move(e.representative));
				gc.codes.push_back(code);
			}
		}
		result.genera.push_back(std::move(gc));
	}
	return result;
}

} // namespace divides
