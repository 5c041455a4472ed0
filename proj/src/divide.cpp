#include <divides/divide.hpp>
#include <divides/error.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace divides {

int DivideMap::interval_count() const
{
	return static_cast<int>(std::count_if(branches.begin(), branches.end(),
	    [](const Branch& b) { return b.kind == BranchKind::Interval; }));
}

int DivideMap::circle_count() const
{
	return static_cast<int>(branches.size()) - interval_count();
}

void validate_structure(const DivideMap& d)
{
	if (d.crossings < 0)
		throw Error(ErrorKind::Syntax, "negative crossing count");
	if (d.branches.empty())
		throw Error(ErrorKind::Syntax, "divide has no branches");

	// per crossing: visits through the {0,2} pair and through the {1,3} pair
	std::vector<int> even(d.crossings + 1, 0), odd(d.crossings + 1, 0);
	for (std::size_t b = 0; b < d.branches.size(); ++b) {
		const auto& branch = d.branches[b];
		if (branch.kind == BranchKind::Circle && branch.visits.empty())
			throw Error(ErrorKind::Slot, "circle branch " + std::to_string(b + 1)
			    + " has no crossings");
		for (const auto& v : branch.visits) {
			if (v.crossing < 1 || v.crossing > d.crossings)
				throw Error(ErrorKind::Slot, "crossing " + std::to_string(v.crossing)
				    + " out of range 1.." + std::to_string(d.crossings));
			if (v.slot < 0 || v.slot > 3)
				throw Error(ErrorKind::Slot, "slot " + std::to_string(v.slot)
				    + " out of range 0..3");
			++(v.slot % 2 == 0 ? even : odd)[v.crossing];
		}
	}
	for (int c = 1; c <= d.crossings; ++c) {
		if (even[c] != 1 || odd[c] != 1)
			throw Error(ErrorKind::Slot, "crossing " + std::to_string(c)
			    + " must be visited once through slots {0,2} and once through {1,3}"
			    + " (got " + std::to_string(even[c]) + " and " + std::to_string(odd[c]) + ")");
	}

	std::vector<int> starts(d.branches.size() + 1, 0), ends(d.branches.size() + 1, 0);
	for (const auto& s : d.boundary) {
		if (s.branch < 1 || s.branch > static_cast<int>(d.branches.size()))
			throw Error(ErrorKind::Stub, "stub names unknown branch " + std::to_string(s.branch));
		if (d.branches[s.branch - 1].kind != BranchKind::Interval)
			throw Error(ErrorKind::Stub, "circle branch " + std::to_string(s.branch)
			    + " cannot have boundary stubs");
		++(s.start ? starts : ends)[s.branch];
	}
	for (std::size_t b = 0; b < d.branches.size(); ++b) {
		if (d.branches[b].kind != BranchKind::Interval)
			continue;
		if (starts[b + 1] != 1 || ends[b + 1] != 1)
			throw Error(ErrorKind::Stub, "interval branch " + std::to_string(b + 1)
			    + " needs exactly one start and one end stub on the boundary");
	}
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s)
{
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < s.size()) {
		while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
			++i;
		std::size_t j = i;
		while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
			++j;
		if (j > i)
			out.push_back(s.substr(i, j - i));
		i = j;
	}
	return out;
}

bool parse_int(std::string_view s, int& out)
{
	if (s.empty())
		return false;
	auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
	return ec == std::errc() && p == s.data() + s.size();
}

Visit parse_visit(std::string_view tok, int line)
{
	auto dot = tok.find('.');
	Visit v;
	if (dot == std::string_view::npos || !parse_int(tok.substr(0, dot), v.crossing)
	    || !parse_int(tok.substr(dot + 1), v.slot))
		throw Error(ErrorKind::Syntax, "bad visit '" + std::string(tok)
		    + "', expected <crossing>.<slot>", line);
	return v;
}

Stub parse_stub(std::string_view tok, int line)
{
	auto dot = tok.find('.');
	Stub s;
	if (tok.size() < 2 || tok[0] != 'b' || dot == std::string_view::npos
	    || !parse_int(tok.substr(1, dot - 1), s.branch))
		throw Error(ErrorKind::Syntax, "bad stub '" + std::string(tok) + "'", line);
	auto which = tok.substr(dot + 1);
	if (which == "start")
		s.start = true;
	else if (which == "end")
		s.start = false;
	else
		throw Error(ErrorKind::Syntax, "bad stub '" + std::string(tok)
		    + "', expected b<i>.start or b<i>.end", line);
	return s;
}

} // namespace

DivideMap parse_divide(std::string_view text)
{
	DivideMap d;
	enum class Stage { Name, Crossings, Body, Done } stage = Stage::Name;
	int line_no = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		auto nl = text.find('\n', pos);
		if (nl == std::string_view::npos)
			nl = text.size();
		auto line = text.substr(pos, nl - pos);
		pos = nl + 1;
		++line_no;
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		auto toks = split_ws(line);
		if (toks.empty())
			continue;

		switch (stage) {
		case Stage::Name:
			if (toks[0] != "divide" || toks.size() != 2)
				throw Error(ErrorKind::Syntax, "expected 'divide <name>'", line_no);
			d.name = std::string(toks[1]);
			stage = Stage::Crossings;
			break;
		case Stage::Crossings:
			if (toks[0] != "crossings" || toks.size() != 2 || !parse_int(toks[1], d.crossings)
			    || d.crossings < 0)
				throw Error(ErrorKind::Syntax, "expected 'crossings <n>'", line_no);
			stage = Stage::Body;
			break;
		case Stage::Body:
			if (toks[0] == "branch") {
				if (toks.size() < 2 || (toks[1] != "interval:" && toks[1] != "circle:"))
					throw Error(ErrorKind::Syntax,
					    "expected 'branch interval:' or 'branch circle:'", line_no);
				Branch b;
				b.kind = toks[1] == "interval:" ? BranchKind::Interval : BranchKind::Circle;
				for (std::size_t i = 2; i < toks.size(); ++i)
					b.visits.push_back(parse_visit(toks[i], line_no));
				d.branches.push_back(std::move(b));
			} else if (toks[0] == "boundary:") {
				for (std::size_t i = 1; i < toks.size(); ++i)
					d.boundary.push_back(parse_stub(toks[i], line_no));
				stage = Stage::Done;
			} else {
				throw Error(ErrorKind::Syntax, "unexpected '" + std::string(toks[0]) + "'", line_no);
			}
			break;
		case Stage::Done:
			throw Error(ErrorKind::Syntax, "content after boundary line", line_no);
		}
	}
	if (stage == Stage::Name || stage == Stage::Crossings)
		throw Error(ErrorKind::Syntax, "truncated header", line_no);
	validate_structure(d);
	return d;
}

std::string write_divide(const DivideMap& d)
{
	std::ostringstream out;
	out << "divide " << (d.name.empty() ? "unnamed" : d.name) << '\n';
	out << "crossings " << d.crossings << '\n';
	for (const auto& b : d.branches) {
		out << "branch " << (b.kind == BranchKind::Interval ? "interval:" : "circle:");
		for (const auto& v : b.visits)
			out << ' ' << v.crossing << '.' << v.slot;
		out << '\n';
	}
	if (!d.boundary.empty()) {
		out << "boundary:";
		for (const auto& s : d.boundary)
			out << " b" << s.branch << (s.start ? ".start" : ".end");
		out << '\n';
	}
	return out.str();
}

} // namespace divides
