#include <divides/analysis.hpp>
#include <divides/canonical.hpp>
#include <divides/error.hpp>

#include <cstdio>
#include <sstream>

namespace divides {

Symmetries Symmetries::parse(const std::string& text)
{
	Symmetries s = none();
	std::stringstream in(text);
	std::string tok;
	while (std::getline(in, tok, ',')) {
		if (tok == "rev" || tok == "reversal")
			s.reversal = true;
		else if (tok == "refl" || tok == "reflection")
			s.reflection = true;
		else if (tok == "none" || tok.empty())
			continue;
		else
			throw Error(ErrorKind::InvalidArgument, "unknown symmetry '" + tok + "'");
	}
	return s;
}

std::string Symmetries::to_string() const
{
	if (reversal && reflection)
		return "rev,refl";
	if (reversal)
		return "rev";
	if (reflection)
		return "refl";
	return "none";
}

namespace {

/// Breadth-first relabeling of the map from `root`; vertices are numbered in
/// discovery order and darts around a vertex counted from its entry dart.
std::vector<int> rooted_code(const CombinatorialMap& m, const std::vector<int>& outer_flag,
    int root, bool with_direction)
{
	const int nd = m.dart_count();
	const int nv = m.vertex_count();
	std::vector<int> number(nv, -1), entry(nv, -1);
	std::vector<int> order;
	order.reserve(nv);
	auto discover = [&](int dart) {
		int v = m.vertex[dart];
		number[v] = static_cast<int>(order.size());
		entry[v] = dart;
		order.push_back(v);
	};
	auto position = [&](int dart) {
		int p = 0;
		for (int y = entry[m.vertex[dart]]; y != dart; y = m.next_ccw[y])
			++p;
		return p;
	};

	std::vector<int> code;
	code.reserve(4 * nd + 2 * nv);
	discover(root);
	for (std::size_t i = 0; i < order.size(); ++i) {
		int v = order[i];
		int degree = 0;
		for (int y = m.next_ccw[entry[v]];; y = m.next_ccw[y]) {
			++degree;
			if (y == entry[v])
				break;
		}
		code.push_back(v == m.crossings ? 1 : 0);
		code.push_back(degree);
		int x = entry[v];
		do {
			int t = m.twin[x];
			if (number[m.vertex[t]] < 0)
				discover(t);
			code.push_back(number[m.vertex[t]]);
			code.push_back(position(t));
			if (with_direction)
				code.push_back(m.outgoing[x] ? 1 : 0);
			if (!outer_flag.empty())
				code.push_back(outer_flag[x]);
			x = m.next_ccw[x];
		} while (x != entry[v]);
	}
	(void)nd;
	return code;
}

std::vector<int> best_code(const CombinatorialMap& m, bool with_direction)
{
	std::vector<int> outer_flag;
	if (!m.has_boundary_vertex) {
		auto face = m.trace_faces();
		outer_flag.resize(m.dart_count());
		for (int x = 0; x < m.dart_count(); ++x)
			outer_flag[x] = face[x] == face[m.outer_dart] ? 1 : 0;
	}
	std::vector<int> best;
	for (int root = 0; root < m.dart_count(); ++root) {
		// the boundary vertex, when present, is always discovered first
		if (m.has_boundary_vertex && !m.is_boundary_dart(root))
			continue;
		auto c = rooted_code(m, outer_flag, root, with_direction);
		if (best.empty() || c < best)
			best = std::move(c);
	}
	return best;
}

} // namespace

std::string canonical_code(const DivideMap& d, Symmetries sym)
{
	FaceSet fs = validate_planarity(d);
	const bool with_direction = !sym.reversal;
	auto code = best_code(fs.map, with_direction);
	if (sym.reflection) {
		auto mirror = best_code(fs.map.mirrored(), with_direction);
		if (mirror < code)
			code = std::move(mirror);
	}
	std::string out;
	out.reserve(3 * code.size());
	for (std::size_t i = 0; i < code.size(); ++i) {
		if (i)
			out += '.';
		out += std::to_string(code[i]);
	}
	return out;
}

std::string code_hash(const std::string& code)
{
	std::uint64_t h = 14695981039346656037ull;
	for (unsigned char c : code) {
		h ^= c;
		h *= 1099511628211ull;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

} // namespace divides
