#include <divides/analysis.hpp>
#include <divides/error.hpp>

#include <algorithm>
#include <numeric>
#include <queue>

namespace divides {

int FaceSet::corner_face(int crossing, int slot) const
{
	// arriving along germ s the walk turns to germ s+1
	return face_of_dart[crossing_dart(crossing, (slot + 1) % 4)];
}

FaceSet validate_planarity(const DivideMap& d)
{
	FaceSet fs;
	fs.map = build_map(d);
	if (!fs.map.connected())
		throw Error(ErrorKind::Disconnected,
		    "divide together with the disk boundary is not connected; the embedding is not determined");

	int count = 0;
	std::vector<int> raw = fs.map.trace_faces(&count);
	// trace_faces numbers faces by smallest dart already
	fs.face_of_dart = raw;
	fs.faces.resize(count);
	for (int f = 0; f < count; ++f) {
		int start = static_cast<int>(std::find(raw.begin(), raw.end(), f) - raw.begin());
		auto& face = fs.faces[f];
		int x = start;
		do {
			face.darts.push_back(x);
			x = fs.map.face_step(x);
		} while (x != start);
		bool touches = false;
		if (fs.map.has_boundary_vertex)
			touches = std::any_of(face.darts.begin(), face.darts.end(),
			    [&](int y) { return fs.map.is_boundary_dart(y); });
		else
			touches = raw[fs.map.outer_dart] == f;
		face.interior = !touches;
	}

	const int chi = fs.euler_characteristic();
	if (chi != 2)
		throw Error(ErrorKind::NonPlanar, "capped map has Euler characteristic "
		    + std::to_string(chi) + " (genus " + std::to_string((2 - chi) / 2)
		    + "), the divide is not realizable in the disk");
	return fs;
}

std::vector<int> interior_regions(const FaceSet& fs)
{
	std::vector<int> out;
	for (int f = 0; f < fs.face_count(); ++f)
		if (fs.faces[f].interior)
			out.push_back(f);
	return out;
}

RegionColoring checkerboard(const DivideMap&, const FaceSet& fs, bool flip)
{
	RegionColoring col;
	const int nf = fs.face_count();
	col.sign.assign(nf, 0);
	auto regions = interior_regions(fs);
	const int seed = regions.empty() ? 0 : regions.front();
	if (nf == 0)
		return col;

	col.sign[seed] = 1;
	std::queue<int> todo;
	todo.push(seed);
	while (!todo.empty()) {
		int f = todo.front();
		todo.pop();
		for (int x : fs.faces[f].darts) {
			int g = fs.face_of_dart[fs.map.twin[x]];
			if (col.sign[g] == 0) {
				col.sign[g] = -col.sign[f];
				todo.push(g);
			} else if (col.sign[g] == col.sign[f]) {
				throw Error(ErrorKind::ColoringConflict,
				    "faces " + std::to_string(f) + " and " + std::to_string(g)
				        + " share an edge but cannot get opposite signs");
			}
		}
	}
	if (std::find(col.sign.begin(), col.sign.end(), 0) != col.sign.end())
		throw Error(ErrorKind::ColoringConflict, "face adjacency graph is disconnected");

	if (flip)
		for (auto& s : col.sign)
			s = -s;
	for (int f : regions)
		(col.sign[f] > 0 ? col.plus_regions : col.minus_regions).push_back(f);
	if (!regions.empty() && col.plus_regions.empty())
		throw Error(ErrorKind::NoPositiveRegion,
		    "sign choice leaves no positive region; at least one region must be positive");
	return col;
}

DivideStats stats(const DivideMap& d, const FaceSet&, const RegionColoring& col)
{
	DivideStats s;
	s.mu_plus = static_cast<int>(col.plus_regions.size());
	s.mu_minus = static_cast<int>(col.minus_regions.size());
	s.mu_zero = d.crossings;
	s.delta = d.crossings;
	s.mu = s.mu_plus + s.mu_zero + s.mu_minus;
	s.r = 2 * d.circle_count() + d.interval_count();

	// components of the curve itself, ignoring the disk boundary
	const int nb = static_cast<int>(d.branches.size());
	std::vector<int> parent(nb);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};
	std::vector<int> owner(d.crossings + 1, -1);
	for (int b = 0; b < nb; ++b)
		for (const auto& v : d.branches[b].visits) {
			if (owner[v.crossing] < 0)
				owner[v.crossing] = b;
			else
				parent[find(b)] = find(owner[v.crossing]);
		}
	int roots = 0;
	for (int b = 0; b < nb; ++b)
		roots += find(b) == b;
	s.connected = roots == 1;
	return s;
}

AdjacencyBlocks adjacency_blocks(const DivideMap& d, const FaceSet& fs, const RegionColoring& col)
{
	const int nf = fs.face_count();
	std::vector<int> plus_index(nf, -1), minus_index(nf, -1);
	for (std::size_t i = 0; i < col.plus_regions.size(); ++i)
		plus_index[col.plus_regions[i]] = static_cast<int>(i);
	for (std::size_t i = 0; i < col.minus_regions.size(); ++i)
		minus_index[col.minus_regions[i]] = static_cast<int>(i);

	AdjacencyBlocks blk;
	blk.A = IntegerMatrix(col.plus_regions.size(), d.crossings);
	blk.B = IntegerMatrix(d.crossings, col.minus_regions.size());
	blk.G = IntegerMatrix(col.plus_regions.size(), col.minus_regions.size());

	for (int c = 1; c <= d.crossings; ++c)
		for (int s = 0; s < 4; ++s) {
			int f = fs.corner_face(c, s);
			if (plus_index[f] >= 0)
				blk.A(plus_index[f], c - 1) += 1;
			else if (minus_index[f] >= 0)
				blk.B(c - 1, minus_index[f]) += 1;
		}
	for (int x = 0; x < fs.map.dart_count(); ++x) {
		int y = fs.map.twin[x];
		if (y < x)
			continue;
		int f = fs.face_of_dart[x], g = fs.face_of_dart[y];
		if (plus_index[f] >= 0 && minus_index[g] >= 0)
			blk.G(plus_index[f], minus_index[g]) += 1;
		else if (plus_index[g] >= 0 && minus_index[f] >= 0)
			blk.G(plus_index[g], minus_index[f]) += 1;
	}

	if (blk.A * blk.B != Integer(2) * blk.G)
		throw Error(ErrorKind::Inconsistency, "adjacency blocks violate 2G = AB");
	return blk;
}

DivideAnalysis analyze(const DivideMap& d, bool flip)
{
	validate_structure(d);
	DivideAnalysis a;
	a.divide = d;
	a.faces = validate_planarity(d);
	a.coloring = checkerboard(d, a.faces, flip);
	a.stats = stats(d, a.faces, a.coloring);
	a.blocks = adjacency_blocks(d, a.faces, a.coloring);
	return a;
}

} // namespace divides
