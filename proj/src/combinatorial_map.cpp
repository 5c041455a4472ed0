#include <divides/combinatorial_map.hpp>
#include <divides/error.hpp>

#include <algorithm>
#include <numeric>

namespace divides {

CombinatorialMap build_map(const DivideMap& d)
{
	CombinatorialMap m;
	m.crossings = d.crossings;
	m.has_boundary_vertex = !d.boundary.empty();
	const int n_cross = 4 * d.crossings;
	const int n = n_cross + static_cast<int>(d.boundary.size());
	m.twin.assign(n, -1);
	m.next_ccw.assign(n, -1);
	m.vertex.assign(n, -1);
	m.outgoing.assign(n, false);

	for (int c = 1; c <= d.crossings; ++c)
		for (int s = 0; s < 4; ++s) {
			m.next_ccw[crossing_dart(c, s)] = crossing_dart(c, (s + 1) % 4);
			m.vertex[crossing_dart(c, s)] = c - 1;
		}
	// seen from outside the disk the boundary order is clockwise
	const int k = static_cast<int>(d.boundary.size());
	for (int i = 0; i < k; ++i) {
		m.next_ccw[n_cross + i] = n_cross + (i + k - 1) % k;
		m.vertex[n_cross + i] = d.crossings;
	}

	auto stub_dart = [&](int branch, bool start) {
		auto it = std::find(d.boundary.begin(), d.boundary.end(), Stub{branch, start});
		if (it == d.boundary.end())
			throw Error(ErrorKind::Stub, "missing stub for branch " + std::to_string(branch));
		return n_cross + static_cast<int>(it - d.boundary.begin());
	};
	auto link = [&](int a, int b) {
		if (m.twin[a] != -1 || m.twin[b] != -1)
			throw Error(ErrorKind::Slot, "germ used by two edges");
		m.twin[a] = b;
		m.twin[b] = a;
	};

	for (std::size_t bi = 0; bi < d.branches.size(); ++bi) {
		const auto& br = d.branches[bi];
		const int branch = static_cast<int>(bi) + 1;
		for (const auto& v : br.visits) {
			m.outgoing[crossing_dart(v.crossing, v.exit_slot())] = true;
		}
		if (br.kind == BranchKind::Interval) {
			int prev = stub_dart(branch, true);
			m.outgoing[prev] = true;
			for (const auto& v : br.visits) {
				link(prev, crossing_dart(v.crossing, v.slot));
				prev = crossing_dart(v.crossing, v.exit_slot());
			}
			link(prev, stub_dart(branch, false));
		} else {
			int prev = crossing_dart(br.visits.back().crossing, br.visits.back().exit_slot());
			for (const auto& v : br.visits) {
				link(prev, crossing_dart(v.crossing, v.slot));
				prev = crossing_dart(v.crossing, v.exit_slot());
			}
		}
	}
	if (std::find(m.twin.begin(), m.twin.end(), -1) != m.twin.end())
		throw Error(ErrorKind::Slot, "unused germ slot");

	if (!m.has_boundary_vertex) {
		const auto& first = d.branches.front().visits.front();
		m.outer_dart = crossing_dart(first.crossing, first.exit_slot());
	}
	return m;
}

CombinatorialMap CombinatorialMap::mirrored() const
{
	CombinatorialMap m = *this;
	for (int x = 0; x < dart_count(); ++x)
		m.next_ccw[next_ccw[x]] = x;
	// right of twin(x) in the original is right of x in the mirror
	if (outer_dart >= 0)
		m.outer_dart = twin[outer_dart];
	return m;
}

bool CombinatorialMap::connected() const
{
	const int nv = vertex_count();
	if (nv == 0)
		return true;
	std::vector<int> parent(nv);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};
	for (int x = 0; x < dart_count(); ++x)
		parent[find(vertex[x])] = find(vertex[twin[x]]);
	int roots = 0;
	for (int v = 0; v < nv; ++v)
		roots += find(v) == v;
	return roots == 1;
}

std::vector<int> CombinatorialMap::trace_faces(int* face_count) const
{
	std::vector<int> face(dart_count(), -1);
	int f = 0;
	for (int x = 0; x < dart_count(); ++x) {
		if (face[x] != -1)
			continue;
		for (int y = x; face[y] == -1; y = face_step(y))
			face[y] = f;
		++f;
	}
	if (face_count)
		*face_count = f;
	return face;
}

} // namespace divides
