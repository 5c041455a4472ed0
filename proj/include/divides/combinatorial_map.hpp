#pragma once

#include <divides/divide.hpp>

#include <vector>

namespace divides {

/// Capped rotation system of a divide. Darts 0..4n-1 are crossing germs
/// (4*(c-1) + slot); darts 4n.. are boundary stubs in boundary order, all
/// incident to one auxiliary vertex standing in for the outside of the disk.
/// Faces are the orbits of d -> next_ccw[twin[d]]; the orbit of d is the
/// face on the right of d.
struct CombinatorialMap {
	int crossings = 0;
	bool has_boundary_vertex = false;
	std::vector<int> twin;
	std::vector<int> next_ccw;
	std::vector<int> vertex;     // crossing c -> c-1, boundary vertex -> crossings
	std::vector<bool> outgoing;  // branch traversal leaves its vertex along this dart
	/// Without boundary stubs: a dart whose right face is the outer face.
	int outer_dart = -1;

	int dart_count() const { return static_cast<int>(twin.size()); }
	int edge_count() const { return dart_count() / 2; }
	int vertex_count() const { return crossings + (has_boundary_vertex ? 1 : 0); }
	bool is_boundary_dart(int d) const { return d >= 4 * crossings; }
	int face_step(int d) const { return next_ccw[twin[d]]; }

	/// Same map seen in a mirror: all rotations reversed.
	CombinatorialMap mirrored() const;
	/// True when the map is connected as a graph.
	bool connected() const;
	/// Face index per dart, faces numbered in order of their smallest dart.
	std::vector<int> trace_faces(int* face_count = nullptr) const;
};

inline int crossing_dart(int crossing, int slot) { return 4 * (crossing - 1) + slot; }

CombinatorialMap build_map(const DivideMap& d);

} // namespace divides
