#pragma once

#include <divides/combinatorial_map.hpp>
#include <divides/divide.hpp>
#include <divides/matrix.hpp>

#include <vector>

namespace divides {

struct Face {
	std::vector<int> darts; // cyclic, starting at the smallest dart
	bool interior = false;  // does not touch the disk boundary
};

/// Faces of the capped map in canonical order (by smallest dart).
struct FaceSet {
	CombinatorialMap map;
	std::vector<Face> faces;
	std::vector<int> face_of_dart;

	int vertex_count() const { return map.vertex_count(); }
	int edge_count() const { return map.edge_count(); }
	int face_count() const { return static_cast<int>(faces.size()); }
	int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
	/// Face containing the corner between slot s and slot s+1 of a crossing.
	int corner_face(int crossing, int slot) const;
};

/// Traces faces and checks that the capped map is a sphere.
/// Throws Error(NonPlanar) when the Euler characteristic is not 2 and
/// Error(Disconnected) when the embedding is not determined.
FaceSet validate_planarity(const DivideMap& d);

/// Indices of interior faces, in canonical order.
std::vector<int> interior_regions(const FaceSet& fs);

struct RegionColoring {
	std::vector<int> sign;          // +1 / -1 per face
	std::vector<int> plus_regions;  // interior faces with sign +1
	std::vector<int> minus_regions; // interior faces with sign -1
};

/// Checkerboard signs: opposite across every divide edge. The canonically
/// first interior region is positive unless `flip` is set.
RegionColoring checkerboard(const DivideMap& d, const FaceSet& fs, bool flip = false);

struct DivideStats {
	int mu_plus = 0;
	int mu_zero = 0;
	int mu_minus = 0;
	int mu = 0;
	int delta = 0; // double points
	int r = 0;     // link components: 2 * circles + intervals
	bool connected = false;
};

DivideStats stats(const DivideMap& d, const FaceSet& fs, const RegionColoring& col);

/// A: mu+ x mu0 corner counts, B: mu0 x mu- corner counts,
/// G: mu+ x mu- shared edge counts. 2G = AB.
struct AdjacencyBlocks {
	IntegerMatrix A;
	IntegerMatrix B;
	IntegerMatrix G;

	std::size_t mu_plus() const { return A.rows(); }
	std::size_t mu_zero() const { return A.cols(); }
	std::size_t mu_minus() const { return B.cols(); }
};

/// Throws Error(Inconsistency) if 2G != AB.
AdjacencyBlocks adjacency_blocks(const DivideMap& d, const FaceSet& fs, const RegionColoring& col);

/// Everything derived from one divide.
struct DivideAnalysis {
	DivideMap divide;
	FaceSet faces;
	RegionColoring coloring;
	DivideStats stats;
	AdjacencyBlocks blocks;
};

DivideAnalysis analyze(const DivideMap& d, bool flip = false);

} // namespace divides
