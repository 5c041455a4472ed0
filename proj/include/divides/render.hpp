#pragma once

#include <divides/analysis.hpp>

#include <array>
#include <string>
#include <vector>

namespace divides {

struct Point {
	double x = 0;
	double y = 0;
};

/// Barycentric (Tutte-style) positions. Every divide edge is subdivided
/// twice and every face gets a center node tied to its boundary; boundary
/// stubs sit equally spaced on the unit circle. A force-directed pass then
/// separates nodes the barycentric solve places on top of each other.
struct Layout {
	std::vector<Point> crossing;           // per crossing
	std::vector<std::array<Point, 2>> edge; // per dart x < twin(x): points near x, near twin(x)
	std::vector<Point> face_center;
	std::vector<Point> stub;               // per boundary stub
	std::vector<std::vector<Point>> face_outline;
};

Layout compute_layout(const DivideAnalysis& a);

/// SVG drawing: disk, regions shaded by sign, divide edges, crossing marks.
std::string render_svg(const DivideAnalysis& a);

} // namespace divides
