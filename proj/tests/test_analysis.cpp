#include "support.hpp"

#include <divides/analysis.hpp>
#include <divides/error.hpp>

#include <doctest.h>

#include <numeric>

using namespace divides;
using test_support::analyzed;
using test_support::fixture;

namespace {

ErrorKind analysis_failure(const std::string& text, bool flip = false)
{
	try {
		analyze(parse_divide(text), flip);
	} catch (const Error& e) {
		return e.kind();
	}
	FAIL("analysis unexpectedly succeeded");
	return ErrorKind::Inconsistency;
}

long total(const IntegerMatrix& m)
{
	long s = 0;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			s += m(i, j).get_si();
	return s;
}

} // namespace

TEST_CASE("capped maps of the fixtures are spheres")
{
	auto loop = validate_planarity(fixture("loop1"));
	CHECK(loop.vertex_count() == 2);
	CHECK(loop.edge_count() == 3);
	CHECK(loop.face_count() == 3);
	CHECK(interior_regions(loop).size() == 1);

	auto arc = validate_planarity(fixture("arc0"));
	CHECK(arc.vertex_count() == 1);
	CHECK(arc.edge_count() == 1);
	CHECK(arc.face_count() == 2);
	CHECK(interior_regions(arc).empty());

	auto quad = validate_planarity(fixture("quad4"));
	CHECK(quad.vertex_count() == 4);
	CHECK(quad.edge_count() == 8);
	CHECK(quad.face_count() == 6);
	CHECK(interior_regions(quad).size() == 5);

	for (const char* name : {"loop1_mirror", "e8"})
		CHECK(validate_planarity(fixture(name)).euler_characteristic() == 2);
}

TEST_CASE("faces partition the darts")
{
	for (const char* name : {"loop1", "quad4", "e8"}) {
		auto fs = validate_planarity(fixture(name));
		std::vector<int> seen(fs.map.dart_count(), 0);
		for (std::size_t f = 0; f < fs.faces.size(); ++f)
			for (int x : fs.faces[f].darts) {
				++seen[x];
				CHECK(fs.face_of_dart[x] == static_cast<int>(f));
			}
		CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
		// faces are listed by smallest dart, each starting at it
		for (std::size_t f = 1; f < fs.faces.size(); ++f)
			CHECK(fs.faces[f - 1].darts.front() < fs.faces[f].darts.front());
	}
}

TEST_CASE("genus-one rotation systems are rejected")
{
	// interleaved Gauss word 1 2 1 2: every side choice lives on a torus
	for (const char* w : {"1.0 2.0 1.1 2.1", "1.0 2.0 1.3 2.1", "1.0 2.0 1.1 2.3", "1.0 2.0 1.3 2.3"}) {
		CAPTURE(w);
		CHECK(analysis_failure(std::string("divide t\ncrossings 2\nbranch interval: ") + w
		                       + "\nboundary: b1.start b1.end\n")
		      == ErrorKind::NonPlanar);
	}
}

TEST_CASE("components floating free of the boundary are rejected")
{
	CHECK(analysis_failure("divide d\ncrossings 1\nbranch interval:\nbranch circle: 1.0 1.1\n"
	                       "boundary: b1.start b1.end\n")
	      == ErrorKind::Disconnected);
}

TEST_CASE("checkerboard signs alternate across every edge")
{
	for (const char* name : {"loop1", "quad4", "e8", "arc0"}) {
		CAPTURE(name);
		auto a = analyzed(name);
		const auto& fs = a.faces;
		for (int x = 0; x < fs.map.dart_count(); ++x)
			CHECK(a.coloring.sign[fs.face_of_dart[x]] != a.coloring.sign[fs.face_of_dart[fs.map.twin[x]]]);
	}
}

TEST_CASE("opposite corners at a crossing share a sign")
{
	auto a = analyzed("e8");
	for (int c = 1; c <= a.divide.crossings; ++c) {
		CHECK(a.coloring.sign[a.faces.corner_face(c, 0)] == a.coloring.sign[a.faces.corner_face(c, 2)]);
		CHECK(a.coloring.sign[a.faces.corner_face(c, 1)] == a.coloring.sign[a.faces.corner_face(c, 3)]);
		CHECK(a.coloring.sign[a.faces.corner_face(c, 0)] != a.coloring.sign[a.faces.corner_face(c, 1)]);
	}
}

TEST_CASE("region counts and sign flip")
{
	auto q = analyzed("quad4");
	CHECK(q.stats.mu_plus == 1);
	CHECK(q.stats.mu_zero == 4);
	CHECK(q.stats.mu_minus == 4);
	CHECK(q.stats.mu == 9);
	CHECK(q.stats.delta == 4);
	CHECK(q.stats.r == 4);
	CHECK(q.stats.connected);

	auto flipped = analyzed("quad4", true);
	CHECK(flipped.stats.mu_plus == 4);
	CHECK(flipped.stats.mu_minus == 1);

	auto l = analyzed("loop1");
	CHECK(l.stats.mu_plus == 1);
	CHECK(l.stats.mu_zero == 1);
	CHECK(l.stats.mu_minus == 0);
	CHECK(l.stats.r == 1);

	auto e = analyzed("e8");
	CHECK(e.stats.mu == 8);
	CHECK(e.stats.mu_plus + e.stats.mu_minus == 4);

	auto arc = analyzed("arc0");
	CHECK(arc.stats.mu == 0);
	CHECK(arc.stats.r == 1);
}

TEST_CASE("a coloring with no positive region is refused")
{
	// loop1 has a single region; flipping makes it negative
	CHECK(analysis_failure(test_support::slurp(test_support::data_path("loop1.div")), true)
	      == ErrorKind::NoPositiveRegion);
}

TEST_CASE("adjacency blocks")
{
	auto q = analyzed("quad4");
	const auto& b = q.blocks;
	REQUIRE(b.A.rows() == 1);
	REQUIRE(b.A.cols() == 4);
	for (std::size_t j = 0; j < 4; ++j)
		CHECK(b.A(0, j) == 1);
	REQUIRE(b.B.rows() == 4);
	REQUIRE(b.B.cols() == 4);
	for (std::size_t i = 0; i < 4; ++i) {
		long row = 0;
		for (std::size_t j = 0; j < 4; ++j)
			row += b.B(i, j).get_si();
		CHECK(row == 2);
	}
	CHECK(b.A * b.B == Integer(2) * b.G);

	for (const char* name : {"loop1", "e8", "arc0"}) {
		auto a = analyzed(name);
		CHECK(a.blocks.A * a.blocks.B == Integer(2) * a.blocks.G);
		// every crossing has exactly one + corner pair and one - corner pair;
		// corners in boundary faces are the missing ones
		CHECK(total(a.blocks.A) <= 2 * a.stats.mu_zero);
		CHECK(total(a.blocks.B) <= 2 * a.stats.mu_zero);
	}
	// in quad4 only the + corner facing the outer face is missing
	CHECK(total(q.blocks.A) + total(q.blocks.B) == 3 * q.stats.mu_zero);
}
