#include "support.hpp"

#include <divides/render.hpp>

#include <doctest.h>

#include <cmath>

using namespace divides;
using test_support::analyzed;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle)
{
	std::size_t n = 0;
	for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
		++n;
	return n;
}

} // namespace

TEST_CASE("shaded regions and crossing marks")
{
	auto loop = render_svg(analyzed("loop1"));
	CHECK(occurrences(loop, "class=\"region plus\"") == 1);
	CHECK(occurrences(loop, "class=\"region minus\"") == 0);
	CHECK(occurrences(loop, "class=\"crossing\"") == 1);
	CHECK(occurrences(loop, "class=\"edge\"") == 3);
	CHECK(occurrences(loop, "class=\"disk\"") == 1);

	auto quad = render_svg(analyzed("quad4"));
	CHECK(occurrences(quad, "class=\"region plus\"") == 1);
	CHECK(occurrences(quad, "class=\"region minus\"") == 4);
	CHECK(occurrences(quad, "class=\"crossing\"") == 4);

	auto arc = render_svg(analyzed("arc0"));
	CHECK(occurrences(arc, "class=\"region") == 0);
	CHECK(occurrences(arc, "class=\"edge\"") == 1);
	CHECK(occurrences(arc, "class=\"crossing\"") == 0);
}

TEST_CASE("rendering is byte-for-byte deterministic")
{
	auto a = analyzed("e8");
	CHECK(render_svg(a) == render_svg(a));
}

TEST_CASE("layout keeps everything in the disk and stubs on its boundary")
{
	for (const char* name : {"loop1", "quad4", "e8", "cross2"}) {
		CAPTURE(name);
		auto lay = compute_layout(analyzed(name));
		for (const auto& s : lay.stub)
			CHECK(std::hypot(s.x, s.y) == doctest::Approx(1.0));
		for (const auto& c : lay.crossing)
			CHECK(std::hypot(c.x, c.y) <= 1.0 + 1e-9);
		// crossings are pairwise separated
		for (std::size_t i = 0; i < lay.crossing.size(); ++i)
			for (std::size_t j = i + 1; j < lay.crossing.size(); ++j)
				CHECK(std::hypot(lay.crossing[i].x - lay.crossing[j].x, lay.crossing[i].y - lay.crossing[j].y)
				      > 1e-3);
	}
}

TEST_CASE("stubs are equally spaced")
{
	auto lay = compute_layout(analyzed("cross2"));
	REQUIRE(lay.stub.size() == 4);
	for (std::size_t i = 0; i < 4; ++i) {
		const auto& p = lay.stub[i];
		const auto& q = lay.stub[(i + 1) % 4];
		CHECK(std::hypot(p.x - q.x, p.y - q.y) == doctest::Approx(std::sqrt(2.0)));
	}
}
