#include <divides/render.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace divides {

namespace {

struct Graph {
	std::vector<Point> pos;
	std::vector<bool> fixed;
	std::vector<std::vector<int>> adj;

	int add(Point p = {}, bool is_fixed = false)
	{
		pos.push_back(p);
		fixed.push_back(is_fixed);
		adj.emplace_back();
		return static_cast<int>(pos.size()) - 1;
	}
	void link(int a, int b)
	{
		adj[a].push_back(b);
		adj[b].push_back(a);
	}
	void relax()
	{
		for (int it = 0; it < 20000; ++it) {
			double change = 0;
			for (std::size_t v = 0; v < pos.size(); ++v) {
				if (fixed[v] || adj[v].empty())
					continue;
				Point s;
				for (int w : adj[v]) {
					s.x += pos[w].x;
					s.y += pos[w].y;
				}
				s.x /= static_cast<double>(adj[v].size());
				s.y /= static_cast<double>(adj[v].size());
				change = std::max(change, std::abs(s.x - pos[v].x) + std::abs(s.y - pos[v].y));
				pos[v] = s;
			}
			if (change < 1e-13)
				break;
		}
	}

	// Fruchterman-Reingold refinement started from the barycentric layout,
	// which separates nodes that Tutte's method merges (loops, pendant parts).
	void spread(int iterations = 400)
	{
		const std::size_t n = pos.size();
		if (n < 2)
			return;
		const double k = 0.9 * std::sqrt(std::numbers::pi / static_cast<double>(n));
		std::vector<Point> disp(n);
		for (int it = 0; it < iterations; ++it) {
			const double temp = 0.05 * (1.0 - static_cast<double>(it) / iterations);
			std::fill(disp.begin(), disp.end(), Point{});
			for (std::size_t v = 0; v < n; ++v)
				for (std::size_t w = v + 1; w < n; ++w) {
					double dx = pos[v].x - pos[w].x, dy = pos[v].y - pos[w].y;
					double d2 = dx * dx + dy * dy;
					if (d2 < 1e-12) {
						// coincident nodes: split along a fixed direction
						dx = 1e-3 * static_cast<double>(w - v);
						dy = 1e-3;
						d2 = dx * dx + dy * dy;
					}
					const double f = k * k / d2;
					disp[v].x += dx * f, disp[v].y += dy * f;
					disp[w].x -= dx * f, disp[w].y -= dy * f;
				}
			for (std::size_t v = 0; v < n; ++v)
				for (int w : adj[v]) {
					const double dx = pos[v].x - pos[w].x, dy = pos[v].y - pos[w].y;
					const double d = std::sqrt(dx * dx + dy * dy);
					disp[v].x -= dx * d / k, disp[v].y -= dy * d / k;
				}
			for (std::size_t v = 0; v < n; ++v) {
				if (fixed[v])
					continue;
				const double len = std::hypot(disp[v].x, disp[v].y);
				if (len < 1e-15)
					continue;
				const double step = std::min(len, temp);
				pos[v].x += disp[v].x / len * step;
				pos[v].y += disp[v].y / len * step;
				const double r = std::hypot(pos[v].x, pos[v].y);
				if (r > 0.97)
					pos[v].x *= 0.97 / r, pos[v].y *= 0.97 / r;
			}
		}
	}
};

Point on_circle(double angle) { return {std::cos(angle), std::sin(angle)}; }

} // namespace

Layout compute_layout(const DivideAnalysis& a)
{
	const auto& fs = a.faces;
	const auto& m = fs.map;
	const int nd = m.dart_count();
	const int k = static_cast<int>(a.divide.boundary.size());
	constexpr double pi = std::numbers::pi;

	Graph g;
	std::vector<int> cross(a.divide.crossings);
	for (auto& c : cross)
		c = g.add();
	std::vector<int> stub(k);
	for (int i = 0; i < k; ++i)
		stub[i] = g.add(on_circle(pi + 2 * pi * i / k), true);

	auto endpoint = [&](int x) {
		return m.is_boundary_dart(x) ? stub[x - 4 * m.crossings] : cross[m.vertex[x]];
	};
	// near[x]: subdivision node of x's edge closest to x's vertex
	std::vector<int> near(nd, -1);
	for (int x = 0; x < nd; ++x) {
		int y = m.twin[x];
		if (y < x)
			continue;
		near[x] = g.add();
		near[y] = g.add();
		g.link(endpoint(x), near[x]);
		g.link(near[x], near[y]);
		g.link(near[y], endpoint(y));
	}

	const int nf = fs.face_count();
	int outer = -1;
	if (!m.has_boundary_vertex && nf > 0)
		outer = fs.face_of_dart[m.outer_dart];

	if (outer >= 0) {
		// no stubs: pin the outer face to the circle
		std::vector<int> ring;
		for (int x : fs.faces[outer].darts)
			for (int v : {endpoint(x), near[x], near[m.twin[x]]})
				if (std::find(ring.begin(), ring.end(), v) == ring.end())
					ring.push_back(v);
		for (std::size_t i = 0; i < ring.size(); ++i) {
			// face walks keep the face on the right, so go clockwise
			g.pos[ring[i]] = on_circle(pi / 2 - 2 * pi * static_cast<double>(i) / ring.size());
			g.fixed[ring[i]] = true;
		}
	}

	std::vector<int> center(nf, -1);
	for (int f = 0; f < nf; ++f) {
		if (f == outer)
			continue;
		center[f] = g.add();
		for (int x : fs.faces[f].darts) {
			g.link(center[f], endpoint(x));
			g.link(center[f], near[x]);
		}
	}
	// arcs of the disk boundary between consecutive stubs
	for (int i = 0; i < k; ++i)
		for (double t : {0.25, 0.5, 0.75}) {
			int anchor = g.add(on_circle(pi + 2 * pi * (i + t) / k), true);
			g.link(center[fs.face_of_dart[4 * m.crossings + i]], anchor);
		}

	g.relax();
	g.spread();

	Layout out;
	for (int c : cross)
		out.crossing.push_back(g.pos[c]);
	for (int s : stub)
		out.stub.push_back(g.pos[s]);
	for (int x = 0; x < nd; ++x)
		if (m.twin[x] > x)
			out.edge.push_back({g.pos[near[x]], g.pos[near[m.twin[x]]]});
	for (int f = 0; f < nf; ++f) {
		out.face_center.push_back(center[f] >= 0 ? g.pos[center[f]] : Point{});
		std::vector<Point> outline;
		for (int x : fs.faces[f].darts) {
			outline.push_back(g.pos[endpoint(x)]);
			outline.push_back(g.pos[near[x]]);
			outline.push_back(g.pos[near[m.twin[x]]]);
		}
		out.face_outline.push_back(std::move(outline));
	}
	return out;
}

namespace {

std::string fmt(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
	return buf;
}

std::string pt(Point p) { return fmt(p.x) + "," + fmt(-p.y); }

} // namespace

std::string render_svg(const DivideAnalysis& a)
{
	const Layout lay = compute_layout(a);
	const auto& fs = a.faces;
	const auto& m = fs.map;

	std::ostringstream svg;
	svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\""
	       " width=\"440\" height=\"440\">\n";
	svg << "<title>" << a.divide.name << "</title>\n";
	svg << "<circle class=\"disk\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"white\" stroke=\"#444\""
	       " stroke-width=\"0.01\"/>\n";
	for (int f = 0; f < fs.face_count(); ++f) {
		if (!fs.faces[f].interior)
			continue;
		const bool plus = a.coloring.sign[f] > 0;
		svg << "<polygon class=\"region " << (plus ? "plus" : "minus") << "\" fill=\""
		    << (plus ? "#f4d58d" : "#5b6c8f") << "\" stroke=\"none\" points=\"";
		const auto& outline = lay.face_outline[f];
		for (std::size_t i = 0; i < outline.size(); ++i)
			svg << (i ? " " : "") << pt(outline[i]);
		svg << "\"/>\n";
	}
	std::size_t e = 0;
	for (int x = 0; x < m.dart_count(); ++x) {
		int y = m.twin[x];
		if (y < x)
			continue;
		auto end = [&](int d) {
			return m.is_boundary_dart(d) ? lay.stub[d - 4 * m.crossings] : lay.crossing[m.vertex[d]];
		};
		svg << "<polyline class=\"edge\" fill=\"none\" stroke=\"black\" stroke-width=\"0.015\""
		       " points=\""
		    << pt(end(x)) << ' ' << pt(lay.edge[e][0]) << ' ' << pt(lay.edge[e][1]) << ' ' << pt(end(y))
		    << "\"/>\n";
		++e;
	}
	for (const auto& c : lay.crossing)
		svg << "<circle class=\"crossing\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(-c.y)
		    << "\" r=\"0.025\" fill=\"#c0392b\"/>\n";
	svg << "</svg>\n";
	return svg.str();
}

} // namespace divides
