#include <divides/error.hpp>
#include <divides/homology.hpp>
#include <divides/linalg.hpp>

#include <sstream>

namespace divides {

BasisOrdering BasisOrdering::from(const AdjacencyBlocks& blocks)
{
	BasisOrdering o;
	o.plus_end = blocks.mu_plus();
	o.zero_begin = o.plus_end;
	o.zero_end = o.zero_begin + blocks.mu_zero();
	o.minus_begin = o.zero_end;
	o.minus_end = o.minus_begin + blocks.mu_minus();
	return o;
}

namespace {

IntegerMatrix assemble(const AdjacencyBlocks& blk, int middle_sign)
{
	const auto o = BasisOrdering::from(blk);
	IntegerMatrix m = IntegerMatrix::identity(o.size());
	for (std::size_t i = o.zero_begin; i < o.zero_end; ++i)
		m(i, i) = middle_sign;
	m.set_block(o.plus_begin, o.zero_begin, blk.A);
	m.set_block(o.plus_begin, o.minus_begin, blk.G);
	m.set_block(o.zero_begin, o.minus_begin, Integer(middle_sign) * blk.B);
	return m;
}

bool unit_upper_triangular(const IntegerMatrix& s)
{
	if (!s.is_square())
		return false;
	for (std::size_t i = 0; i < s.rows(); ++i)
		for (std::size_t j = 0; j <= i; ++j)
			if (s(i, j) != (i == j ? 1 : 0))
				return false;
	return true;
}

/// Solves L X = R for unit lower triangular L, exactly over Z.
IntegerMatrix forward_substitute(const IntegerMatrix& l, const IntegerMatrix& r)
{
	IntegerMatrix x = r;
	for (std::size_t i = 0; i < l.rows(); ++i)
		for (std::size_t k = 0; k < i; ++k) {
			if (sgn(l(i, k)) == 0)
				continue;
			for (std::size_t j = 0; j < x.cols(); ++j)
				x(i, j) -= l(i, k) * x(k, j);
		}
	return x;
}

/// Solves U X = R for unit upper triangular U, exactly over Z.
IntegerMatrix back_substitute(const IntegerMatrix& u, const IntegerMatrix& r)
{
	IntegerMatrix x = r;
	for (std::size_t i = u.rows(); i-- > 0;)
		for (std::size_t k = i + 1; k < u.rows(); ++k) {
			if (sgn(u(i, k)) == 0)
				continue;
			for (std::size_t j = 0; j < x.cols(); ++j)
				x(i, j) -= u(i, k) * x(k, j);
		}
	return x;
}

} // namespace

IntegerMatrix seifert_matrix(const AdjacencyBlocks& blocks) { return assemble(blocks, 1); }

IntegerMatrix monodromy_matrix(const IntegerMatrix& s)
{
	if (!unit_upper_triangular(s))
		throw Error(ErrorKind::NotUnimodular, "Seifert matrix must be unit upper triangular");
	return forward_substitute(s.transpose(), s);
}

IntegerMatrix monodromy_inverse(const IntegerMatrix& s)
{
	if (!unit_upper_triangular(s))
		throw Error(ErrorKind::NotUnimodular, "Seifert matrix must be unit upper triangular");
	return back_substitute(s, s.transpose());
}

IntegerMatrix conjugation_matrix(const AdjacencyBlocks& blocks)
{
	IntegerMatrix c = assemble(blocks, -1);
	if (!(c * c).is_identity())
		throw Error(ErrorKind::Involution, "C^2 != Id; blocks violate 2G = AB");
	return c;
}

IntegerMatrix transgradient_form(const AdjacencyBlocks& blk)
{
	const auto o = BasisOrdering::from(blk);
	IntegerMatrix m = IntegerMatrix::identity(o.size());
	for (std::size_t i = o.zero_begin; i < o.zero_end; ++i)
		m(i, i) = -1;
	m.set_block(o.zero_begin, o.plus_begin, -blk.A.transpose());
	m.set_block(o.minus_begin, o.plus_begin, blk.G.transpose());
	m.set_block(o.minus_begin, o.zero_begin, blk.B.transpose());
	return m;
}

IntegerMatrix involution_product(const IntegerMatrix& t, const IntegerMatrix& c,
    const AdjacencyBlocks& blocks)
{
	IntegerMatrix tc = t * c;
	if (tc != transgradient_form(blocks))
		throw Error(ErrorKind::BlockMismatch, "T C differs from the transgradient block form");
	if (!(tc * tc).is_identity())
		throw Error(ErrorKind::BlockMismatch, "(T C)^2 != Id");
	return tc;
}

std::vector<Integer> conjugation_action(std::size_t i, const AdjacencyBlocks& blk,
    const BasisOrdering& o)
{
	if (i < 1 || i > o.size())
		throw Error(ErrorKind::IndexOutOfRange, "cycle index " + std::to_string(i)
		    + " outside 1.." + std::to_string(o.size()));
	const std::size_t k = i - 1;
	std::vector<Integer> v(o.size(), Integer(0));
	if (k < o.plus_end) {
		v[k] = 1;
	} else if (k < o.zero_end) {
		// -delta_i + sum_j <N delta_j, delta_i> delta_j over maxima j
		v[k] = -1;
		for (std::size_t j = 0; j < blk.mu_plus(); ++j)
			v[o.plus_begin + j] = blk.A(j, k - o.zero_begin);
	} else {
		const std::size_t col = k - o.minus_begin;
		v[k] = 1;
		for (std::size_t j = 0; j < blk.mu_plus(); ++j)
			v[o.plus_begin + j] = blk.G(j, col);
		for (std::size_t j = 0; j < blk.mu_zero(); ++j)
			v[o.zero_begin + j] = -blk.B(j, col);
	}
	return v;
}

bool IdentityReport::all_passed() const
{
	for (const auto& c : checks)
		if (!c.passed)
			return false;
	return true;
}

std::string IdentityReport::to_string() const
{
	std::ostringstream out;
	for (const auto& c : checks)
		out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
	return out.str();
}

IdentityReport verify_identities(const DivideAnalysis& a)
{
	const auto& blk = a.blocks;
	const auto& st = a.stats;
	const IntegerMatrix s = seifert_matrix(blk);
	const IntegerMatrix t = monodromy_matrix(s);
	const IntegerMatrix t_inv = monodromy_inverse(s);
	const IntegerMatrix c = assemble(blk, -1);
	const IntegerMatrix tc = t * c;
	const Integer trace = c.trace();

	IdentityReport r;
	r.checks.push_back({"C^2 = Id", (c * c).is_identity()});
	r.checks.push_back({"(TC)^2 = Id", (tc * tc).is_identity()});
	r.checks.push_back({"C T C = T^-1", c * t * c == t_inv && (t * t_inv).is_identity()});
	r.checks.push_back({"T = (TC) C", tc * c == t});
	r.checks.push_back({"2G = A B", blk.A * blk.B == Integer(2) * blk.G});
	r.checks.push_back({"TC = transgradient block form", tc == transgradient_form(blk)});
	r.checks.push_back({"Trace C = mu+ - mu0 + mu-",
	    trace == st.mu_plus - st.mu_zero + st.mu_minus});
	r.checks.push_back({"mu = 2 delta + Trace C", Integer(st.mu) == 2 * st.delta + trace});
	return r;
}

FiberInvariants fiber_invariants(const DivideStats& st)
{
	if (!st.connected)
		throw Error(ErrorKind::InvalidArgument, "fiber invariants need a connected divide");
	if ((st.mu + 1 - st.r) % 2 != 0)
		throw Error(ErrorKind::Parity, "mu + 1 - r = " + std::to_string(st.mu + 1 - st.r) + " is odd");
	FiberInvariants f;
	f.b1 = st.mu;
	f.r = st.r;
	f.euler = 1 - st.mu;
	f.genus = (1 + st.mu - st.r) / 2;
	return f;
}

} // namespace divides
