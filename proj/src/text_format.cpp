#include <divides/error.hpp>
#include <divides/text_format.hpp>

#include <sstream>

namespace divides {

namespace {

template <class T>
std::string write_any(const Matrix<T>& m)
{
	std::ostringstream out;
	out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
	for (std::size_t i = 0; i < m.rows(); ++i) {
		for (std::size_t j = 0; j < m.cols(); ++j) {
			if (j)
				out << ' ';
			out << m(i, j).get_str();
		}
		out << '\n';
	}
	return out.str();
}

} // namespace

std::string write_matrix(const IntegerMatrix& m) { return write_any(m); }
std::string write_matrix(const RationalMatrix& m) { return write_any(m); }

RationalMatrix parse_matrix(std::string_view text)
{
	std::string cleaned;
	cleaned.reserve(text.size());
	bool comment = false;
	for (char c : text) {
		if (c == '#')
			comment = true;
		if (c == '\n')
			comment = false;
		if (!comment)
			cleaned += c;
	}
	std::istringstream in(cleaned);
	std::string word;
	long rows = -1, cols = -1;
	if (!(in >> word) || word != "matrix" || !(in >> rows >> cols) || rows < 0 || cols < 0)
		throw Error(ErrorKind::Syntax, "expected 'matrix <rows> <cols>'");
	RationalMatrix m(rows, cols);
	for (long i = 0; i < rows; ++i)
		for (long j = 0; j < cols; ++j) {
			std::string tok;
			if (!(in >> tok))
				throw Error(ErrorKind::Syntax, "matrix has fewer than " + std::to_string(rows * cols)
				    + " entries");
			Rational q;
			if (q.set_str(tok, 10) != 0 || q.get_den() == 0)
				throw Error(ErrorKind::Syntax, "bad matrix entry '" + tok + "'");
			q.canonicalize();
			m(i, j) = q;
		}
	return m;
}

} // namespace divides
