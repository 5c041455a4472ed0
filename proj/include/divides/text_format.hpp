#pragma once

#include <divides/matrix.hpp>

#include <string>
#include <string_view>

namespace divides {

/// `matrix <rows> <cols>` followed by one line per row, entries separated by
/// single spaces. Rationals print as p/q.
std::string write_matrix(const IntegerMatrix& m);
std::string write_matrix(const RationalMatrix& m);

/// Parses the first matrix in `text`; entries may be integers or p/q.
/// Throws Error(Syntax).
RationalMatrix parse_matrix(std::string_view text);

} // namespace divides
