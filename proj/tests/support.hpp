#pragma once

#include <divides/analysis.hpp>
#include <divides/divide.hpp>
#include <divides/matrix.hpp>
#include <divides/polynomial.hpp>

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace test_support {

inline std::string data_path(const std::string& name)
{
	return std::string(DIVIDES_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline divides::DivideMap fixture(const std::string& name)
{
	return divides::parse_divide(slurp(data_path(name + ".div")));
}

inline divides::DivideAnalysis analyzed(const std::string& name, bool flip = false)
{
	return divides::analyze(fixture(name), flip);
}

// Companion matrix of a monic polynomial: ones on the subdiagonal, negated
// coefficients in the last column.
inline divides::IntegerMatrix companion(const divides::Polynomial& p)
{
	const auto n = static_cast<std::size_t>(p.degree());
	divides::IntegerMatrix c(n, n);
	for (std::size_t i = 1; i < n; ++i)
		c(i, i - 1) = 1;
	for (std::size_t i = 0; i < n; ++i)
		c(i, n - 1) = -p.coeff(static_cast<int>(i)).get_num();
	return c;
}

// Product of random elementary integer row operations; determinant is 1.
inline divides::IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps)
{
	auto u = divides::IntegerMatrix::identity(n);
	if (n < 2)
		return u;
	std::uniform_int_distribution<std::size_t> index(0, n - 1);
	std::uniform_int_distribution<int> factor(-2, 2);
	for (int s = 0; s < steps; ++s) {
		const auto i = index(rng);
		auto j = index(rng);
		if (i == j)
			j = (j + 1) % n;
		const int k = factor(rng);
		for (std::size_t col = 0; col < n; ++col)
			u(i, col) += k * u(j, col);
	}
	return u;
}

// Inverse of a unimodular matrix, as the adjugate up to the sign of det = 1.
divides::IntegerMatrix unimodular_inverse(const divides::IntegerMatrix& u);

struct QuasiUnipotentSample {
	divides::IntegerMatrix matrix;
	std::vector<std::pair<long, int>> blocks; // (n, power) per companion block
};

// Block-diagonal companion(Phi_n^k) blocks of total dimension <= max_dim,
// conjugated by a random unimodular matrix.
QuasiUnipotentSample random_quasi_unipotent(std::mt19937_64& rng, std::size_t max_dim);

} // namespace test_support
