#include "support.hpp"

#include <divides/linalg.hpp>

namespace test_support {

divides::IntegerMatrix unimodular_inverse(const divides::IntegerMatrix& u)
{
	return divides::adjugate(u);
}

QuasiUnipotentSample random_quasi_unipotent(std::mt19937_64& rng, std::size_t max_dim)
{
	// orders whose cyclotomic polynomial has degree <= 6
	static const long orders[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
	std::uniform_int_distribution<std::size_t> pick(0, std::size(orders) - 1);
	std::uniform_int_distribution<int> power(1, 3);
	std::uniform_int_distribution<std::size_t> target(1, max_dim);

	const std::size_t want = target(rng);
	QuasiUnipotentSample sample;
	std::vector<divides::IntegerMatrix> blocks;
	std::size_t dim = 0;
	for (int attempt = 0; attempt < 64 && dim < want; ++attempt) {
		const long n = orders[pick(rng)];
		const int k = power(rng);
		const auto phi = divides::cyclotomic(n);
		const auto d = static_cast<std::size_t>(phi.degree() * k);
		if (dim + d > want)
			continue;
		blocks.push_back(companion(divides::pow(phi, static_cast<unsigned>(k))));
		sample.blocks.emplace_back(n, k);
		dim += d;
	}
	if (blocks.empty()) {
		blocks.push_back(companion(divides::cyclotomic(2)));
		sample.blocks.emplace_back(2, 1);
		dim = 1;
	}
	const auto m = divides::block_diagonal(blocks);
	const auto u = random_unimodular(dim, rng, static_cast<int>(3 * dim));
	sample.matrix = u * m * unimodular_inverse(u);
	return sample;
}

} // namespace test_support
