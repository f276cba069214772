#include "symca/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace symca::random {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

MultiValuedVariable random_variable(std::mt19937_64& rng, int m, const SurveyShape& shape, const std::string& prefix) {
  const int q = uniform(rng, shape.min_modalities, shape.max_modalities);
  std::vector<std::string> labels;
  for (int j = 0; j < q; ++j) labels.push_back(prefix + std::to_string(j));
  std::vector<int> pool(static_cast<std::size_t>(q));
  std::vector<std::vector<int>> obs;
  for (int i = 0; i < m; ++i) {
    const int size = uniform(rng, 1, std::min(shape.max_set_size, q));
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < size; ++k) std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(uniform(rng, k, q - 1))]);
    obs.emplace_back(pool.begin(), pool.begin() + size);
  }
  return MultiValuedVariable(prefix, std::move(labels), std::move(obs));
}

bool positive_margins(const CountMatrix& upper) {
  return (upper.rowwise().sum().array() > 0).all() && (upper.colwise().sum().array() > 0).all();
}

IntervalTable labelled(CountMatrix lower, CountMatrix upper) {
  std::vector<std::string> rows, cols;
  for (Eigen::Index i = 0; i < lower.rows(); ++i) rows.push_back("r" + std::to_string(i));
  for (Eigen::Index j = 0; j < lower.cols(); ++j) cols.push_back("c" + std::to_string(j));
  return IntervalTable(std::move(rows), std::move(cols), std::move(lower), std::move(upper));
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t suite, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(base) ^ suite) ^ index);
}

std::pair<MultiValuedVariable, MultiValuedVariable> survey(std::uint64_t seed, const SurveyShape& shape) {
  std::mt19937_64 rng(seed);
  const int m = uniform(rng, 1, shape.max_individuals);
  auto x = random_variable(rng, m, shape, "x");
  auto y = random_variable(rng, m, shape, "y");
  return {std::move(x), std::move(y)};
}

IntervalTable interval_table(std::uint64_t seed, const TableShape& shape) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution degenerate(shape.degenerate_cell_rate);
  const int n = uniform(rng, shape.min_dim, shape.max_dim);
  const int p = uniform(rng, shape.min_dim, shape.max_dim);
  for (;;) {
    CountMatrix lower(n, p), upper(n, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < p; ++j) {
        lower(i, j) = uniform(rng, 0, shape.max_lower);
        upper(i, j) = lower(i, j) + (degenerate(rng) ? 0 : uniform(rng, 1, shape.max_width));
      }
    if (positive_margins(upper)) return labelled(std::move(lower), std::move(upper));
  }
}

IntervalTable degenerate_table(std::uint64_t seed, const TableShape& shape) {
  std::mt19937_64 rng(seed);
  const int n = uniform(rng, shape.min_dim, shape.max_dim);
  const int p = uniform(rng, shape.min_dim, shape.max_dim);
  for (;;) {
    CountMatrix counts(n, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < p; ++j) counts(i, j) = uniform(rng, 0, shape.max_lower);
    if (positive_margins(counts)) return labelled(counts, counts);
  }
}

}  // namespace symca::random
