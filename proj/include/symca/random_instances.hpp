#ifndef SYMCA_RANDOM_INSTANCES_HPP
#define SYMCA_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <utility>

#include "symca/interval_table.hpp"
#include "symca/multivalued_data.hpp"

namespace symca::random {

struct SurveyShape {
  int max_individuals = 6;
  int min_modalities = 2;
  int max_modalities = 4;
  int max_set_size = 3;
};

struct TableShape {
  int min_dim = 2;
  int max_dim = 5;
  int max_lower = 20;
  int max_width = 8;
  double degenerate_cell_rate = 0.3;
};

/// Mixes a base seed with a suite tag and instance number into one seed.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t suite, std::uint64_t index);

std::pair<MultiValuedVariable, MultiValuedVariable> survey(std::uint64_t seed, const SurveyShape& shape = {});

/// Random interval table with strictly positive center margins.
IntervalTable interval_table(std::uint64_t seed, const TableShape& shape = {});

/// Random table with lower == upper everywhere and positive margins.
IntervalTable degenerate_table(std::uint64_t seed, const TableShape& shape = {});

}  // namespace symca::random

#endif  // SYMCA_RANDOM_INSTANCES_HPP
