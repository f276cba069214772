#ifndef SYMCA_DATASETS_HPP
#define SYMCA_DATASETS_HPP

#include <string_view>

#include "symca/interval_table.hpp"

namespace symca::datasets {

/// Eye color (rows) by hair color (columns) interval counts for 592 women.
/// The black-h column has no variation.
IntervalTable eye_hair_592();

/// Five individuals, eyes and hair, two of them with ambiguous answers.
inline constexpr std::string_view kEyeHairSurveyCsv =
    "eyes,hair\n"
    "green|blue,black\n"
    "brown,black\n"
    "green,blond|black\n"
    "brown,blond\n"
    "green,blond\n";

}  // namespace symca::datasets

#endif  // SYMCA_DATASETS_HPP
