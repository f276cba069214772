#include "symca/datasets.hpp"

namespace symca::datasets {

IntervalTable eye_hair_592() {
  CountMatrix lower(4, 4), upper(4, 4);
  lower << 60, 119, 20, 4,
           15, 50, 14, 5,
           5, 24, 10, 11,
           20, 70, 16, 90;
  upper << 60, 123, 28, 7,
           15, 58, 20, 11,
           5, 26, 12, 12,
           20, 84, 17, 100;
  return IntervalTable({"black-e", "brown-e", "green-e", "blue-e"},
                       {"black-h", "brown-h", "red-h", "blond-h"}, lower, upper);
}

}  // namespace symca::datasets
