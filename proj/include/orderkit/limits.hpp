#pragma once

#include <cstddef>

namespace orderkit {

/// Process-wide caps for exhaustive enumerations. Set them once at startup
/// (the CLI reads ORDERKIT_MAX_N); every operation reads them through the
/// accessors below.
struct Limits {
  /// Largest carrier for loops over all 2^n subsets.
  std::size_t subset_max_n = 24;
  /// Largest element count accepted by the isomorphism-class generators.
  std::size_t enumerate_max_n = 7;
  /// Largest number of upper sets materialized by one enumeration.
  std::size_t upper_set_limit = std::size_t{1} << 20;
};

const Limits& limits();
void set_limits(const Limits& l);

/// Applies ORDERKIT_MAX_N to both element-count caps when the variable is set
/// to a positive integer. Returns true if it was applied.
bool apply_env_limits();

}  // namespace orderkit
