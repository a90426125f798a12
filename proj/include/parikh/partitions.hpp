#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parikh/core.hpp"

namespace parikh {

/// Visits every partition of `total` into at most `max_parts` parts, each in
/// [1, max_part]. Parts are passed in non-increasing order; the empty
/// partition is visited for total == 0.
void for_each_partition(Count total, std::size_t max_parts, Count max_part,
                        const std::function<void(std::span<const Count>)>& visit);

/// Multiplicity encoding of a partition in basis n: component j (j >= 1) is the
/// number of parts equal to j and component 0 takes the remaining n - #parts.
/// Parts must be < n and #parts <= n.
ParikhVector multiplicity_vector(std::span<const Count> parts, Basis basis);

/// n! / prod(t_j!) for a vector t summing to n; saturates at UINT64_MAX.
std::uint64_t multinomial(std::span<const Count> multiplicities);

} // namespace parikh
