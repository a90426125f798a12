#include "parikh/partitions.hpp"

#include <limits>
#include <numeric>

namespace parikh {

namespace {

void partition_step(Count remaining, Count largest, std::size_t max_parts, std::vector<Count>& parts,
                    const std::function<void(std::span<const Count>)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    if (parts.size() == max_parts) return;
    const std::size_t slots = max_parts - parts.size();
    for (Count p = std::min(largest, remaining); p >= 1; --p) {
        if (p * slots < remaining) break;  // remaining slots cannot absorb the rest
        parts.push_back(p);
        partition_step(remaining - p, p, max_parts, parts, visit);
        parts.pop_back();
    }
}

} // namespace

void for_each_partition(Count total, std::size_t max_parts, Count max_part,
                        const std::function<void(std::span<const Count>)>& visit) {
    std::vector<Count> parts;
    parts.reserve(max_parts);
    if (total == 0) {
        visit(parts);
        return;
    }
    if (max_part == 0) return;
    partition_step(total, max_part, max_parts, parts, visit);
}

ParikhVector multiplicity_vector(std::span<const Count> parts, Basis basis) {
    const std::size_t n = basis.size();
    if (parts.size() > n) throw InvalidArgument("partition has more parts than the basis");
    std::vector<Count> v(n, 0);
    for (Count p : parts) {
        if (p >= n) throw InvalidArgument("partition part not below the basis");
        ++v[p];
    }
    v[0] += n - parts.size();
    return ParikhVector(basis, std::move(v));
}

std::uint64_t multinomial(std::span<const Count> multiplicities) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // Product of binomials C(s_j, t_j) with s_j the running total.
    std::uint64_t result = 1;
    Count running = 0;
    for (Count t : multiplicities) {
        for (Count i = 1; i <= t; ++i) {
            ++running;
            // result * running / i is integral; divide first to delay overflow
            const std::uint64_t g = std::gcd(result, i);
            std::uint64_t next = 0;
            if (__builtin_mul_overflow(result / g, running / (i / g), &next)) return kMax;
            result = next;
        }
    }
    return result;
}

} // namespace parikh
