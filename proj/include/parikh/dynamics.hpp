#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "parikh/core.hpp"

namespace parikh {

inline constexpr std::size_t kDefaultStepLimit = 1000;

enum class Termination { CycleFound, OutOfRangeError, StepLimit };

std::string_view to_string(Termination t);

struct RangeEscape {
    std::size_t index = 0;  ///< offending component
    Count value = 0;
};

/// Forward orbit of the basis map. For CycleFound, states ends with the first
/// repeated state, so states[tail_length + cycle_length] == states[tail_length].
struct Trajectory {
    ParikhVector start;
    std::vector<ParikhVector> states;
    std::size_t tail_length = 0;
    std::optional<std::size_t> cycle_length;
    Termination terminated_by = Termination::StepLimit;
    std::optional<RangeEscape> escape;  ///< set for OutOfRangeError, refers to states.back()

    std::size_t mappings() const noexcept { return states.empty() ? 0 : states.size() - 1; }
};

Trajectory iterate(const ParikhVector& v, MappingMode mode = MappingMode::Strict,
                   std::size_t step_limit = kDefaultStepLimit);

/// A cycle of the basis map in canonical rotation: it starts at its
/// lexicographically greatest member and lists members in forward order.
class Attractor {
public:
    /// Rotates `cycle` into canonical form. Consecutive members must map onto
    /// each other and the cycle must be minimal.
    static Attractor from_cycle(std::vector<ParikhVector> cycle,
                                MappingMode mode = MappingMode::Strict);

    Basis basis() const noexcept { return cycle_.front().basis(); }
    std::size_t order() const noexcept { return cycle_.size(); }
    const std::vector<ParikhVector>& cycle() const noexcept { return cycle_; }
    bool contains(const ParikhVector& v) const;

    auto operator<=>(const Attractor&) const = default;

private:
    explicit Attractor(std::vector<ParikhVector> cycle) : cycle_(std::move(cycle)) {}
    std::vector<ParikhVector> cycle_;
};

/// Strict-mode exit: the trajectory reached a vector with a component >= n.
struct Divergence {
    ParikhVector at;
    RangeEscape escape;
    std::size_t steps = 0;  ///< basis maps applied before the failing one
};

using Classification = std::variant<Attractor, Divergence>;

/// The attractor whose cycle the orbit of v enters, or the range escape.
/// Throws StepLimitExceeded when no cycle appears within step_limit maps.
Classification classify(const ParikhVector& v, MappingMode mode = MappingMode::Strict,
                        std::size_t step_limit = kDefaultStepLimit);

// --- exhaustive verification of convergence ----------------------------------

struct BasinSummary {
    Attractor attractor;
    std::size_t state_space_starts = 0;
    std::size_t max_steps_state_space = 0;
    std::size_t generating_classes = 0;
    /// Max basis maps from any generating vector (plain sum n, or <= n when
    /// ignoring out-of-range components) until the cycle is entered.
    std::size_t max_steps_generating = 0;
    /// Max mappings from an alphabetic vector: the alphabetic-basis map plus
    /// the basis maps from its image until the cycle is entered.
    std::size_t max_mappings_from_alphabetic = 0;
};

struct ConvergenceReport {
    Basis basis{1};
    MappingMode mode = MappingMode::Strict;
    std::vector<BasinSummary> basins;  ///< sorted by attractor

    std::size_t state_space_size = 0;
    std::size_t state_space_escapes = 0;
    std::size_t max_steps_state_space = 0;

    /// Generating vectors are swept by permutation class (a partition of their
    /// component multiset); every arrangement shares its class's image.
    std::size_t generating_classes = 0;
    std::size_t generating_escapes = 0;  ///< classes whose orbit leaves the basis
    std::vector<ParikhVector> escaping_representatives;

    /// Converged iff no state-space start escapes and at least one attractor exists.
    bool state_space_converges() const noexcept {
        return state_space_escapes == 0 && !basins.empty();
    }
    std::vector<std::size_t> orders() const;
};

ConvergenceReport verify_convergence_theorem(Basis n, MappingMode mode = MappingMode::Strict);

} // namespace parikh
