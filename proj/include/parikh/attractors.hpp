#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "parikh/core.hpp"
#include "parikh/dynamics.hpp"

namespace parikh {

inline constexpr std::size_t kDefaultMaxOrder = 8;
inline constexpr std::size_t kDefaultExhaustiveCap = 40;

/// Strict-valid vectors with plain sum = weighted sum = n, sorted ascending.
/// Every cycle of the basis map lives here.
struct StateSpace {
    Basis basis{1};
    std::vector<ParikhVector> vectors;
};

StateSpace enumerate_state_space(Basis n);

struct AttractorTable {
    Basis basis{1};
    std::size_t max_order = kDefaultMaxOrder;
    std::map<std::size_t, std::vector<Attractor>> entries;  ///< order -> sorted attractors
    std::vector<Attractor> beyond_max_order;                ///< found, but order > max_order

    /// Attractors of order k (empty when none).
    const std::vector<Attractor>& at(std::size_t k) const;
    std::size_t count() const;
};

AttractorTable find_attractors(Basis n, std::size_t max_order = kDefaultMaxOrder);

/// Whether the closed-form attractor is claimed for (n, k): n >= 8 with
/// k in {1, 2}, plus (6, 2) and (7, 1).
bool formula_applies(std::size_t n, std::size_t k) noexcept;

/// (n-4) at position 0, k+1 at 1, 2-k at 2 and 1 at position n+k-5; zeros
/// elsewhere. Throws DomainError outside formula_applies.
ParikhVector formula_attractor(Basis n, std::size_t k);

/// The other member of a 2-cycle. Throws NotInTwoCycle for fixed points and
/// vectors not on a 2-cycle.
ParikhVector cycle_partner(const ParikhVector& v);

struct FormulaCheck {
    std::size_t n = 0;
    std::optional<bool> fixed_point;     ///< k = 1 checked and passed?
    std::optional<bool> two_cycle;       ///< k = 2 checked and passed?
    std::optional<bool> exhaustive;      ///< exhaustive table agrees?
    std::vector<std::string> notes;

    bool passed() const noexcept {
        return fixed_point.value_or(true) && two_cycle.value_or(true) && exhaustive.value_or(true);
    }
};

struct FormulaReport {
    std::vector<FormulaCheck> rows;
    bool passed() const noexcept;
};

/// For each n in [n_first, n_last]: the k = 1 formula vector is fixed, the
/// k = 2 vector and its partner form a 2-cycle, and for n <= exhaustive_cap the
/// exhaustive table agrees with the formula (exactly, for n >= 8).
FormulaReport verify_formula(std::size_t n_first, std::size_t n_last,
                             std::vector<std::size_t> orders = {1, 2},
                             std::size_t exhaustive_cap = kDefaultExhaustiveCap);

} // namespace parikh
