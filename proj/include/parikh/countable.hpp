#pragma once

// Vectors over the countable basis. A symbolic vector lists finitely many
// non-zero entries; every other position holds 0. Values and positions are
// either finite or the countable cardinal N, and N absorbs finite arithmetic.
// Text form: "N_0 2_1 1_2 1_N 0_w" (value_position, "0_w" = zeros elsewhere).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parikh/core.hpp"

namespace parikh {

class Cardinal {
public:
    constexpr Cardinal() = default;
    constexpr explicit Cardinal(Count finite) : value_(finite) {}
    static constexpr Cardinal countable() {
        Cardinal c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_countable() const noexcept { return infinite_; }
    constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
    /// Throws DomainError for N.
    Count finite() const;

    friend Cardinal operator+(Cardinal a, Cardinal b);
    /// N - finite = N. Finite results must stay non-negative; N - N is undefined.
    friend Cardinal operator-(Cardinal a, Cardinal b);

    constexpr auto operator<=>(const Cardinal&) const = default;

    std::string to_string() const;

private:
    bool infinite_ = false;  // declared first: every N orders after every finite value
    Count value_ = 0;
};

/// A position index; Position::countable() sits beyond all finite indices.
using Position = Cardinal;

class SymbolicVector {
public:
    SymbolicVector() = default;
    /// Drops zero entries. Throws Unrepresentable on a repeated position.
    explicit SymbolicVector(std::vector<std::pair<Position, Cardinal>> entries);

    Cardinal at(Position p) const;
    const std::map<Position, Cardinal>& entries() const noexcept { return entries_; }

    bool operator==(const SymbolicVector&) const = default;

private:
    std::map<Position, Cardinal> entries_;
};

SymbolicVector symbolic_basis_map(const SymbolicVector& v);

/// "N_0 2_1 1_2 1_N 0_w"
std::string format_symbolic(const SymbolicVector& v);
SymbolicVector parse_symbolic(std::string_view text);

/// Closed-form attractor with n = N: (N-4)_0 (k+1)_1 (2-k)_2 1_(N+k-5).
SymbolicVector symbolic_formula_attractor(std::size_t k);

struct CountableCheck {
    std::string name;
    std::string detail;
    bool passed = false;
};

struct CountableReport {
    std::vector<CountableCheck> checks;
    bool passed() const noexcept;
};

/// A^1_N is fixed, the A^2_N pair maps onto each other, and both agree with
/// the closed form evaluated at n = N.
CountableReport verify_countable_attractors();

} // namespace parikh
