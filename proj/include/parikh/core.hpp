#pragma once

// Domain types and the three Parikh mappings:
//
//   word  --alphabetic_map-->  AlphabeticVector  --alphabetic_basis_map-->  ParikhVector
//   ParikhVector  --basis_map-->  ParikhVector
//
// A ParikhVector over basis n has components #_0 .. #_{n-1}; the basis map
// replaces a vector by the histogram of its own component values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parikh/errors.hpp"

namespace parikh {

using Count = std::uint64_t;
using Letter = char;

/// Dimension n of the numerical alphabet {0, 1, ..., n-1}.
class Basis {
public:
    explicit Basis(std::size_t n) : n_(n) {
        if (n == 0) throw InvalidArgument("basis must be at least 1");
    }
    std::size_t size() const noexcept { return n_; }
    auto operator<=>(const Basis&) const = default;

private:
    std::size_t n_;
};

enum class MappingMode {
    Strict,           ///< components >= n are an error
    IgnoreOutOfRange  ///< components >= n contribute to no output position
};

std::string_view to_string(MappingMode mode);
MappingMode parse_mode(std::string_view text);

/// Letter counts of a word over an ordered alphabet.
class AlphabeticVector {
public:
    AlphabeticVector(std::vector<Letter> alphabet, std::vector<Count> counts);

    std::span<const Letter> alphabet() const noexcept { return alphabet_; }
    std::span<const Count> counts() const noexcept { return counts_; }
    std::size_t size() const noexcept { return counts_.size(); }
    Count total() const;

    bool operator==(const AlphabeticVector&) const = default;

private:
    std::vector<Letter> alphabet_;
    std::vector<Count> counts_;
};

class ParikhVector {
public:
    ParikhVector(Basis basis, std::vector<Count> components);
    /// Basis is taken from the component count.
    explicit ParikhVector(std::vector<Count> components);

    static ParikhVector zero(Basis basis);

    Basis basis() const noexcept { return Basis(components_.size()); }
    std::size_t size() const noexcept { return components_.size(); }
    std::span<const Count> components() const noexcept { return components_; }
    Count operator[](std::size_t i) const { return components_[i]; }

    /// Every component is below n.
    bool strict_valid() const noexcept;

    // Lexicographic on components; vectors of different bases order by size first.
    std::strong_ordering operator<=>(const ParikhVector& other) const;
    bool operator==(const ParikhVector& other) const = default;

private:
    std::vector<Count> components_;
};

struct ParikhVectorHash {
    std::size_t operator()(const ParikhVector& v) const noexcept;
};

AlphabeticVector alphabetic_map(std::string_view word,
                                std::optional<std::string_view> alphabet = std::nullopt);

ParikhVector alphabetic_basis_map(const AlphabeticVector& av, Basis basis,
                                  MappingMode mode = MappingMode::Strict);

ParikhVector basis_map(const ParikhVector& v, MappingMode mode = MappingMode::Strict);

/// Applies basis_map without throwing; std::nullopt on a Strict-mode range error.
std::optional<ParikhVector> try_basis_map(const ParikhVector& v,
                                          MappingMode mode = MappingMode::Strict);

Count plain_sum(const ParikhVector& v);
Count weighted_sum(const ParikhVector& v);

// --- stage properties ------------------------------------------------------

enum class Stage { Alphabetic, AlphabeticBasis, FirstBasis, Steady };

std::string_view to_string(Stage stage);

struct StageContext {
    std::optional<Count> word_length;
    std::optional<Count> letter_count;  ///< distinct letters (or explicit alphabet size)
    std::optional<std::size_t> basis;
};

struct PropertyCheck {
    std::string label;        ///< "(i)" .. "(vii)"
    std::string description;
    Count expected = 0;
    Count actual = 0;
    bool passed = false;
    bool informational = false;  ///< shown, but not counted by all_passed()
};

struct PropertyReport {
    Stage stage = Stage::Steady;
    Count plain_sum = 0;
    Count weighted_sum = 0;
    std::vector<PropertyCheck> checks;

    bool all_passed() const;
};

/// Sum identities for the alphabetic stage: (i).
PropertyReport check_stage_properties(const AlphabeticVector& av, const StageContext& ctx);

/// Sum identities for a basis-vector stage. The first-basis stage also reports
/// the weighted sum against n so both readings of that stage are visible.
PropertyReport check_stage_properties(Stage stage, const ParikhVector& v,
                                      const StageContext& ctx);

// --- text formats ------------------------------------------------------------

/// Comma form "1,2,1,0" or compact digit form "1210".
ParikhVector parse_vector(std::string_view text, std::optional<std::size_t> n = std::nullopt);

std::string format_comma(const ParikhVector& v);
/// Compact digit string when every component is <= 9, comma form otherwise.
std::string format_vector(const ParikhVector& v);
bool has_compact_form(const ParikhVector& v) noexcept;

std::string format_counts(std::span<const Count> counts);

} // namespace parikh
