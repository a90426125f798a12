#pragma once

// Randomised sweeps over words and alphabetic vectors. Every sweep is a pure
// function of (n, samples, seed).

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "parikh/core.hpp"
#include "parikh/dynamics.hpp"

namespace parikh {

/// A random word whose letter counts are all below n, over at most 26 letters.
std::string random_word(std::size_t n, std::mt19937_64& rng);

struct PropertySweep {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::size_t strict_valid = 0;  ///< trajectories that never leave the basis
    std::size_t escapes = 0;       ///< some alphabetic-basis component >= n
    std::size_t violations = 0;
    std::vector<std::string> examples;  ///< first few violations, for diagnostics

    bool passed() const noexcept { return violations == 0; }
};

/// Checks the sum identities at every stage of the pipeline for random words:
/// (i) at the alphabetic vector, (ii)-(iii) at its basis image, (iv)-(v) after
/// one basis map and (vi)-(vii) from the second basis map on.
PropertySweep sample_word_properties(std::size_t n, std::size_t samples, std::uint64_t seed);

struct OutOfRangeSweep {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::size_t converged = 0;
    std::size_t outside_strict_table = 0;  ///< converged to a cycle absent from the strict table
    std::size_t max_mappings = 0;          ///< alphabetic-basis map + basis maps to the cycle
    std::map<Attractor, std::size_t> reached;       ///< attractor -> hits
    std::map<Attractor, std::size_t> max_by_attractor;

    bool passed() const noexcept { return converged == samples && outside_strict_table == 0; }
};

/// Random alphabetic vectors with at least one count >= n, mapped with
/// out-of-range counts ignored.
OutOfRangeSweep sample_out_of_range(std::size_t n, std::size_t samples, std::uint64_t seed);

} // namespace parikh
