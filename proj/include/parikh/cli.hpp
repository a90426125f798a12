#pragma once

// Command-line front end. run() takes the arguments after the program name and
// writes all output to the given streams, so the same entry point serves the
// executable and in-process tests.
//
//   map WORD --n N [--alphabet LETTERS] [--mode strict|ignore] [--trace] [--format table|json]
//   attractors [--n-range A..B] [--max-order K] [--mode M] [--format table|json|csv]
//   reach [--n-range A..B] [--k K] [--from alphabetic|word] [--mode M] [--witness] [--format F]
//   verify (--formula | --theorem | --countable | --properties)... [--n-range A..B]
//          [--samples S] [--seed X] [--exhaustive-cap C] [--mode M] [--format table|json]

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parikh::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDivergence = 2,     ///< strict-mode escape from the basis
    kCheckFailure = 3,
};

/// Inclusive range "a..b" (or a single number "a").
std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parikh::cli
