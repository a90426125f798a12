#pragma once

// Inverse of the basis map and attractor reachability rates.
//
// The inverse image of a target t is the set of arrangements of the value
// multiset {j repeated t_j times}; it is non-empty iff the plain sum of t is n.
// Reachability is computed by a backward breadth-first search from each cycle
// member: level m holds the vectors that enter the cycle at that member after
// exactly m basis maps and still satisfy both sum identities. The deepest such
// level D has preimages with plain sum n (generating vectors) at level
// L = D + 1; the rate from an alphabetic vector is L + 2 and from a word L + 3.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parikh/core.hpp"
#include "parikh/dynamics.hpp"

namespace parikh {

inline constexpr std::size_t kMaxBackwardDepth = 64;

struct PreimageSet {
    ParikhVector target;
    std::vector<Count> value_multiset;  ///< non-decreasing
    std::vector<ParikhVector> vectors;  ///< every arrangement, sorted ascending
};

/// Throws NoPreimage unless plain_sum(target) == n.
PreimageSet inverse_map(const ParikhVector& target);

/// Number of arrangements, n! / prod(t_j!), without enumerating them.
std::uint64_t preimage_count(const ParikhVector& target);

/// Visits arrangements in ascending order; return false from `visit` to stop.
/// With require_weighted, only arrangements whose weighted sum is n are
/// produced and the bound is propagated while backtracking.
void for_each_preimage(const ParikhVector& target, bool require_weighted,
                       const std::function<bool(const ParikhVector&)>& visit);

std::vector<ParikhVector> constrained_preimages(const ParikhVector& target, bool require_weighted);

enum class RateOrigin { Alphabetic, Word };

std::string_view to_string(RateOrigin origin);
RateOrigin parse_origin(std::string_view text);

/// Backward search result for one cycle member.
struct MemberReach {
    ParikhVector member;
    /// Vectors at constrained levels 1..D (both sums = n), each level sorted.
    std::vector<std::vector<ParikhVector>> levels;
    std::size_t generating_depth = 0;        ///< L
    std::uint64_t generating_at_depth = 0;   ///< preimages at level L (saturating)
    bool flagged = false;  ///< no generating vector below the deepest constrained level

    std::size_t constrained_depth() const noexcept { return levels.size(); }
    std::size_t rate(RateOrigin origin) const noexcept {
        return generating_depth + (origin == RateOrigin::Alphabetic ? 2 : 3);
    }
};

struct ReachabilityReport {
    Basis basis{1};
    std::size_t order = 0;
    std::size_t rate_from_alphabetic = 0;
    std::size_t rate_from_word = 0;
    std::vector<Attractor> attractors;  ///< every attractor of this order
    std::vector<MemberReach> members;   ///< per cycle member, in attractor order
    std::size_t witness_member = 0;     ///< index into members attaining the rate
    /// Deepest generating preimage first, ending at the cycle member.
    std::vector<ParikhVector> witness_chain;
    ParikhVector alpha_level{std::vector<Count>{0}};  ///< a preimage of witness_chain.front()
    bool flagged = false;

    std::size_t rate(RateOrigin origin) const noexcept {
        return origin == RateOrigin::Alphabetic ? rate_from_alphabetic : rate_from_word;
    }
    /// Per-level vector counts for the witness member: member itself, the
    /// constrained levels, then the generating level.
    std::vector<std::uint64_t> levels() const;
};

/// Backward search from one cycle member of `attractor`.
MemberReach backward_levels(const Attractor& attractor, std::size_t member_index);

/// Maximum over all order-k attractors of basis n and their members.
/// Throws NoAttractor when basis n has no attractor of order k.
ReachabilityReport reachability_rate(Basis n, std::size_t k);

/// A concrete chain realising a report's rate, re-verified by forward iteration.
struct WitnessChain {
    std::vector<ParikhVector> chain;   ///< alpha-level vector, u_L, ..., cycle member
    std::vector<Count> letter_counts;  ///< an alphabetic vector whose image is chain.front()
    std::string example_word;          ///< empty if more than 26 letters are needed
    std::size_t forward_basis_maps = 0;
    bool valid = false;
    std::vector<std::string> problems;
};

WitnessChain witness_chain(const ReachabilityReport& report);

} // namespace parikh
