#include "parikh/inverse.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "parikh/attractors.hpp"
#include "parikh/partitions.hpp"

namespace parikh {

namespace {

void require_generating(const ParikhVector& target) {
    const Count s = plain_sum(target);
    if (s != target.size())
        throw NoPreimage(format_vector(target) + " has plain sum " + std::to_string(s) +
                         ", a preimage needs " + std::to_string(target.size()));
}

/// Arrangement search over positions with the remaining value multiset.
class ArrangementSearch {
public:
    ArrangementSearch(const ParikhVector& target, bool require_weighted,
                      const std::function<bool(const ParikhVector&)>& visit)
        : n_(target.size()),
          remaining_(target.components().begin(), target.components().end()),
          require_weighted_(require_weighted),
          visit_(visit),
          current_(n_, 0) {}

    void run() { step(0, 0); }

private:
    // Bounds on sum(p * value) over positions [pos, n) for the remaining values,
    // by the rearrangement inequality.
    std::pair<Count, Count> weighted_bounds(std::size_t pos) const {
        Count lo = 0, hi = 0;
        std::size_t p = pos;
        for (std::size_t v = n_; v-- > 0;)
            for (Count c = 0; c < remaining_[v]; ++c) lo += p++ * v;
        p = pos;
        for (std::size_t v = 0; v < n_; ++v)
            for (Count c = 0; c < remaining_[v]; ++c) hi += p++ * v;
        return {lo, hi};
    }

    bool step(std::size_t pos, Count weighted) {
        if (pos == n_) {
            if (require_weighted_ && weighted != n_) return true;
            return visit_(ParikhVector(current_));
        }
        if (require_weighted_) {
            auto [lo, hi] = weighted_bounds(pos);
            if (weighted + lo > n_ || weighted + hi < n_) return true;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (remaining_[v] == 0) continue;
            const Count add = static_cast<Count>(pos) * v;
            if (require_weighted_ && weighted + add > n_) break;
            --remaining_[v];
            current_[pos] = v;
            bool keep_going = step(pos + 1, weighted + add);
            ++remaining_[v];
            if (!keep_going) return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<Count> remaining_;
    bool require_weighted_;
    const std::function<bool(const ParikhVector&)>& visit_;
    std::vector<Count> current_;
};

} // namespace

void for_each_preimage(const ParikhVector& target, bool require_weighted,
                       const std::function<bool(const ParikhVector&)>& visit) {
    require_generating(target);
    ArrangementSearch(target, require_weighted, visit).run();
}

PreimageSet inverse_map(const ParikhVector& target) {
    require_generating(target);
    PreimageSet set{target, {}, {}};
    for (std::size_t j = 0; j < target.size(); ++j)
        set.value_multiset.insert(set.value_multiset.end(), target[j], j);
    for_each_preimage(target, false, [&](const ParikhVector& u) {
        set.vectors.push_back(u);
        return true;
    });
    return set;
}

std::uint64_t preimage_count(const ParikhVector& target) {
    require_generating(target);
    return multinomial(target.components());
}

std::vector<ParikhVector> constrained_preimages(const ParikhVector& target, bool require_weighted) {
    std::vector<ParikhVector> out;
    for_each_preimage(target, require_weighted, [&](const ParikhVector& u) {
        out.push_back(u);
        return true;
    });
    return out;
}

std::string_view to_string(RateOrigin origin) {
    return origin == RateOrigin::Alphabetic ? "alphabetic" : "word";
}

RateOrigin parse_origin(std::string_view text) {
    if (text == "alphabetic") return RateOrigin::Alphabetic;
    if (text == "word") return RateOrigin::Word;
    throw ParseError("unknown origin '" + std::string(text) + "' (expected alphabetic|word)");
}

// --- backward search -------------------------------------------------------------

MemberReach backward_levels(const Attractor& attractor, std::size_t member_index) {
    const auto& cycle = attractor.cycle();
    if (member_index >= cycle.size()) throw InvalidArgument("cycle member index out of range");
    MemberReach reach{cycle[member_index], {}, 0, 0, false};

    std::vector<ParikhVector> frontier{reach.member};
    std::uint64_t excluded_at_frontier = 0;  // constrained preimages dropped as cycle members
    while (true) {
        std::set<ParikhVector> next;
        std::uint64_t excluded = 0;
        for (const auto& u : frontier) {
            for (auto& p : constrained_preimages(u, true)) {
                if (attractor.contains(p))
                    ++excluded;
                else
                    next.insert(std::move(p));
            }
        }
        if (next.empty()) {
            excluded_at_frontier = excluded;
            break;
        }
        if (reach.levels.size() == kMaxBackwardDepth)
            throw DepthLimitExceeded("backward search from " + format_vector(reach.member) +
                                     " exceeds depth " + std::to_string(kMaxBackwardDepth));
        reach.levels.emplace_back(next.begin(), next.end());
        frontier = reach.levels.back();
    }

    // Every preimage of the deepest constrained level that is not itself
    // constrained has plain sum n: the generating level.
    std::uint64_t generating = 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (const auto& u : frontier) {
        std::uint64_t c = preimage_count(u);
        generating = generating > kMax - c ? kMax : generating + c;
    }
    generating = generating == kMax ? kMax : generating - excluded_at_frontier;

    reach.generating_at_depth = generating;
    if (generating > 0) {
        reach.generating_depth = reach.levels.size() + 1;
    } else {
        reach.flagged = true;
        reach.generating_depth = reach.levels.size();
    }
    return reach;
}

std::vector<std::uint64_t> ReachabilityReport::levels() const {
    std::vector<std::uint64_t> out;
    if (members.empty()) return out;
    const auto& m = members[witness_member];
    out.push_back(1);
    for (const auto& level : m.levels) out.push_back(level.size());
    if (!m.flagged) out.push_back(m.generating_at_depth);
    return out;
}

namespace {

/// Smallest-word alphabetic-basis vector mapping onto u: position 0 holds a 0
/// when possible (no zero-count letters), remaining values descend.
struct AlphaChoice {
    ParikhVector beta;
    bool zero_count_letters = false;
    Count word_length = 0;
};

AlphaChoice cheapest_alpha(const ParikhVector& u) {
    const std::size_t n = u.size();
    std::vector<Count> values;
    for (std::size_t j = n; j-- > 0;) values.insert(values.end(), u[j], j);  // descending
    std::vector<Count> beta(n, 0);
    bool zero_first = u[0] > 0;
    if (zero_first) {
        values.pop_back();  // one 0 goes to position 0
        for (std::size_t i = 0; i < values.size(); ++i) beta[i + 1] = values[i];
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) beta[i] = values[i];
    }
    ParikhVector b(std::move(beta));
    Count len = weighted_sum(b);
    return {std::move(b), !zero_first, len};
}

std::vector<Count> letters_for(const ParikhVector& beta) {
    std::vector<Count> counts;
    for (std::size_t j = beta.size(); j-- > 0;) counts.insert(counts.end(), beta[j], j);
    return counts;
}

} // namespace

ReachabilityReport reachability_rate(Basis basis, std::size_t k) {
    if (k == 0) throw InvalidArgument("attractor order must be at least 1");
    AttractorTable table = find_attractors(basis, std::max(k, kDefaultMaxOrder));
    const auto& attractors = table.at(k);
    if (attractors.empty())
        throw NoAttractor("basis " + std::to_string(basis.size()) + " has no attractor of order " +
                          std::to_string(k));

    ReachabilityReport report;
    report.basis = basis;
    report.order = k;
    report.attractors = attractors;
    std::vector<const Attractor*> owner;
    for (const auto& a : attractors) {
        for (std::size_t i = 0; i < a.order(); ++i) {
            report.members.push_back(backward_levels(a, i));
            owner.push_back(&a);
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < report.members.size(); ++i)
        if (report.members[i].generating_depth > report.members[best].generating_depth) best = i;
    const MemberReach& m = report.members[best];
    report.witness_member = best;
    report.rate_from_alphabetic = m.rate(RateOrigin::Alphabetic);
    report.rate_from_word = m.rate(RateOrigin::Word);
    for (const auto& r : report.members) report.flagged = report.flagged || r.flagged;

    // Witness: deepest constrained vectors, then the generating preimage whose
    // alphabetic-basis preimage gives the shortest word without unused letters.
    const Attractor& attractor = *owner[best];
    const std::vector<ParikhVector> deepest =
        m.levels.empty() ? std::vector<ParikhVector>{m.member} : m.levels.back();
    std::optional<std::pair<ParikhVector, AlphaChoice>> chosen;
    auto better = [&](const ParikhVector& u, const AlphaChoice& a) {
        const AlphaChoice& b = chosen->second;
        if (a.zero_count_letters != b.zero_count_letters) return !a.zero_count_letters;
        if (a.word_length != b.word_length) return a.word_length < b.word_length;
        return u < chosen->first;
    };
    if (!m.flagged) {
        for (const auto& u_d : deepest) {
            for_each_preimage(u_d, false, [&](const ParikhVector& u_l) {
                if (attractor.contains(u_l) || weighted_sum(u_l) == basis.size()) return true;
                AlphaChoice alpha = cheapest_alpha(u_l);
                if (!chosen || better(u_l, alpha)) chosen.emplace(u_l, std::move(alpha));
                return true;
            });
        }
    }
    ParikhVector head = chosen ? chosen->first : deepest.front();
    report.alpha_level = chosen ? chosen->second.beta : cheapest_alpha(head).beta;
    report.witness_chain.push_back(head);
    while (report.witness_chain.back() != m.member)
        report.witness_chain.push_back(basis_map(report.witness_chain.back()));
    return report;
}

WitnessChain witness_chain(const ReachabilityReport& report) {
    WitnessChain w;
    w.chain.push_back(report.alpha_level);
    w.chain.insert(w.chain.end(), report.witness_chain.begin(), report.witness_chain.end());
    w.letter_counts = letters_for(report.alpha_level);

    const Basis basis = report.basis;
    const ParikhVector& member = report.members.at(report.witness_member).member;
    const Attractor* attractor = nullptr;
    for (const auto& a : report.attractors)
        if (a.contains(member)) attractor = &a;

    // Forward re-check: each link is one basis map and the cycle is entered at the end.
    for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
        auto image = try_basis_map(w.chain[i]);
        if (!image || *image != w.chain[i + 1])
            w.problems.push_back("link " + std::to_string(i) + " is not a basis map");
        if (attractor && attractor->contains(w.chain[i]))
            w.problems.push_back("chain enters the cycle early at link " + std::to_string(i));
    }
    if (w.chain.back() != member) w.problems.push_back("chain does not end at the cycle member");
    Trajectory t = iterate(w.chain.front());
    if (t.terminated_by != Termination::CycleFound || !attractor ||
        !attractor->contains(t.states[t.tail_length]))
        w.problems.push_back("alpha-level vector does not reach the attractor");
    w.forward_basis_maps = t.tail_length;
    if (w.forward_basis_maps + 1 != report.rate_from_alphabetic)
        w.problems.push_back("forward count " + std::to_string(w.forward_basis_maps) +
                             " + 1 differs from the rate");

    // The alphabetic vector realising chain.front().
    std::vector<Letter> alphabet;
    for (std::size_t i = 0; i < w.letter_counts.size(); ++i)
        alphabet.push_back(static_cast<Letter>(i < 26 ? 'a' + i : 0));
    if (w.letter_counts.size() <= 26) {
        AlphabeticVector av(alphabet, w.letter_counts);
        if (alphabetic_basis_map(av, basis) != w.chain.front())
            w.problems.push_back("letter counts do not map onto the alpha-level vector");
        if (report.alpha_level[0] == 0) {
            for (std::size_t i = 0; i < w.letter_counts.size(); ++i)
                w.example_word.append(w.letter_counts[i], alphabet[i]);
            Trajectory from_word = iterate(
                alphabetic_basis_map(alphabetic_map(w.example_word), basis));
            if (from_word.tail_length + 1 != report.rate_from_alphabetic)
                w.problems.push_back("example word does not realise the rate");
        }
    }
    w.valid = w.problems.empty();
    return w;
}

} // namespace parikh
