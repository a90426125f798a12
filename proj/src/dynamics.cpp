#include "parikh/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "parikh/partitions.hpp"

namespace parikh {

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::CycleFound: return "cycle";
    case Termination::OutOfRangeError: return "out-of-range";
    case Termination::StepLimit: return "step-limit";
    }
    return "?";
}

namespace {

std::optional<RangeEscape> find_escape(const ParikhVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] >= v.size()) return RangeEscape{i, v[i]};
    return std::nullopt;
}

} // namespace

Trajectory iterate(const ParikhVector& v, MappingMode mode, std::size_t step_limit) {
    if (step_limit == 0) throw InvalidArgument("step limit must be at least 1");
    Trajectory t{v, {v}, 0, std::nullopt, Termination::StepLimit, std::nullopt};
    std::unordered_map<ParikhVector, std::size_t, ParikhVectorHash> seen{{v, 0}};
    for (std::size_t step = 0; step < step_limit; ++step) {
        auto next = try_basis_map(t.states.back(), mode);
        if (!next) {
            t.terminated_by = Termination::OutOfRangeError;
            t.escape = find_escape(t.states.back());
            t.tail_length = t.states.size() - 1;
            return t;
        }
        t.states.push_back(*next);
        auto [it, inserted] = seen.emplace(std::move(*next), t.states.size() - 1);
        if (!inserted) {
            t.terminated_by = Termination::CycleFound;
            t.tail_length = it->second;
            t.cycle_length = t.states.size() - 1 - it->second;
            return t;
        }
    }
    t.tail_length = t.states.size() - 1;
    return t;
}

// --- Attractor -----------------------------------------------------------------

Attractor Attractor::from_cycle(std::vector<ParikhVector> cycle, MappingMode mode) {
    if (cycle.empty()) throw InvalidArgument("attractor cycle is empty");
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto image = try_basis_map(cycle[i], mode);
        if (!image || *image != cycle[(i + 1) % k])
            throw InvalidArgument("cycle member " + format_vector(cycle[i]) +
                                  " does not map to its successor");
    }
    // Minimal: members are pairwise distinct.
    std::set<ParikhVector> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != k) throw InvalidArgument("cycle is not minimal");
    auto greatest = std::max_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), greatest, cycle.end());
    return Attractor(std::move(cycle));
}

bool Attractor::contains(const ParikhVector& v) const {
    return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
}

Classification classify(const ParikhVector& v, MappingMode mode, std::size_t step_limit) {
    Trajectory t = iterate(v, mode, step_limit);
    switch (t.terminated_by) {
    case Termination::CycleFound: {
        std::vector<ParikhVector> cycle(t.states.begin() + static_cast<std::ptrdiff_t>(t.tail_length),
                                        t.states.end() - 1);
        return Attractor::from_cycle(std::move(cycle), mode);
    }
    case Termination::OutOfRangeError:
        return Divergence{t.states.back(), *t.escape, t.states.size() - 1};
    case Termination::StepLimit: break;
    }
    throw StepLimitExceeded("no cycle within " + std::to_string(step_limit) + " steps from " +
                            format_vector(v));
}

// --- convergence sweep -----------------------------------------------------------

std::vector<std::size_t> ConvergenceReport::orders() const {
    std::set<std::size_t> out;
    for (const auto& b : basins) out.insert(b.attractor.order());
    return {out.begin(), out.end()};
}

namespace {

struct Fate {
    std::optional<Attractor> attractor;  // empty on escape
    std::size_t steps = 0;               // maps until the cycle is entered
};

/// Memoised entry distance into a cycle; fates of every visited state are cached.
class FateCache {
public:
    explicit FateCache(MappingMode mode) : mode_(mode) {}

    const Fate& fate(const ParikhVector& v) {
        if (auto it = cache_.find(v); it != cache_.end()) return it->second;
        Trajectory t = iterate(v, mode_, kDefaultStepLimit);
        if (t.terminated_by == Termination::StepLimit)
            throw StepLimitExceeded("no cycle within step limit from " + format_vector(v));
        if (t.terminated_by == Termination::OutOfRangeError) {
            for (const auto& s : t.states) cache_.try_emplace(s, Fate{});
        } else {
            std::vector<ParikhVector> cycle(
                t.states.begin() + static_cast<std::ptrdiff_t>(t.tail_length), t.states.end() - 1);
            Attractor a = Attractor::from_cycle(std::move(cycle), mode_);
            for (std::size_t i = 0; i + 1 < t.states.size(); ++i) {
                std::size_t steps = i < t.tail_length ? t.tail_length - i : 0;
                cache_.try_emplace(t.states[i], Fate{a, steps});
            }
        }
        return cache_.at(v);
    }

private:
    MappingMode mode_;
    std::unordered_map<ParikhVector, Fate, ParikhVectorHash> cache_;
};

BasinSummary& basin_for(std::map<Attractor, BasinSummary>& basins, const Attractor& a) {
    auto it = basins.find(a);
    if (it == basins.end()) it = basins.emplace(a, BasinSummary{a}).first;
    return it->second;
}

} // namespace

ConvergenceReport verify_convergence_theorem(Basis basis, MappingMode mode) {
    const std::size_t n = basis.size();
    if (n < 2) throw InvalidArgument("convergence sweep needs n >= 2");
    ConvergenceReport report;
    report.basis = basis;
    report.mode = mode;
    FateCache cache(mode);
    std::map<Attractor, BasinSummary> basins;

    // Population 1: the invariant state space (plain sum = weighted sum = n, strict-valid).
    for_each_partition(n, n, n - 1, [&](std::span<const Count> parts) {
        ParikhVector v = multiplicity_vector(parts, basis);
        if (!v.strict_valid()) return;
        ++report.state_space_size;
        const Fate& f = cache.fate(v);
        if (!f.attractor) {
            ++report.state_space_escapes;
            return;
        }
        BasinSummary& b = basin_for(basins, *f.attractor);
        ++b.state_space_starts;
        b.max_steps_state_space = std::max(b.max_steps_state_space, f.steps);
        report.max_steps_state_space = std::max(report.max_steps_state_space, f.steps);
    });

    // Population 2: images of alphabetic-basis vectors under one basis map.
    // Strict: exactly the vectors with plain sum n. Ignoring out-of-range
    // components drops some positions, so every plain sum <= n occurs.
    const Count lowest_total = mode == MappingMode::Strict ? n : 0;
    for (Count total = lowest_total; total <= n; ++total) {
        for_each_partition(total, n, n, [&](std::span<const Count> parts) {
            std::vector<Count> comps(n, 0);
            std::copy(parts.begin(), parts.end(), comps.begin());
            ParikhVector rep(basis, std::move(comps));
            ++report.generating_classes;

            auto image = try_basis_map(rep, mode);
            if (!image) {
                ++report.generating_escapes;
                report.escaping_representatives.push_back(rep);
                return;
            }
            const Fate& f = cache.fate(*image);
            if (!f.attractor) {
                ++report.generating_escapes;
                report.escaping_representatives.push_back(rep);
                return;
            }
            // Arrangements of the class that are not cycle members need one
            // more map than the shared image.
            std::map<Count, Count> value_counts;
            for (Count c : rep.components()) ++value_counts[c];
            std::vector<Count> mult;
            for (auto& [value, count] : value_counts) mult.push_back(count);
            std::uint64_t arrangements = multinomial(mult);
            std::uint64_t members_in_class = 0;
            auto sorted_desc = [](ParikhVector x) {
                std::vector<Count> c(x.components().begin(), x.components().end());
                std::sort(c.rbegin(), c.rend());
                return c;
            };
            const auto rep_sorted = sorted_desc(rep);
            for (const auto& m : f.attractor->cycle())
                if (sorted_desc(m) == rep_sorted) ++members_in_class;

            BasinSummary& b = basin_for(basins, *f.attractor);
            ++b.generating_classes;
            std::size_t steps = arrangements > members_in_class ? f.steps + 1 : 0;
            b.max_steps_generating = std::max(b.max_steps_generating, steps);
        });
    }

    for (auto& [a, b] : basins) {
        if (b.generating_classes > 0) b.max_mappings_from_alphabetic = b.max_steps_generating + 2;
        report.basins.push_back(std::move(b));
    }
    return report;
}

} // namespace parikh
