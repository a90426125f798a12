#include "parikh/sampling.hpp"

#include <algorithm>

#include "parikh/attractors.hpp"

namespace parikh {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

std::string random_word(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidArgument("random words need n >= 2");
    const std::size_t letters = uniform(rng, 1, std::min<std::size_t>(26, 2 * n));
    std::string word;
    for (std::size_t i = 0; i < letters; ++i)
        word.append(uniform(rng, 1, n - 1), static_cast<char>('a' + i));
    std::shuffle(word.begin(), word.end(), rng);
    return word;
}

PropertySweep sample_word_properties(std::size_t n, std::size_t samples, std::uint64_t seed) {
    PropertySweep sweep;
    sweep.n = n;
    sweep.samples = samples;
    std::mt19937_64 rng(seed);
    const Basis basis(n);

    auto record = [&](const std::string& word, const PropertyReport& r) {
        if (r.all_passed()) return;
        ++sweep.violations;
        if (sweep.examples.size() < 5)
            sweep.examples.push_back(word + ": stage " + std::string(to_string(r.stage)));
    };

    for (std::size_t s = 0; s < samples; ++s) {
        const std::string word = random_word(n, rng);
        const AlphabeticVector av = alphabetic_map(word);
        StageContext ctx{word.size(), av.size(), n};
        record(word, check_stage_properties(av, ctx));

        const ParikhVector beta = alphabetic_basis_map(av, basis);
        record(word, check_stage_properties(Stage::AlphabeticBasis, beta, ctx));

        Trajectory t = iterate(beta);
        if (t.terminated_by != Termination::CycleFound) {
            ++sweep.escapes;
            continue;
        }
        ++sweep.strict_valid;
        for (std::size_t i = 1; i < t.states.size(); ++i)
            record(word, check_stage_properties(i == 1 ? Stage::FirstBasis : Stage::Steady,
                                                t.states[i], ctx));
    }
    return sweep;
}

OutOfRangeSweep sample_out_of_range(std::size_t n, std::size_t samples, std::uint64_t seed) {
    OutOfRangeSweep sweep;
    sweep.n = n;
    sweep.samples = samples;
    std::mt19937_64 rng(seed);
    const Basis basis(n);

    AttractorTable strict = find_attractors(basis);
    auto in_strict_table = [&](const Attractor& a) {
        const auto& list = strict.at(a.order());
        return std::find(list.begin(), list.end(), a) != list.end();
    };

    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t letters = uniform(rng, 1, 3 * n);
        std::vector<Letter> alphabet(letters);
        std::vector<Count> counts(letters);
        for (std::size_t i = 0; i < letters; ++i) {
            alphabet[i] = static_cast<Letter>(i);  // opaque symbols
            counts[i] = uniform(rng, 1, 2 * n);
        }
        if (*std::max_element(counts.begin(), counts.end()) < n)
            counts[uniform(rng, 0, letters - 1)] = uniform(rng, n, 2 * n);

        AlphabeticVector av(std::move(alphabet), std::move(counts));
        ParikhVector beta = alphabetic_basis_map(av, basis, MappingMode::IgnoreOutOfRange);
        Trajectory t = iterate(beta, MappingMode::IgnoreOutOfRange);
        if (t.terminated_by != Termination::CycleFound) continue;
        ++sweep.converged;
        std::vector<ParikhVector> cycle(t.states.begin() + static_cast<std::ptrdiff_t>(t.tail_length),
                                        t.states.end() - 1);
        Attractor a = Attractor::from_cycle(std::move(cycle), MappingMode::IgnoreOutOfRange);
        if (!in_strict_table(a)) ++sweep.outside_strict_table;
        const std::size_t mappings = t.tail_length + 1;
        sweep.max_mappings = std::max(sweep.max_mappings, mappings);
        ++sweep.reached[a];
        auto& best = sweep.max_by_attractor[a];
        best = std::max(best, mappings);
    }
    return sweep;
}

} // namespace parikh
