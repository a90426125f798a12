#include <doctest.h>

#include <limits>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "parikh/attractors.hpp"
#include "parikh/errors.hpp"
#include "parikh/inverse.hpp"
#include "parikh/partitions.hpp"

using namespace parikh;

namespace {

ParikhVector pv(std::vector<Count> c) { return ParikhVector(std::move(c)); }

std::vector<oracle::Vec> as_vecs(const std::vector<ParikhVector>& vs) {
    std::vector<oracle::Vec> out;
    for (const auto& v : vs) out.push_back(oracle::components(v));
    return out;
}

/// Largest number of mappings from any alphabetic-basis vector (digits < n)
/// into each attractor of order k, by plain forward iteration.
std::size_t brute_rate(std::size_t n, std::size_t k) {
    std::size_t best = 0;
    bool any = false;
    oracle::for_each_digit_vector(n, [&](const oracle::Vec& beta) {
        const Trajectory t = iterate(ParikhVector(beta));
        if (t.terminated_by != Termination::CycleFound || *t.cycle_length != k) return;
        any = true;
        best = std::max(best, 1 + t.tail_length);
    });
    return any ? best : 0;
}

} // namespace

TEST_CASE("inverse map examples") {
    const PreimageSet a = inverse_map(pv({1, 2, 1, 0}));
    CHECK(a.value_multiset == std::vector<Count>{0, 1, 1, 2});
    CHECK(a.vectors.size() == 12);

    const PreimageSet b = inverse_map(pv({1, 3, 0, 0}));
    CHECK(b.vectors.size() == 4);
    CHECK(std::find(b.vectors.begin(), b.vectors.end(), pv({0, 1, 1, 1})) != b.vectors.end());

    const PreimageSet c = inverse_map(pv({0, 0, 0, 4}));
    CHECK(c.vectors == std::vector<ParikhVector>{pv({3, 3, 3, 3})});

    CHECK_THROWS_AS(inverse_map(pv({1, 1, 0, 0})), NoPreimage);
    CHECK(preimage_count(pv({1, 2, 1, 0})) == 12);
}

TEST_CASE("constrained preimages") {
    CHECK(constrained_preimages(pv({1, 2, 1, 0}), true) ==
          std::vector<ParikhVector>{pv({1, 2, 1, 0}), pv({2, 1, 0, 1})});
    CHECK(constrained_preimages(pv({2, 1, 0, 1}), true).empty());
    const auto fixed = constrained_preimages(pv({2, 0, 2, 0}), true);
    CHECK(std::find(fixed.begin(), fixed.end(), pv({2, 0, 2, 0})) != fixed.end());
}

TEST_CASE("preimages equal brute force for every target up to n = 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto table = oracle::preimage_table(n);
        std::size_t targets = 0;
        oracle::for_each_digit_vector(n, [&](const oracle::Vec& t) {
            if (oracle::plain(t) != n) return;
            ++targets;
            const ParikhVector target(t);
            auto it = table.find(t);
            const std::vector<oracle::Vec> expected = it == table.end() ? std::vector<oracle::Vec>{} : it->second;
            const PreimageSet set = inverse_map(target);
            CHECK(as_vecs(set.vectors) == expected);

            std::uint64_t denom = 1;
            for (auto x : t) denom *= oracle::factorial(x);
            CHECK(preimage_count(target) == oracle::factorial(n) / denom);
            CHECK(set.vectors.size() == preimage_count(target));

            std::vector<oracle::Vec> weighted;
            for (const auto& v : expected)
                if (oracle::weighted(v) == n) weighted.push_back(v);
            CHECK(as_vecs(constrained_preimages(target, true)) == weighted);
        });
        // the n images n*e_j of constant vectors are not digit vectors
        CHECK(targets + n == table.size());
    }
}

TEST_CASE("target with a component equal to n") {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<Count> c(n, 0);
        c[n - 1] = n;
        const PreimageSet set = inverse_map(ParikhVector(c));
        REQUIRE(set.vectors.size() == 1);
        CHECK(set.vectors.front() == ParikhVector(std::vector<Count>(n, n - 1)));
    }
}

TEST_CASE("early stop of the visitor") {
    std::size_t seen = 0;
    for_each_preimage(pv({1, 2, 1, 0}), false, [&](const ParikhVector&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("multinomial") {
    const std::vector<Count> m{1, 2, 1, 0};
    CHECK(multinomial(m) == 12);
    const std::vector<Count> big{10, 10};
    CHECK(multinomial(big) == 184756);
    const std::vector<Count> huge{30, 30, 30};
    CHECK(multinomial(huge) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("reachability examples") {
    CHECK(reachability_rate(Basis(4), 1).rate_from_alphabetic == 4);
    CHECK(reachability_rate(Basis(4), 1).rate_from_word == 5);
    CHECK(reachability_rate(Basis(7), 1).rate_from_alphabetic == 3);
    CHECK(reachability_rate(Basis(7), 3).rate_from_alphabetic == 5);
    CHECK_THROWS_AS(reachability_rate(Basis(7), 2), NoAttractor);
    CHECK_THROWS_AS(reachability_rate(Basis(3), 1), NoAttractor);
    CHECK_THROWS_AS(reachability_rate(Basis(4), 0), InvalidArgument);
}

TEST_CASE("rates pinned by independent forward oracles") {
    // Every value here was confirmed by brute-force forward iteration over all
    // alphabetic-basis vectors and by explicit witness words.
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pinned{
        {4, 1, 4}, {5, 1, 5}, {6, 2, 8}, {7, 1, 3}, {7, 3, 5}, {8, 1, 4},
        {8, 2, 8}, {9, 1, 5}, {9, 2, 8}, {10, 1, 5}, {10, 2, 8}, {11, 1, 6}, {11, 2, 7}};
    for (const auto& [n, k, rate] : pinned) {
        INFO("n = " << n << ", k = " << k);
        const ReachabilityReport r = reachability_rate(Basis(n), k);
        CHECK(r.rate_from_alphabetic == rate);
        CHECK(r.rate_from_word == rate + 1);
        CHECK_FALSE(r.flagged);
    }
}

TEST_CASE("backward rate equals brute-force forward rate") {
    for (std::size_t n = 4; n <= 7; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
            INFO("n = " << n << ", k = " << k);
            const std::size_t brute = brute_rate(n, k);
            if (brute == 0) {
                CHECK_THROWS_AS(reachability_rate(Basis(n), k), NoAttractor);
                continue;
            }
            CHECK(reachability_rate(Basis(n), k).rate_from_alphabetic == brute);
        }
    }
}

TEST_CASE("backward rate equals the class-based forward sweep") {
    for (std::size_t n = 4; n <= 14; ++n) {
        const ConvergenceReport sweep = verify_convergence_theorem(Basis(n));
        std::map<std::size_t, std::size_t> by_order;
        for (const auto& b : sweep.basins) {
            auto& slot = by_order[b.attractor.order()];
            slot = std::max(slot, b.max_mappings_from_alphabetic);
        }
        for (const auto& [k, rate] : by_order) {
            INFO("n = " << n << ", k = " << k);
            CHECK(reachability_rate(Basis(n), k).rate_from_alphabetic == rate);
        }
    }
}

TEST_CASE("backward levels equal forward distances") {
    for (std::size_t n = 4; n <= 12; ++n) {
        for (const auto& [k, attractors] : find_attractors(Basis(n)).entries) {
            for (const auto& a : attractors) {
                for (std::size_t i = 0; i < a.order(); ++i) {
                    const MemberReach reach = backward_levels(a, i);
                    for (std::size_t m = 0; m < reach.levels.size(); ++m) {
                        for (const auto& v : reach.levels[m]) {
                            CHECK(plain_sum(v) == n);
                            CHECK(weighted_sum(v) == n);
                            ParikhVector x = v;
                            for (std::size_t step = 0; step <= m; ++step) {
                                CHECK_FALSE(a.contains(x));
                                x = basis_map(x);
                            }
                            CHECK(x == a.cycle()[i]);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("witness chains verify forward") {
    for (std::size_t n = 4; n <= 11; ++n) {
        for (const auto& [k, attractors] : find_attractors(Basis(n)).entries) {
            const ReachabilityReport r = reachability_rate(Basis(n), k);
            const WitnessChain w = witness_chain(r);
            INFO("n = " << n << ", k = " << k);
            CHECK(w.valid);
            CHECK(w.problems.empty());
            CHECK(w.chain.size() == r.rate_from_alphabetic);
            CHECK(w.forward_basis_maps + 1 == r.rate_from_alphabetic);
            if (!w.example_word.empty()) {
                const AlphabeticVector av = alphabetic_map(w.example_word);
                CHECK(alphabetic_basis_map(av, Basis(n)) == w.chain.front());
            }
        }
    }
}

TEST_CASE("the worked chain is a maximal chain for n = 4") {
    const ReachabilityReport r = reachability_rate(Basis(4), 1);
    const MemberReach& m = r.members.at(r.witness_member);
    CHECK(m.member == pv({1, 2, 1, 0}));
    CHECK(m.generating_depth == 2);
    REQUIRE(m.levels.size() == 1);
    CHECK(m.levels[0] == std::vector<ParikhVector>{pv({2, 1, 0, 1})});
    const auto level2 = inverse_map(pv({2, 1, 0, 1})).vectors;
    CHECK(std::find(level2.begin(), level2.end(), pv({1, 3, 0, 0})) != level2.end());
    const auto alpha = inverse_map(pv({1, 3, 0, 0})).vectors;
    CHECK(std::find(alpha.begin(), alpha.end(), pv({0, 1, 1, 1})) != alpha.end());
    CHECK(r.levels() == std::vector<std::uint64_t>{1, 1, 12});
}

TEST_CASE("origin parsing") {
    CHECK(parse_origin("alphabetic") == RateOrigin::Alphabetic);
    CHECK(parse_origin("word") == RateOrigin::Word);
    CHECK_THROWS_AS(parse_origin("letters"), ParseError);
}
