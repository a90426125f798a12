#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "parikh/attractors.hpp"
#include "parikh/dynamics.hpp"
#include "parikh/errors.hpp"

using namespace parikh;

namespace {

ParikhVector pv(std::vector<Count> c) { return ParikhVector(std::move(c)); }

} // namespace

TEST_CASE("trajectory of the worked chain") {
    const Trajectory t = iterate(pv({0, 1, 1, 1}));
    REQUIRE(t.terminated_by == Termination::CycleFound);
    const std::vector<ParikhVector> expected{pv({0, 1, 1, 1}), pv({1, 3, 0, 0}), pv({2, 1, 0, 1}),
                                             pv({1, 2, 1, 0}), pv({1, 2, 1, 0})};
    CHECK(t.states == expected);
    CHECK(t.tail_length == 3);
    CHECK(t.cycle_length == 1);
    CHECK(t.mappings() == 4);

    const Trajectory fixed = iterate(pv({1, 2, 1, 0}));
    CHECK(fixed.tail_length == 0);
    CHECK(fixed.cycle_length == 1);
}

TEST_CASE("strict escape is folded into the trajectory") {
    const Trajectory t = iterate(pv({1, 1, 1}));
    CHECK(t.terminated_by == Termination::OutOfRangeError);
    CHECK(t.states.back() == pv({0, 3, 0}));
    REQUIRE(t.escape.has_value());
    CHECK(t.escape->index == 1);
    CHECK(t.escape->value == 3);
    CHECK_FALSE(t.cycle_length.has_value());
}

TEST_CASE("trajectory invariants hold on every state-space start") {
    for (std::size_t n = 4; n <= 12; ++n) {
        for (const auto& v : enumerate_state_space(Basis(n)).vectors) {
            const Trajectory t = iterate(v);
            REQUIRE(t.terminated_by == Termination::CycleFound);
            for (std::size_t i = 0; i + 1 < t.states.size(); ++i)
                CHECK(basis_map(t.states[i]) == t.states[i + 1]);
            const std::size_t end = t.tail_length + *t.cycle_length;
            CHECK(t.states[end] == t.states[t.tail_length]);
            std::set<ParikhVector> seen(t.states.begin(), t.states.begin() + static_cast<long>(end));
            CHECK(seen.size() == end);
        }
    }
}

TEST_CASE("classify examples") {
    auto two = classify(pv({3, 1, 1, 1, 0, 0}));
    REQUIRE(std::holds_alternative<Attractor>(two));
    const auto& a = std::get<Attractor>(two);
    CHECK(a.order() == 2);
    CHECK(a.cycle() == std::vector<ParikhVector>{pv({3, 1, 1, 1, 0, 0}), pv({2, 3, 0, 1, 0, 0})});

    auto three = classify(pv({4, 1, 1, 0, 1, 0, 0}));
    REQUIRE(std::holds_alternative<Attractor>(three));
    CHECK(std::get<Attractor>(three).order() == 3);

    auto out = classify(pv({0, 2}));
    REQUIRE(std::holds_alternative<Divergence>(out));
    CHECK(std::get<Divergence>(out).escape.value == 2);
    CHECK(std::get<Divergence>(out).steps == 0);
}

TEST_CASE("canonical rotation makes cycle identity order-free") {
    const Attractor x = Attractor::from_cycle({pv({3, 1, 1, 1, 0, 0}), pv({2, 3, 0, 1, 0, 0})});
    const Attractor y = Attractor::from_cycle({pv({2, 3, 0, 1, 0, 0}), pv({3, 1, 1, 1, 0, 0})});
    CHECK(x == y);
    CHECK(x.cycle().front() == pv({3, 1, 1, 1, 0, 0}));
    CHECK_THROWS_AS(Attractor::from_cycle({pv({1, 2, 1, 0}), pv({2, 0, 2, 0})}), InvalidArgument);
    CHECK_THROWS_AS(Attractor::from_cycle({pv({1, 2, 1, 0}), pv({1, 2, 1, 0})}), InvalidArgument);
}

TEST_CASE("classification is absorbing along the orbit") {
    for (std::size_t n = 2; n <= 7; ++n) {
        oracle::for_each_digit_vector(n, [&](const oracle::Vec& c) {
            const ParikhVector v(c);
            auto image = try_basis_map(v);
            if (!image) return;
            auto a = classify(v);
            auto b = classify(*image);
            if (std::holds_alternative<Attractor>(a) && std::holds_alternative<Attractor>(b))
                CHECK(std::get<Attractor>(a) == std::get<Attractor>(b));
            else
                CHECK(std::holds_alternative<Divergence>(a) == std::holds_alternative<Divergence>(b));
        });
    }
}

TEST_CASE("sums settle after two maps for strict-valid starts") {
    for (std::size_t n = 2; n <= 7; ++n) {
        oracle::for_each_digit_vector(n, [&](const oracle::Vec& c) {
            const Trajectory t = iterate(ParikhVector(c));
            for (std::size_t i = 2; i < t.states.size(); ++i) {
                if (t.terminated_by == Termination::OutOfRangeError && i + 1 == t.states.size()) break;
                CHECK(plain_sum(t.states[i]) == n);
                CHECK(weighted_sum(t.states[i]) == n);
            }
        });
    }
}

TEST_CASE("step limit") {
    const Trajectory t = iterate(pv({0, 1, 1, 1}), MappingMode::Strict, 2);
    CHECK(t.terminated_by == Termination::StepLimit);
    CHECK_THROWS_AS(classify(pv({0, 1, 1, 1}), MappingMode::Strict, 2), StepLimitExceeded);
}

TEST_CASE("convergence sweep") {
    SUBCASE("n = 4") {
        const ConvergenceReport r = verify_convergence_theorem(Basis(4));
        CHECK(r.state_space_converges());
        CHECK(r.max_steps_state_space <= 2);
        REQUIRE(r.basins.size() == 2);
        CHECK(r.basins[0].attractor.cycle().front() == pv({1, 2, 1, 0}));
        CHECK(r.basins[1].attractor.cycle().front() == pv({2, 0, 2, 0}));
    }
    SUBCASE("n = 7") {
        const ConvergenceReport r = verify_convergence_theorem(Basis(7));
        CHECK(r.orders() == std::vector<std::size_t>{1, 3});
        CHECK(r.state_space_converges());
    }
    SUBCASE("n = 3 has no attractor") {
        const ConvergenceReport r = verify_convergence_theorem(Basis(3));
        CHECK(r.basins.empty());
        CHECK(r.state_space_escapes == r.state_space_size);
        CHECK_FALSE(r.state_space_converges());
    }
    SUBCASE("every strict base from 4 converges") {
        for (std::size_t n = 4; n <= 16; ++n) CHECK(verify_convergence_theorem(Basis(n)).state_space_converges());
    }
    CHECK_THROWS_AS(verify_convergence_theorem(Basis(1)), InvalidArgument);
}

TEST_CASE("sweep counts agree with a brute-force pass over all vectors") {
    // Forward distance from every vector with plain sum n (digits < n) to its
    // cycle, maximised per attractor, must match the class-based sweep.
    for (std::size_t n = 4; n <= 7; ++n) {
        const ConvergenceReport r = verify_convergence_theorem(Basis(n));
        std::map<Attractor, std::size_t> deepest;
        std::size_t escapes = 0;
        oracle::for_each_digit_vector(n, [&](const oracle::Vec& c) {
            if (oracle::plain(c) != n) return;
            auto cls = classify(ParikhVector(c));
            if (std::holds_alternative<Divergence>(cls)) {
                ++escapes;
                return;
            }
            const Trajectory t = iterate(ParikhVector(c));
            auto& d = deepest[std::get<Attractor>(cls)];
            d = std::max(d, t.tail_length);
        });
        for (const auto& b : r.basins) {
            INFO("n = " << n);
            CHECK(deepest[b.attractor] == b.max_steps_generating);
            CHECK(b.max_mappings_from_alphabetic == b.max_steps_generating + 2);
        }
        CHECK((escapes > 0) == (r.generating_escapes > 0));
    }
}
