#include "doctest.h"

#include <cmath>

#include "dmqc/correlations.hpp"
#include "dmqc/errors.hpp"
#include "dmqc/trajectory.hpp"

using namespace dmqc;

TEST_CASE("time grid") {
    const auto t = time_grid(10.0, 5);
    REQUIRE(t.size() == 5);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 10.0);
    CHECK(t[2] == doctest::Approx(5.0));
    CHECK_THROWS_AS(time_grid(10.0, 1), DomainError);
    CHECK_THROWS_AS(time_grid(0.0, 10), DomainError);
}

TEST_CASE("parallel trajectory is bit-identical to the serial reference") {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const auto init = InitialState::mems(1.0 / 3.0);
        const auto p = trajectory(init, {a, 0.3}, 10.0, 257);
        const auto s = trajectory_serial(init, {a, 0.3}, 10.0, 257);
        REQUIRE(p.size() == s.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(p[k].t == s[k].t);
            CHECK(p[k].concurrence == s[k].concurrence);
            CHECK(p[k].discord == s[k].discord);
            CHECK(p[k].classical == s[k].classical);
        }
    }
}

TEST_CASE("Werner concurrence at t = 0") {
    const auto s = trajectory(InitialState::werner(0.6), {Axis::X, 0.6}, 5.0, 3);
    CHECK(s[0].concurrence == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("MEMS anchors without coupling") {
    auto s = trajectory(InitialState::mems(2.0 / 3.0), {Axis::Z, 0.0}, 5.0, 11);
    for (const auto& x : s) {
        CHECK(x.concurrence == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
        REQUIRE(x.discord.has_value());
        CHECK(*x.discord == doctest::Approx(0.5500477595827576).epsilon(1e-10));
    }
    s = trajectory(InitialState::mems(1.0), {Axis::Z, 0.0}, 5.0, 3);
    CHECK(s[1].concurrence == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*s[1].discord == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("z-axis states keep X structure; case-2 x-axis states do not") {
    for (const auto& x : trajectory(InitialState::mems(1.0 / 3.0), {Axis::Z, 0.2}, 10.0, 101)) {
        CHECK(x.discord.has_value());
        CHECK(x.classical.has_value());
        CHECK(std::abs(x.concurrence - (1 - std::abs(std::sin(0.8 * x.t))) / 3) < 1e-10);
    }
    const auto s = trajectory(InitialState::mems(1.0 / 3.0), {Axis::X, 0.2}, 10.0, 11);
    CHECK(s[0].discord.has_value());
    CHECK_FALSE(s[3].discord.has_value());
}

TEST_CASE("case-2 x-axis concurrence closed form") {
    for (const auto& x : trajectory(InitialState::mems(1.0 / 3.0), {Axis::X, 0.2}, 10.0, 101)) {
        const double expected = (3 - std::sqrt(5 - 4 * std::cos(0.8 * x.t))) / 6;
        CHECK(std::abs(x.concurrence - expected) < 1e-10);
    }
}

TEST_CASE("sample_times keeps input order") {
    const Evolution evo(InitialState::mems(0.5), {}, {Axis::Z, 0.4});
    const auto s = sample_times(evo, {3.0, 1.0, 2.0});
    REQUIRE(s.size() == 3);
    CHECK(s[0].t == 3.0);
    CHECK(s[1].t == 1.0);
    CHECK(s[1].concurrence == concurrence(evo.rdm_at(1.0)));
}

TEST_CASE("measure omits discord for non-X states") {
    CMatrix rho = CMatrix::identity(4) * 0.25;
    rho(0, 1) = rho(1, 0) = 0.1;
    const auto s = measure(rho, 1.5);
    CHECK(s.t == 1.5);
    CHECK_FALSE(s.discord.has_value());
    CHECK_FALSE(s.classical.has_value());
}
