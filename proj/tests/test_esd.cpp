#include "doctest.h"

#include <cmath>

#include "dmqc/esd.hpp"

using namespace dmqc;

namespace {

std::vector<CorrelationSample> sample(const std::function<double(double)>& f, double t_max, int n) {
    std::vector<CorrelationSample> out;
    for (int k = 0; k < n; ++k) {
        const double t = t_max * k / (n - 1);
        out.push_back({t, f(t), std::nullopt, std::nullopt});
    }
    return out;
}

}  // namespace

TEST_CASE("flat-bottom window on a synthetic curve") {
    const auto f = [](double t) { return std::max(0.0, std::abs(t - 5.0) - 1.0); };
    const auto w = detect_esd(sample(f, 10.0, 101), f);
    REQUIRE(w.size() == 1);
    CHECK(w[0].t_start == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(w[0].t_end == doctest::Approx(6.0).epsilon(1e-5));
    CHECK(f(w[0].t_start) < 1e-6);
    CHECK(f(w[0].t_end) < 1e-6);
}

TEST_CASE("window narrower than the grid is found by dip refinement") {
    const auto f = [](double t) { return std::abs(t - 3.3333); };
    const auto w = detect_esd(sample(f, 10.0, 11), f);
    REQUIRE(w.size() == 1);
    CHECK(w[0].t_start < 3.3333);
    CHECK(w[0].t_end > 3.3333);
    CHECK(w[0].width() < 1e-5);
}

TEST_CASE("a dip that stays above threshold is not a window") {
    const auto f = [](double t) { return 0.01 + std::abs(std::sin(t)); };
    CHECK(detect_esd(sample(f, 10.0, 201), f).empty());
}

TEST_CASE("window touching the interval edge") {
    const auto f = [](double t) { return std::max(0.0, t - 2.0); };
    const auto w = detect_esd(sample(f, 10.0, 51), f);
    REQUIRE(w.size() == 1);
    CHECK(w[0].t_start == 0.0);
    CHECK(w[0].t_end == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("case-2 z-axis windows at D = 0.2 and D = 0.3") {
    const auto init = InitialState::mems(1.0 / 3.0);
    auto w = detect_esd(init, {Axis::Z, 0.2}, 10.0, 1001);
    REQUIRE_FALSE(w.empty());
    CHECK(w[0].t_start < M_PI / 1.6);
    CHECK(w[0].t_end > M_PI / 1.6);
    CHECK(w[0].width() < 0.01);
    w = detect_esd(init, {Axis::Z, 0.3}, 20.0, 2001);
    CHECK(w.size() == 8);
    w = detect_esd(init, {Axis::X, 0.3}, 20.0, 2001);
    CHECK(w.size() == 4);
}

TEST_CASE("case 1 has no windows along x and z") {
    for (double g : {2.0 / 3.0, 0.8, 1.0}) {
        for (Axis a : {Axis::X, Axis::Z}) {
            CHECK(detect_esd(InitialState::mems(g), {a, 0.4}, 10.0, 501).empty());
        }
    }
}

TEST_CASE("case 1 along y touches zero") {
    CHECK_FALSE(detect_esd(InitialState::mems(0.8), {Axis::Y, 0.4}, 10.0, 501).empty());
}
