#pragma once

// Closed-form square-root spectra of rho * rho~ for the reduced pair state,
// and a grid comparison of those forms against the numerical dynamics.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dmqc/dynamics.hpp"
#include "dmqc/states.hpp"

namespace dmqc {

enum class Scenario { WernerAnyAxis, Mems1X, Mems1Y, Mems1Z, Mems2X, Mems2Y, Mems2Z };

std::string_view to_string(Scenario s);
inline constexpr std::array<Scenario, 7> kAllScenarios{Scenario::WernerAnyAxis, Scenario::Mems1X, Scenario::Mems1Y,
                                                      Scenario::Mems1Z, Scenario::Mems2X, Scenario::Mems2Y,
                                                      Scenario::Mems2Z};

// The time-dependent entry of the z-axis spectra appears in two functional
// forms: k * |sin(4 D t)| and k * sin^2(4 D t). Only z scenarios use this.
enum class SineForm { Linear, Squared };

// Form in which the closed-form z entry is usually written for the scenario.
// The numerics favour Linear for both cases; see verify_spectra.
SineForm printed_form(Scenario s);

struct SpectrumOracle {
    Scenario scenario = Scenario::WernerAnyAxis;
    double gamma = 0.0;
    double strength = 0.0;

    // Mems1* needs gamma >= 2/3; Mems2* needs gamma < 2/3 and, since the
    // case-2 closed forms carry no gamma, gamma == 1/3. Throws DomainError.
    void validate() const;
};

InitialState initial_state_for(const SpectrumOracle& o);
// Axis implied by the scenario; WernerAnyAxis has none and returns `fallback`.
Axis axis_for(Scenario s, Axis fallback = Axis::X);

// Magnitudes of the closed-form values, descending.
std::array<double, 4> oracle_spectrum(const SpectrumOracle& o, double t, SineForm form = SineForm::Linear);

struct SpectrumGrid {
    std::vector<double> werner_gammas{0.1, 0.5, 0.9};
    std::vector<double> case1_gammas{0.7, 0.85, 1.0};
    std::vector<double> strengths{0.2, 0.4, 0.6};
    double t_max = 10.0;
    int time_points = 50;
    double tolerance = 1e-9;
};

struct SpectrumCheck {
    Scenario scenario = Scenario::WernerAnyAxis;
    std::size_t points = 0;
    // Max |numeric - oracle| using the Linear form (the form the numerics
    // select for z scenarios).
    double max_deviation = 0.0;
    // Same comparison with the printed form; equals max_deviation for
    // non-z scenarios.
    double printed_form_deviation = 0.0;
    bool passed = false;
    std::string note;
};

// `fault` is added to rho(0,0) of every RDM before comparison; it exists to
// exercise the failure path of the report.
std::vector<SpectrumCheck> verify_spectra(const SpectrumGrid& grid = {}, double fault = 0.0);

}  // namespace dmqc
