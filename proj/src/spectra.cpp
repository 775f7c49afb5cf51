#include "dmqc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "dmqc/correlations.hpp"

namespace dmqc {

namespace {

constexpr double kCaseBoundary = 2.0 / 3.0;
constexpr double kCase2Gamma = 1.0 / 3.0;

bool is_case1(Scenario s) { return s == Scenario::Mems1X || s == Scenario::Mems1Y || s == Scenario::Mems1Z; }
bool is_case2(Scenario s) { return s == Scenario::Mems2X || s == Scenario::Mems2Y || s == Scenario::Mems2Z; }

std::array<double, 4> sorted_abs(std::array<double, 4> v) {
    for (double& x : v) {
        x = std::abs(x);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

double z_entry(double sin4, SineForm form) { return form == SineForm::Linear ? std::abs(sin4) : sin4 * sin4; }

std::vector<double> time_points(double t_max, int n) {
    std::vector<double> t(n);
    for (int k = 0; k < n; ++k) {
        t[k] = n == 1 ? 0.0 : t_max * k / (n - 1);
    }
    return t;
}

double max_diff(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    double d = 0.0;
    for (int k = 0; k < 4; ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

}  // namespace

std::string_view to_string(Scenario s) {
    switch (s) {
    case Scenario::WernerAnyAxis: return "werner";
    case Scenario::Mems1X: return "mems1-x";
    case Scenario::Mems1Y: return "mems1-y";
    case Scenario::Mems1Z: return "mems1-z";
    case Scenario::Mems2X: return "mems2-x";
    case Scenario::Mems2Y: return "mems2-y";
    case Scenario::Mems2Z: return "mems2-z";
    }
    return "?";
}

SineForm printed_form(Scenario s) { return s == Scenario::Mems1Z ? SineForm::Squared : SineForm::Linear; }

void SpectrumOracle::validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw DomainError("SpectrumOracle: gamma outside [0, 1]");
    }
    DMCoupling{Axis::X, strength}.validate();
    if (is_case1(scenario) && gamma < kCaseBoundary) {
        throw DomainError("SpectrumOracle: case-1 scenario requires gamma >= 2/3");
    }
    if (is_case2(scenario)) {
        if (gamma >= kCaseBoundary) {
            throw DomainError("SpectrumOracle: case-2 scenario requires gamma < 2/3");
        }
        if (std::abs(gamma - kCase2Gamma) > 1e-12) {
            throw DomainError("SpectrumOracle: case-2 closed forms are only defined at gamma = 1/3 (unsupported gamma " +
                              std::to_string(gamma) + ")");
        }
    }
}

InitialState initial_state_for(const SpectrumOracle& o) {
    return o.scenario == Scenario::WernerAnyAxis ? InitialState::werner(o.gamma) : InitialState::mems(o.gamma);
}

Axis axis_for(Scenario s, Axis fallback) {
    switch (s) {
    case Scenario::Mems1X:
    case Scenario::Mems2X: return Axis::X;
    case Scenario::Mems1Y:
    case Scenario::Mems2Y: return Axis::Y;
    case Scenario::Mems1Z:
    case Scenario::Mems2Z: return Axis::Z;
    case Scenario::WernerAnyAxis: break;
    }
    return fallback;
}

std::array<double, 4> oracle_spectrum(const SpectrumOracle& o, double t, SineForm form) {
    o.validate();
    const double g = o.gamma;
    const double d = o.strength;
    switch (o.scenario) {
    case Scenario::WernerAnyAxis:
        return sorted_abs({0.25 * (-1.0 + g), 0.25 * (-1.0 + g), 0.25 * (-1.0 + g), 0.25 * (1.0 + 3.0 * g)});
    case Scenario::Mems1X: {
        const double s = std::sin(2.0 * d * t);
        return sorted_abs({0.0, 0.0, g, (-1.0 + g) * s * s});
    }
    case Scenario::Mems1Y: return sorted_abs({0.0, 0.0, 0.0, g});
    case Scenario::Mems1Z: return sorted_abs({0.0, 0.0, g, (-1.0 + g) * z_entry(std::sin(4.0 * d * t), form)});
    case Scenario::Mems2X: {
        const double c = std::cos(4.0 * d * t);
        const double r = std::sqrt(5.0 - 4.0 * c);
        const double denom = 6.0 * std::sqrt(2.0);
        // 3 - r - 2c >= 0 analytically; guard the rounding at c = 1
        return sorted_abs({0.5, 0.0, std::sqrt(std::max(0.0, 3.0 - r - 2.0 * c)) / denom,
                           std::sqrt(3.0 + r - 2.0 * c) / denom});
    }
    case Scenario::Mems2Y: return sorted_abs({0.5, 1.0 / 6.0, 0.0, 0.0});
    case Scenario::Mems2Z: return sorted_abs({0.5, 1.0 / 6.0, 0.0, z_entry(std::sin(4.0 * d * t), form) / 3.0});
    }
    return {};
}

std::vector<SpectrumCheck> verify_spectra(const SpectrumGrid& grid, double fault) {
    struct Cell {
        SpectrumOracle oracle;
        Axis axis;
        double t;
    };

    const auto times = time_points(grid.t_max, grid.time_points);
    std::vector<SpectrumCheck> out;

    for (Scenario sc : kAllScenarios) {
        std::vector<Cell> cells;
        std::vector<double> gammas;
        if (sc == Scenario::WernerAnyAxis) {
            gammas = grid.werner_gammas;
        } else if (is_case1(sc)) {
            gammas = grid.case1_gammas;
        } else {
            gammas = {kCase2Gamma};
        }
        const std::vector<Axis> axes = sc == Scenario::WernerAnyAxis ? std::vector<Axis>{Axis::X, Axis::Y, Axis::Z}
                                                                     : std::vector<Axis>{axis_for(sc)};
        for (double g : gammas) {
            for (double d : grid.strengths) {
                for (Axis ax : axes) {
                    for (double t : times) {
                        cells.push_back({{sc, g, d}, ax, t});
                    }
                }
            }
        }

        const int n = static_cast<int>(cells.size());
        std::vector<double> dev(n, 0.0);
        std::vector<double> dev_printed(n, 0.0);
        std::vector<std::string> errors(n);

#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const Cell& c = cells[i];
            try {
                CMatrix rho = evolve_rdm(initial_state_for(c.oracle), QubitAmplitudes{}, DMCoupling{c.axis, c.oracle.strength},
                                         c.t);
                rho(0, 0) += fault;
                const auto numeric = concurrence_roots(rho);
                dev[i] = max_diff(numeric, oracle_spectrum(c.oracle, c.t, SineForm::Linear));
                dev_printed[i] = max_diff(numeric, oracle_spectrum(c.oracle, c.t, printed_form(sc)));
            } catch (const std::exception& e) {
                errors[i] = e.what();
                dev[i] = dev_printed[i] = INFINITY;
            }
        }

        SpectrumCheck check;
        check.scenario = sc;
        check.points = cells.size();
        for (int i = 0; i < n; ++i) {
            check.max_deviation = std::max(check.max_deviation, dev[i]);
            check.printed_form_deviation = std::max(check.printed_form_deviation, dev_printed[i]);
        }
        check.passed = check.max_deviation < grid.tolerance;

        std::ostringstream note;
        const auto first_error = std::find_if(errors.begin(), errors.end(), [](const std::string& e) { return !e.empty(); });
        if (first_error != errors.end()) {
            note << "numeric failure: " << *first_error << "; ";
        }
        if (sc == Scenario::Mems1Z || sc == Scenario::Mems2Z) {
            const bool printed_ok = check.printed_form_deviation < grid.tolerance;
            note << "printed form (" << (printed_form(sc) == SineForm::Squared ? "sin^2" : "|sin|") << ") "
                 << (printed_ok ? "matches" : "does not match") << " numerics, deviation " << check.printed_form_deviation
                 << "; |sin 4Dt| form deviation " << check.max_deviation;
        }
        check.note = note.str();
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace dmqc
