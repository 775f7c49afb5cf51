#include "dmqc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dmqc/discord_oracle.hpp"
#include "dmqc/dynamics.hpp"

namespace dmqc {

namespace {

CMatrix faulty_rdm(const Evolution& evo, double t, double fault) {
    CMatrix rho = evo.rdm_at(t);
    rho(0, 0) += fault;
    return rho;
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

QubitAmplitudes random_amplitudes(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double theta = std::acos(1.0 - 2.0 * unit(rng));
    const double phase0 = 2.0 * std::numbers::pi * unit(rng);
    const double phase1 = 2.0 * std::numbers::pi * unit(rng);
    return {std::polar(std::cos(0.5 * theta), phase0), std::polar(std::sin(0.5 * theta), phase1)};
}

XState random_xstate(std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double p[4];
    double sum = 0.0;
    for (double& v : p) {
        v = expo(rng);
        sum += v;
    }
    XState x;
    x.rho11 = p[0] / sum;
    x.rho22 = p[1] / sum;
    x.rho33 = p[2] / sum;
    x.rho44 = 1.0 - x.rho11 - x.rho22 - x.rho33;
    x.rho14 = std::polar(unit(rng) * std::sqrt(x.rho11 * x.rho44), 2.0 * std::numbers::pi * unit(rng));
    x.rho23 = std::polar(unit(rng) * std::sqrt(x.rho22 * x.rho33), 2.0 * std::numbers::pi * unit(rng));
    return x;
}

CheckResult check_amplitude_independence(const VerifyOptions& opts) {
    const std::vector<InitialState> states{InitialState::werner(0.5), InitialState::mems(0.8), InitialState::mems(1.0 / 3.0)};
    const std::vector<double> strengths{0.2, 0.6};
    const std::vector<double> times{0.7, 3.1, 7.9};

    std::mt19937_64 rng(opts.seed);
    std::vector<QubitAmplitudes> amps;
    for (int k = 0; k < opts.aux_samples; ++k) {
        amps.push_back(random_amplitudes(rng));
    }

    double worst = 0.0;
    for (const auto& init : states) {
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            for (double d : strengths) {
                const Evolution reference(init, QubitAmplitudes{}, DMCoupling{axis, d});
                for (const auto& a : amps) {
                    const Evolution evo(init, a, DMCoupling{axis, d});
                    for (double t : times) {
                        worst = std::max(worst, faulty_rdm(evo, t, opts.fault).max_abs_diff(
                                                    faulty_rdm(reference, t, opts.fault)));
                    }
                }
            }
        }
    }
    const double tol = 1e-10;
    return {"amplitude-independence", worst, tol, worst < tol,
            std::to_string(opts.aux_samples) + " random complex amplitudes vs |0>, entrywise RDM difference"};
}

CheckResult check_y_axis_inertness(const VerifyOptions& opts) {
    const std::vector<double> gammas{0.7, 0.85, 1.0, 1.0 / 3.0};
    const auto& g = opts.spectra;
    double worst = 0.0;
    std::string where;
    for (double gamma : gammas) {
        for (double d : g.strengths) {
            const Evolution evo(InitialState::mems(gamma), QubitAmplitudes{}, DMCoupling{Axis::Y, d});
            const double c0 = concurrence(faulty_rdm(evo, 0.0, opts.fault));
            for (int k = 0; k < g.time_points; ++k) {
                const double t = g.t_max * k / (g.time_points - 1);
                const double dev = std::abs(concurrence(faulty_rdm(evo, t, opts.fault)) - c0);
                if (dev > worst) {
                    worst = dev;
                    std::ostringstream os;
                    os << "worst at gamma=" << gamma << " D=" << d << " t=" << t;
                    where = os.str();
                }
            }
        }
    }
    const double tol = 1e-10;
    return {"y-axis-inertness", worst, tol, worst < tol, "MEMS concurrence drift under D_y; " + where};
}

CheckResult check_discord_oracle(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed + 1);
    std::vector<XState> states;
    for (int k = 0; k < opts.discord_states; ++k) {
        states.push_back(random_xstate(rng));
    }
    const int n = static_cast<int>(states.size());
    std::vector<double> dev(n);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
        const CMatrix rho = states[k].to_matrix();
        dev[k] = std::abs(discord_x(states[k]).discord - discord_oracle_serial(rho).discord);
    }
    const double worst = n > 0 ? *std::max_element(dev.begin(), dev.end()) : 0.0;
    const double tol = 1e-6;
    return {"discord-oracle-equivalence", worst, tol, worst < tol,
            std::to_string(n) + " random X states, closed form vs brute-force measurement on qubit B"};
}

VerificationReport run_verification(const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    for (const SpectrumCheck& s : verify_spectra(opts.spectra, opts.fault)) {
        std::string detail = std::to_string(s.points) + " grid points";
        if (!s.note.empty()) {
            detail += "; " + s.note;
        }
        report.checks.push_back(
            {"spectrum/" + std::string(to_string(s.scenario)), s.max_deviation, opts.spectra.tolerance, s.passed, detail});
    }
    report.checks.push_back(check_amplitude_independence(opts));
    report.checks.push_back(check_y_axis_inertness(opts));
    report.checks.push_back(check_discord_oracle(opts));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace dmqc
