#pragma once

// Aggregated self-checks of the model against its closed forms and
// invariance properties. Each check reports a max deviation and tolerance.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dmqc/correlations.hpp"
#include "dmqc/spectra.hpp"

namespace dmqc {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool all_passed() const;
};

struct VerifyOptions {
    SpectrumGrid spectra{};
    int aux_samples = 50;
    int discord_states = 200;
    std::uint64_t seed = 20240611;
    // Added to rho(0,0) of every evolved RDM; nonzero only to test the harness.
    double fault = 0.0;
};

// Random normalized amplitudes with arbitrary complex phases.
QubitAmplitudes random_amplitudes(std::mt19937_64& rng);
// Random valid X state: Dirichlet-like populations, coherences at a random
// fraction of their positivity bound with random phases.
XState random_xstate(std::mt19937_64& rng);

CheckResult check_amplitude_independence(const VerifyOptions& opts);
CheckResult check_y_axis_inertness(const VerifyOptions& opts);
CheckResult check_discord_oracle(const VerifyOptions& opts);

VerificationReport run_verification(const VerifyOptions& opts = {});

}  // namespace dmqc
