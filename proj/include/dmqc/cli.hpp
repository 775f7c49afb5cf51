#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dmqc/dynamics.hpp"
#include "dmqc/states.hpp"

namespace dmqc::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIoError = 2, kVerifyFailed = 3 };

struct RunConfig {
    StateKind state = StateKind::Mems;
    double gamma = 0.0;
    Axis axis = Axis::Z;
    double strength = 0.0;
    double t_max = 10.0;
    int samples = 1000;
    double esd_threshold = 1e-6;
    std::string output;  // empty: stdout
    std::optional<QubitAmplitudes> aux;
    Embedding embedding = Embedding::LeadingPair;

    // Throws DomainError with an actionable message.
    void validate() const;
};

// "start:stop:count" -> count evenly spaced values (count >= 1), or a
// comma-separated list. Throws DomainError on malformed input.
std::vector<double> parse_grid(const std::string& spec);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dmqc::cli
