#pragma once

#include <optional>
#include <vector>

#include "dmqc/dynamics.hpp"
#include "dmqc/states.hpp"

namespace dmqc {

struct CorrelationSample {
    double t = 0.0;
    double concurrence = 0.0;
    // Present only when the RDM is X-structured within kXStructureTol.
    std::optional<double> discord;
    std::optional<double> classical;
};

CorrelationSample measure(const CMatrix& rdm, double t);

struct TrajectoryOptions {
    // Amplitudes do not influence the reduced dynamics; |0> is as good as any.
    QubitAmplitudes aux{};
    Embedding embedding = Embedding::LeadingPair;
};

// n uniform points on [0, t_max], endpoints exact. Throws DomainError unless
// n >= 2 and t_max > 0.
std::vector<double> time_grid(double t_max, int n);

// Samples are computed in parallel (OpenMP) into index-addressed slots.
std::vector<CorrelationSample> trajectory(const InitialState& init, const DMCoupling& c, double t_max, int n,
                                          const TrajectoryOptions& opts = {});

// Single-threaded reference; bit-identical to trajectory().
std::vector<CorrelationSample> trajectory_serial(const InitialState& init, const DMCoupling& c, double t_max, int n,
                                                 const TrajectoryOptions& opts = {});

// Samples at arbitrary times (unordered input allowed, output in input order).
std::vector<CorrelationSample> sample_times(const Evolution& evo, const std::vector<double>& times);

}  // namespace dmqc
