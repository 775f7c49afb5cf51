#pragma once

// Entanglement-sudden-death windows: maximal time intervals on which the
// concurrence stays below a threshold.

#include <functional>
#include <span>
#include <vector>

#include "dmqc/dynamics.hpp"
#include "dmqc/trajectory.hpp"

namespace dmqc {

struct EsdWindow {
    double t_start = 0.0;
    double t_end = 0.0;

    double width() const { return t_end - t_start; }
};

struct EsdOptions {
    double threshold = 1e-6;
    // Endpoint bisection and dip minimization stop at this time resolution.
    double resolution = 1e-6;
};

// Candidates come from runs of sub-threshold samples and from grid cells that
// bracket a local minimum (golden-section search on `concurrence_at`). A
// candidate survives only if the refined concurrence actually drops below
// the threshold. Endpoints are bisected against `concurrence_at` and reported
// on the sub-threshold side, so concurrence < threshold on [t_start, t_end].
std::vector<EsdWindow> detect_esd(std::span<const CorrelationSample> samples,
                                  const std::function<double(double)>& concurrence_at, const EsdOptions& opts = {});

// Convenience: samples the trajectory on n points of [0, t_max] and refines
// against the same evolution.
std::vector<EsdWindow> detect_esd(const InitialState& init, const DMCoupling& c, double t_max, int n,
                                  const EsdOptions& opts = {}, const TrajectoryOptions& traj = {});

}  // namespace dmqc
