#include "dmqc/trajectory.hpp"

#include <cmath>
#include <string>

#include "dmqc/correlations.hpp"

namespace dmqc {

CorrelationSample measure(const CMatrix& rdm, double t) {
    CorrelationSample s;
    s.t = t;
    s.concurrence = concurrence(rdm);
    try {
        const auto d = discord_x(xstate_from_matrix(rdm, kXStructureTol));
        s.discord = d.discord;
        s.classical = d.classical;
    } catch (const StructureError&) {
    }
    return s;
}

std::vector<double> time_grid(double t_max, int n) {
    if (n < 2) {
        throw DomainError("time grid needs at least 2 samples, got " + std::to_string(n));
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw DomainError("time grid needs a finite t_max > 0");
    }
    std::vector<double> t(n);
    for (int k = 0; k < n; ++k) {
        t[k] = t_max * k / (n - 1);
    }
    return t;
}

std::vector<CorrelationSample> sample_times(const Evolution& evo, const std::vector<double>& times) {
    const int n = static_cast<int>(times.size());
    std::vector<CorrelationSample> out(n);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) {
        out[k] = measure(evo.rdm_at(times[k]), times[k]);
    }
    return out;
}

std::vector<CorrelationSample> trajectory(const InitialState& init, const DMCoupling& c, double t_max, int n,
                                          const TrajectoryOptions& opts) {
    const auto times = time_grid(t_max, n);
    const Evolution evo(init, opts.aux, c, opts.embedding);
    return sample_times(evo, times);
}

std::vector<CorrelationSample> trajectory_serial(const InitialState& init, const DMCoupling& c, double t_max, int n,
                                                 const TrajectoryOptions& opts) {
    const auto times = time_grid(t_max, n);
    const Evolution evo(init, opts.aux, c, opts.embedding);
    std::vector<CorrelationSample> out;
    out.reserve(times.size());
    for (double t : times) {
        out.push_back(measure(evo.rdm_at(t), t));
    }
    return out;
}

}  // namespace dmqc
