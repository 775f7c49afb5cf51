#include "dmqc/esd.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "dmqc/correlations.hpp"

namespace dmqc {

namespace {

struct Candidate {
    std::optional<double> above_before;  // last known t >= threshold before the window
    double first_below;
    double last_below;
    std::optional<double> above_after;
};

// Returns the sub-threshold end of the bracket [above, below] (either order).
double bisect_edge(const std::function<double(double)>& f, double above, double below, double threshold,
                   double resolution) {
    while (std::abs(below - above) > resolution) {
        const double mid = 0.5 * (above + below);
        if (f(mid) < threshold) {
            below = mid;
        } else {
            above = mid;
        }
    }
    return below;
}

double golden_min(const std::function<double(double)>& f, double a, double b, double resolution) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > resolution) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

}  // namespace

std::vector<EsdWindow> detect_esd(std::span<const CorrelationSample> samples,
                                  const std::function<double(double)>& concurrence_at, const EsdOptions& opts) {
    if (!(opts.threshold > 0.0)) {
        throw DomainError("detect_esd: threshold must be positive");
    }
    if (!(opts.resolution > 0.0)) {
        throw DomainError("detect_esd: resolution must be positive");
    }
    for (std::size_t k = 1; k < samples.size(); ++k) {
        if (!(samples[k].t > samples[k - 1].t)) {
            throw DomainError("detect_esd: samples must be strictly time-ordered");
        }
    }

    const double thr = opts.threshold;
    const int n = static_cast<int>(samples.size());
    const auto below = [&](int k) { return samples[k].concurrence < thr; };

    std::vector<Candidate> candidates;

    for (int k = 0; k < n;) {
        if (!below(k)) {
            ++k;
            continue;
        }
        int j = k;
        while (j + 1 < n && below(j + 1)) {
            ++j;
        }
        Candidate c{std::nullopt, samples[k].t, samples[j].t, std::nullopt};
        if (k > 0) {
            c.above_before = samples[k - 1].t;
        }
        if (j + 1 < n) {
            c.above_after = samples[j + 1].t;
        }
        candidates.push_back(c);
        k = j + 1;
    }

    // Dips that fall between samples: every sample is above threshold but the
    // curve may cross it inside the two cells around a discrete minimum.
    for (int k = 1; k + 1 < n; ++k) {
        if (below(k - 1) || below(k) || below(k + 1)) {
            continue;
        }
        const double ck = samples[k].concurrence;
        const double cl = samples[k - 1].concurrence;
        const double cr = samples[k + 1].concurrence;
        if (!(ck <= cl && ck <= cr && (ck < cl || ck < cr))) {
            continue;
        }
        const double t_min = golden_min(concurrence_at, samples[k - 1].t, samples[k + 1].t, opts.resolution);
        if (concurrence_at(t_min) < thr) {
            candidates.push_back({samples[k - 1].t, t_min, t_min, samples[k + 1].t});
        }
    }

    std::vector<EsdWindow> windows;
    for (const Candidate& c : candidates) {
        const double start =
            c.above_before ? bisect_edge(concurrence_at, *c.above_before, c.first_below, thr, opts.resolution) : c.first_below;
        const double end =
            c.above_after ? bisect_edge(concurrence_at, *c.above_after, c.last_below, thr, opts.resolution) : c.last_below;
        if (end > start) {
            windows.push_back({start, end});
        }
    }

    std::sort(windows.begin(), windows.end(), [](const EsdWindow& a, const EsdWindow& b) { return a.t_start < b.t_start; });
    std::vector<EsdWindow> merged;
    for (const EsdWindow& w : windows) {
        if (!merged.empty() && w.t_start <= merged.back().t_end) {
            merged.back().t_end = std::max(merged.back().t_end, w.t_end);
        } else {
            merged.push_back(w);
        }
    }
    return merged;
}

std::vector<EsdWindow> detect_esd(const InitialState& init, const DMCoupling& c, double t_max, int n,
                                  const EsdOptions& opts, const TrajectoryOptions& traj) {
    const Evolution evo(init, traj.aux, c, traj.embedding);
    const auto samples = sample_times(evo, time_grid(t_max, n));
    return detect_esd(samples, [&evo](double t) { return concurrence(evo.rdm_at(t)); }, opts);
}

}  // namespace dmqc
