#include "dmqc/csv.hpp"

#include <cstdio>

namespace dmqc::csv {

std::string number(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string optional_number(const std::optional<double>& v) { return v ? number(*v) : std::string(); }

void write_trajectory(std::ostream& os, std::span<const CorrelationSample> samples) {
    os << kTrajectoryHeader << '\n';
    for (const auto& s : samples) {
        os << number(s.t) << ',' << number(s.concurrence) << ',' << optional_number(s.discord) << ','
           << optional_number(s.classical) << '\n';
    }
}

void write_sweep_rows(std::ostream& os, Axis axis, double strength, double gamma,
                      std::span<const CorrelationSample> samples) {
    for (const auto& s : samples) {
        os << to_string(axis) << ',' << number(strength) << ',' << number(gamma) << ',' << number(s.t) << ','
           << number(s.concurrence) << ',' << optional_number(s.discord) << ',' << optional_number(s.classical)
           << '\n';
    }
}

}  // namespace dmqc::csv
