#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "dmqc/dynamics.hpp"
#include "dmqc/trajectory.hpp"

namespace dmqc::csv {

// 15 significant digits, "%.15g"; negative zero printed as 0.
std::string number(double v);
std::string optional_number(const std::optional<double>& v);

inline constexpr const char* kTrajectoryHeader = "t,concurrence,discord,classical";
inline constexpr const char* kSweepHeader = "axis,D,gamma,t,concurrence,discord,classical";

void write_trajectory(std::ostream& os, std::span<const CorrelationSample> samples);

// Rows only (no header) for one (axis, D, gamma) cell of a sweep.
void write_sweep_rows(std::ostream& os, Axis axis, double strength, double gamma,
                      std::span<const CorrelationSample> samples);

}  // namespace dmqc::csv
