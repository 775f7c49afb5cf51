#pragma once

// Brute-force quantum discord for an arbitrary two-qubit state: projective
// measurement on the second qubit along every Bloch direction of a dense
// (theta, phi) grid, then Nelder-Mead refinement from the best grid cells.
// Independent of the X-state closed form; used to check it.

#include "dmqc/linalg.hpp"

namespace dmqc {

struct DiscordOracleOptions {
    int theta_steps = 180;  // theta in [0, pi], theta_steps + 1 points
    int phi_steps = 360;    // phi in [0, 2 pi), phi_steps points
    int refine_starts = 3;  // best grid points refined independently
    double tolerance = 1e-13;
};

struct OracleResult {
    double discord = 0.0;
    double classical = 0.0;
    double min_conditional_entropy = 0.0;
    double theta = 0.0;  // optimal measurement direction
    double phi = 0.0;
};

// sum_k p_k S(rho_A|k) after measuring qubit B along n(theta, phi).
double measured_conditional_entropy(const CMatrix& rho, double theta, double phi);

// Grid rows evaluated in parallel (OpenMP).
OracleResult discord_oracle(const CMatrix& rho, const DiscordOracleOptions& opts = {});
// Single-threaded reference; bit-identical to discord_oracle().
OracleResult discord_oracle_serial(const CMatrix& rho, const DiscordOracleOptions& opts = {});

}  // namespace dmqc
