#pragma once

// Two-qubit correlation measures: Wootters concurrence for any state,
// quantum discord and classical correlation for X-structured states.

#include <array>
#include <complex>

#include "dmqc/linalg.hpp"

namespace dmqc {

inline constexpr double kEigenImagTol = 1e-9;  // imag part / negativity allowed in eig(rho rho~)
inline constexpr double kLogClampTol = 1e-12;  // log arguments in [-tol, 0] count as 0
inline constexpr double kXStructureTol = 1e-9;  // discord reported only below this
inline constexpr double kRankCutoff = 1e-13;    // eigenvalues of rho treated as zero below this

// (sigma_y ⊗ sigma_y) rho* (sigma_y ⊗ sigma_y)
CMatrix spin_flip(const CMatrix& rho);

// Square roots of the eigenvalues of rho * spin_flip(rho), descending,
// evaluated as singular values of a factorization of rho.
// Throws NumericFailure if an eigenvalue of rho * spin_flip(rho) has
// |imag| > 1e-9 or real < -1e-9.
std::array<double, 4> concurrence_roots(const CMatrix& rho);

double concurrence(const CMatrix& rho);

// -sum p log2 p over the spectrum; 0 log 0 = 0.
double vn_entropy(const CMatrix& rho);

// Binary Shannon entropy in bits.
double binary_entropy(double p);

// S(rho_A) + S(rho_B) - S(rho_AB)
double mutual_information(const CMatrix& rho);

struct XState {
    double rho11 = 0.0;
    double rho22 = 0.0;
    double rho33 = 0.0;
    double rho44 = 0.0;
    cplx rho14{};
    cplx rho23{};

    // Unit trace and 2x2-block positivity, both within 1e-12.
    void validate() const;
    CMatrix to_matrix() const;
    // Spectrum of the X matrix from its two 2x2 blocks, descending.
    std::array<double, 4> eigenvalues() const;
};

// Extracts the X pattern. Throws StructureError naming the largest entry
// outside the pattern if any has magnitude >= tol.
XState xstate_from_matrix(const CMatrix& rho, double tol = kXStructureTol);

struct DiscordResult {
    double discord = 0.0;
    double classical = 0.0;
};

// Closed form for X states (min over the two candidate measurements).
DiscordResult discord_x(const XState& x);

}  // namespace dmqc
