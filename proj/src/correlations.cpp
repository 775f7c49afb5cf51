#include "dmqc/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

namespace dmqc {

namespace {

double xlog2x(double x) {
    if (x < -kLogClampTol) {
        throw NumericFailure("negative probability " + std::to_string(x) + " in entropy");
    }
    if (x <= 0.0) {
        return 0.0;
    }
    return x * std::log2(x);
}

double clamp_rounding(double v) { return (v < 0.0 && v > -kLogClampTol) ? 0.0 : v; }

std::array<double, 2> block_eigenvalues(double a, double d, double offdiag_abs) {
    const double mean = 0.5 * (a + d);
    const double half_gap = std::hypot(0.5 * (a - d), offdiag_abs);
    return {mean + half_gap, mean - half_gap};
}

}  // namespace

CMatrix spin_flip(const CMatrix& rho) {
    if (rho.dim() != 4) {
        throw DimensionError("spin_flip: expected a 4x4 matrix");
    }
    const CMatrix yy = kron(pauli_y(), pauli_y());
    return yy * rho.conjugate() * yy;
}

std::array<double, 4> concurrence_roots(const CMatrix& rho) {
    for (const cplx& e : eigvals_general(rho * spin_flip(rho))) {
        if (std::abs(e.imag()) > kEigenImagTol || e.real() < -kEigenImagTol) {
            std::ostringstream msg;
            msg << "concurrence: eigenvalue " << e << " of rho*rho~ is not a non-negative real";
            throw NumericFailure(msg.str());
        }
    }
    // rho = A A^dag and rho~ = B B^dag with B = (Y⊗Y) A*, so the roots are the
    // singular values of A^dag B; this avoids square roots of rounding noise.
    const EigenSystem eig = herm_eig(rho);
    const double cutoff = kRankCutoff * std::max(1.0, eig.values.front());
    CMatrix a(4);
    for (int k = 0; k < 4; ++k) {
        const double p = eig.values[k];
        if (p < -kEigenImagTol) {
            throw NumericFailure("concurrence: rho has eigenvalue " + std::to_string(p));
        }
        const double w = p > cutoff ? std::sqrt(p) : 0.0;
        for (int r = 0; r < 4; ++r) {
            a(r, k) = eig.vectors(r, k) * w;
        }
    }
    const CMatrix b = kron(pauli_y(), pauli_y()) * a.conjugate();
    const auto sv = singular_values(a.adjoint() * b);
    std::array<double, 4> roots{};
    std::copy(sv.begin(), sv.end(), roots.begin());
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

double concurrence(const CMatrix& rho) {
    const auto l = concurrence_roots(rho);
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double vn_entropy(const CMatrix& rho) {
    double s = 0.0;
    for (double p : herm_eigvals(rho)) {
        s -= xlog2x(p);
    }
    return clamp_rounding(s);
}

double binary_entropy(double p) { return clamp_rounding(-xlog2x(p) - xlog2x(1.0 - p)); }

double mutual_information(const CMatrix& rho) {
    return vn_entropy(reduce_to_first(rho)) + vn_entropy(reduce_to_second(rho)) - vn_entropy(rho);
}

void XState::validate() const {
    constexpr double tol = 1e-12;
    const double tr = rho11 + rho22 + rho33 + rho44;
    if (std::abs(tr - 1.0) > tol) {
        throw ContractViolation("XState: diagonal sums to " + std::to_string(tr));
    }
    if (std::min({rho11, rho22, rho33, rho44}) < -tol) {
        throw ContractViolation("XState: negative population");
    }
    const auto root = [](double a, double b) { return std::sqrt(std::max(0.0, a) * std::max(0.0, b)); };
    if (std::abs(rho14) > root(rho11, rho44) + tol || std::abs(rho23) > root(rho22, rho33) + tol) {
        throw ContractViolation("XState: coherence exceeds positivity bound");
    }
}

CMatrix XState::to_matrix() const {
    CMatrix m(4);
    m(0, 0) = rho11;
    m(1, 1) = rho22;
    m(2, 2) = rho33;
    m(3, 3) = rho44;
    m(0, 3) = rho14;
    m(3, 0) = std::conj(rho14);
    m(1, 2) = rho23;
    m(2, 1) = std::conj(rho23);
    return m;
}

std::array<double, 4> XState::eigenvalues() const {
    const auto outer = block_eigenvalues(rho11, rho44, std::abs(rho14));
    const auto inner = block_eigenvalues(rho22, rho33, std::abs(rho23));
    std::array<double, 4> ev{outer[0], outer[1], inner[0], inner[1]};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

XState xstate_from_matrix(const CMatrix& rho, double tol) {
    if (rho.dim() != 4) {
        throw DimensionError("xstate_from_matrix: expected a 4x4 matrix");
    }
    double worst = 0.0;
    int wi = -1;
    int wj = -1;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_pattern = (i == j) || (i + j == 3);
            if (!on_pattern && std::abs(rho(i, j)) > worst) {
                worst = std::abs(rho(i, j));
                wi = i;
                wj = j;
            }
        }
    }
    if (worst >= tol) {
        std::ostringstream msg;
        msg << "matrix is not X-structured: |rho(" << wi + 1 << "," << wj + 1 << ")| = " << worst
            << " >= " << tol;
        throw StructureError(msg.str());
    }
    XState x;
    x.rho11 = rho(0, 0).real();
    x.rho22 = rho(1, 1).real();
    x.rho33 = rho(2, 2).real();
    x.rho44 = rho(3, 3).real();
    x.rho14 = rho(0, 3);
    x.rho23 = rho(1, 2);
    return x;
}

DiscordResult discord_x(const XState& x) {
    x.validate();
    const double h_a = binary_entropy(x.rho11 + x.rho22);
    const double h_b = binary_entropy(x.rho11 + x.rho33);

    double neg_s_ab = 0.0;
    for (double l : x.eigenvalues()) {
        neg_s_ab += xlog2x(l);
    }

    const double coh = std::abs(x.rho14) + std::abs(x.rho23);
    const double bias = 1.0 - 2.0 * (x.rho33 + x.rho44);
    const double tau = 0.5 * (1.0 + std::sqrt(bias * bias + 4.0 * coh * coh));
    const double d1 = binary_entropy(tau);
    const double d2 = -(xlog2x(x.rho11) + xlog2x(x.rho22) + xlog2x(x.rho33) + xlog2x(x.rho44)) - h_b;

    const double cc = std::max(h_a - d1, h_a - d2);
    const double qd = std::min(h_b + neg_s_ab + d1, h_b + neg_s_ab + d2);
    return {clamp_rounding(qd), clamp_rounding(cc)};
}

}  // namespace dmqc
