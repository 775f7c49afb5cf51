#include "dmqc/states.hpp"

#include <cmath>
#include <string>

namespace dmqc {

namespace {

void require_gamma(double gamma, const char* where) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw DomainError(std::string(where) + ": gamma must lie in [0, 1], got " + std::to_string(gamma));
    }
}

}  // namespace

void QubitAmplitudes::validate(double tol) const {
    const double norm = std::norm(c0) + std::norm(c1);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol) {
        throw DomainError("auxiliary amplitudes not normalized: |c0|^2 + |c1|^2 = " + std::to_string(norm));
    }
}

InitialState::InitialState(StateKind kind, double gamma) : kind_(kind), gamma_(gamma) {
    require_gamma(gamma, "InitialState");
}

InitialState InitialState::werner(double gamma) { return InitialState(StateKind::Werner, gamma); }
InitialState InitialState::mems(double gamma) { return InitialState(StateKind::Mems, gamma); }

CMatrix InitialState::density() const { return kind_ == StateKind::Werner ? dmqc::werner(gamma_) : dmqc::mems(gamma_); }

CMatrix werner(double gamma) {
    require_gamma(gamma, "werner");
    CMatrix rho = CMatrix::identity(4) * cplx((1.0 - gamma) / 4.0);
    // singlet projector: 1/2 on the |01>,|10> block with -1/2 coherences
    rho(1, 1) += gamma / 2.0;
    rho(2, 2) += gamma / 2.0;
    rho(1, 2) -= gamma / 2.0;
    rho(2, 1) -= gamma / 2.0;
    return rho;
}

double mems_g(double gamma) {
    require_gamma(gamma, "mems_g");
    return gamma >= 2.0 / 3.0 ? gamma / 2.0 : 1.0 / 3.0;
}

CMatrix mems(double gamma) {
    const double g = mems_g(gamma);
    CMatrix rho(4);
    rho(0, 0) = g;
    rho(1, 1) = 1.0 - 2.0 * g;
    rho(3, 3) = g;
    rho(0, 3) = gamma / 2.0;
    rho(3, 0) = gamma / 2.0;
    return rho;
}

CMatrix aux_qubit(cplx c0, cplx c1) { return aux_qubit(QubitAmplitudes{c0, c1}); }

CMatrix aux_qubit(const QubitAmplitudes& amps) {
    amps.validate();
    const cplx psi[2] = {amps.c0, amps.c1};
    CMatrix rho(2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            rho(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return rho;
}

CMatrix composite(const CMatrix& rho_ab, const CMatrix& aux) {
    if (rho_ab.dim() != 4 || aux.dim() != 2) {
        throw DimensionError("composite: expected a 4x4 pair state and a 2x2 auxiliary state");
    }
    if (!rho_ab.is_density_matrix() || !aux.is_density_matrix()) {
        throw ContractViolation("composite: both factors must be density matrices");
    }
    return kron(rho_ab, aux);
}

}  // namespace dmqc
