#pragma once

// Initial states. Basis ordering is |00>, |01>, |10>, |11> with the first
// qubit most significant.

#include "dmqc/linalg.hpp"

namespace dmqc {

// Pure state c0|0> + c1|1> of the auxiliary qubit.
struct QubitAmplitudes {
    cplx c0{1.0, 0.0};
    cplx c1{0.0, 0.0};

    // Throws DomainError unless |c0|^2 + |c1|^2 = 1 within tol.
    void validate(double tol = Tolerance::structural) const;
};

enum class StateKind { Werner, Mems };

class InitialState {
public:
    static InitialState werner(double gamma);
    static InitialState mems(double gamma);

    StateKind kind() const { return kind_; }
    double gamma() const { return gamma_; }

    CMatrix density() const;

private:
    InitialState(StateKind kind, double gamma);

    StateKind kind_;
    double gamma_;
};

// gamma |psi-><psi-| + (1 - gamma) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
CMatrix werner(double gamma);

// Two-branch MEMS family; see mems_g for the branch switch at gamma = 2/3.
CMatrix mems(double gamma);
double mems_g(double gamma);

CMatrix aux_qubit(cplx c0, cplx c1);
CMatrix aux_qubit(const QubitAmplitudes& amps);

// rho_ab ⊗ aux.
CMatrix composite(const CMatrix& rho_ab, const CMatrix& aux);

}  // namespace dmqc
