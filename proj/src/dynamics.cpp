#include "dmqc/dynamics.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace dmqc {

namespace {

CMatrix embed(const CMatrix& u, Embedding embedding) {
    const CMatrix id = CMatrix::identity(2);
    return embedding == Embedding::LeadingPair ? kron(u, id) : kron(id, u);
}

}  // namespace

std::string_view to_string(Axis axis) {
    switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
    }
    return "?";
}

Axis parse_axis(std::string_view s) {
    if (s.size() == 1) {
        switch (std::tolower(static_cast<unsigned char>(s[0]))) {
        case 'x': return Axis::X;
        case 'y': return Axis::Y;
        case 'z': return Axis::Z;
        default: break;
        }
    }
    throw DomainError("unknown axis '" + std::string(s) + "' (expected x, y or z)");
}

void DMCoupling::validate() const {
    if (!std::isfinite(strength) || strength < 0.0) {
        throw DomainError("DM strength must be finite and non-negative, got " + std::to_string(strength));
    }
}

CMatrix hamiltonian(const DMCoupling& c) {
    c.validate();
    CMatrix first = pauli_y();
    CMatrix second = pauli_z();
    switch (c.axis) {
    case Axis::X: first = pauli_y(); second = pauli_z(); break;
    case Axis::Y: first = pauli_z(); second = pauli_x(); break;
    case Axis::Z: first = pauli_x(); second = pauli_y(); break;
    }
    return (kron(first, second) - kron(second, first)) * cplx(c.strength);
}

CMatrix propagator(const DMCoupling& c, double t, Embedding embedding) {
    if (!std::isfinite(t)) {
        throw DomainError("propagator: time must be finite");
    }
    return embed(expm_i(hamiltonian(c), t), embedding);
}

CMatrix evolve_rdm(const InitialState& init, const QubitAmplitudes& aux, const DMCoupling& c, double t,
                   Embedding embedding) {
    return Evolution(init, aux, c, embedding).rdm_at(t);
}

Evolution::Evolution(const InitialState& init, const QubitAmplitudes& aux, const DMCoupling& c, Embedding embedding)
    : init_(init),
      coupling_(c),
      embedding_(embedding),
      eig_(herm_eig(hamiltonian(c))),
      rho0_(composite(init.density(), aux_qubit(aux))) {}

CMatrix Evolution::propagator_at(double t) const {
    if (!std::isfinite(t)) {
        throw DomainError("Evolution: time must be finite");
    }
    return embed(expm_i(eig_, t), embedding_);
}

CMatrix Evolution::rdm_at(double t) const {
    const CMatrix u = propagator_at(t);
    return ptrace_last_qubit(u * rho0_ * u.adjoint());
}

}  // namespace dmqc
