#pragma once

// DM coupling of one qubit of the pair to an auxiliary qubit, unitary
// evolution of the three-qubit state, and reduction back to the pair.
// Units: hbar = 1, so only the product strength * t is physical.

#include <string_view>

#include "dmqc/linalg.hpp"
#include "dmqc/states.hpp"

namespace dmqc {

enum class Axis { X, Y, Z };

std::string_view to_string(Axis axis);
// Accepts "x", "y", "z" (either case). Throws DomainError otherwise.
Axis parse_axis(std::string_view s);

struct DMCoupling {
    Axis axis = Axis::Z;
    double strength = 0.0;

    // Throws DomainError for negative or non-finite strength.
    void validate() const;
};

// Where the two-qubit DM unitary sits inside the three-qubit register
// (ordering A⊗B⊗C, C is always the factor traced out).
//
// LeadingPair: U ⊗ I. This embedding reproduces the closed-form X-state
//   RDMs (rotation between |01> and |10> of the pair) and makes the pair
//   dynamics exactly independent of the auxiliary amplitudes. Default.
// TrailingPair: I ⊗ U, a genuine B-C coupling. The reduced pair dynamics is
//   then a non-unitary channel on B and depends on the auxiliary state.
enum class Embedding { LeadingPair, TrailingPair };

// D * (sigma ⊗ sigma' - sigma' ⊗ sigma) for the cyclic pair belonging to the
// axis: X -> (y, z), Y -> (z, x), Z -> (x, y). 4x4, Hermitian, traceless.
CMatrix hamiltonian(const DMCoupling& c);

// 8x8 propagator exp(-i H t) embedded per `embedding`.
CMatrix propagator(const DMCoupling& c, double t, Embedding embedding = Embedding::LeadingPair);

// Reduced pair state at time t. Recomputes the propagator on every call.
CMatrix evolve_rdm(const InitialState& init, const QubitAmplitudes& aux, const DMCoupling& c, double t,
                   Embedding embedding = Embedding::LeadingPair);

// Reusable evolution: diagonalizes H once and evaluates the RDM at any t.
// evolve_rdm goes through the same arithmetic, so results are bit-identical.
class Evolution {
public:
    Evolution(const InitialState& init, const QubitAmplitudes& aux, const DMCoupling& c,
              Embedding embedding = Embedding::LeadingPair);

    CMatrix propagator_at(double t) const;
    CMatrix rdm_at(double t) const;

    const DMCoupling& coupling() const { return coupling_; }
    const InitialState& initial_state() const { return init_; }

private:
    InitialState init_;
    DMCoupling coupling_;
    Embedding embedding_;
    EigenSystem eig_;
    CMatrix rho0_;
};

}  // namespace dmqc
