#pragma once

#include <stdexcept>
#include <string>

namespace dmqc {

// Matrix dimension outside {2, 4, 8} or incompatible operands.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input violates a structural precondition (e.g. non-Hermitian to herm_eig).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Physical parameter outside its domain (gamma, amplitudes, strengths).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Iterative routine failed or produced values inconsistent with the math.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix is not X-structured within tolerance.
class StructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dmqc
