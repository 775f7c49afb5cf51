#pragma once

// Dense complex matrices of dimension 2, 4 or 8 (one to three qubits).
// Storage is a fixed-capacity Eigen matrix, so nothing here touches the heap.

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "dmqc/errors.hpp"

namespace dmqc {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 8;

struct Tolerance {
    static constexpr double structural = 1e-10;
    static constexpr double reconstruction = 1e-12;
};

class CMatrix {
public:
    using Storage = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor, kMaxDim, kMaxDim>;

    // Zero matrix.
    explicit CMatrix(int dim);
    explicit CMatrix(const Storage& m);

    static CMatrix zero(int dim) { return CMatrix(dim); }
    static CMatrix identity(int dim);
    static CMatrix diagonal(std::initializer_list<cplx> diag);
    // Row-major literal; the number of entries must be a supported square.
    static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int dim() const { return static_cast<int>(m_.rows()); }

    cplx operator()(int r, int c) const { return m_(r, c); }
    cplx& operator()(int r, int c) { return m_(r, c); }

    const Storage& storage() const { return m_; }

    CMatrix adjoint() const;
    CMatrix conjugate() const;
    CMatrix transpose() const;
    cplx trace() const { return m_.trace(); }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    // Largest entrywise modulus of (this - o).
    double max_abs_diff(const CMatrix& o) const;
    double max_abs() const;

    bool is_hermitian(double tol = Tolerance::structural) const;
    bool is_unitary(double tol = Tolerance::structural) const;
    // Hermitian, unit trace, and no eigenvalue below -tol.
    bool is_density_matrix(double tol = Tolerance::structural) const;

private:
    Storage m_;
};

bool is_supported_dim(int dim);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

// Kronecker product; the result must still fit in 8x8.
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct EigenSystem {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column k pairs with values[k]
};

// Eigendecomposition of a Hermitian matrix. Throws ContractViolation when
// h is not Hermitian within `tol`.
EigenSystem herm_eig(const CMatrix& h, double tol = Tolerance::structural);

// exp(-i h t) from a precomputed eigensystem of h.
CMatrix expm_i(const EigenSystem& eig, double t);
CMatrix expm_i(const CMatrix& h, double t);

// Trace out the last qubit of an 8x8 matrix in A⊗B⊗C ordering.
CMatrix ptrace_last_qubit(const CMatrix& rho);

// Partial traces of a two-qubit matrix: keep the first or the second factor.
CMatrix reduce_to_first(const CMatrix& rho);
CMatrix reduce_to_second(const CMatrix& rho);

// All eigenvalues of a general complex matrix, unordered.
std::vector<cplx> eigvals_general(const CMatrix& m);

// Singular values, descending.
std::vector<double> singular_values(const CMatrix& m);

// Real eigenvalues of a Hermitian matrix, descending (no eigenvectors).
std::vector<double> herm_eigvals(const CMatrix& h, double tol = Tolerance::structural);

}  // namespace dmqc
