#include "dmqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dmqc {

namespace {

using Work = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

void require_dim(int dim, const char* where) {
    if (!is_supported_dim(dim)) {
        throw DimensionError(std::string(where) + ": unsupported dimension " + std::to_string(dim) +
                             " (expected 2, 4 or 8)");
    }
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* where) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(where) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
}

}  // namespace

bool is_supported_dim(int dim) { return dim == 2 || dim == 4 || dim == 8; }

CMatrix::CMatrix(int dim) {
    require_dim(dim, "CMatrix");
    m_.setZero(dim, dim);
}

CMatrix::CMatrix(const Storage& m) : m_(m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("CMatrix: matrix is not square");
    }
    require_dim(static_cast<int>(m.rows()), "CMatrix");
}

CMatrix CMatrix::identity(int dim) {
    CMatrix r(dim);
    r.m_.setIdentity();
    return r;
}

CMatrix CMatrix::diagonal(std::initializer_list<cplx> diag) {
    CMatrix r(static_cast<int>(diag.size()));
    int k = 0;
    for (cplx v : diag) {
        r.m_(k, k) = v;
        ++k;
    }
    return r;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int n = static_cast<int>(rows.size());
    CMatrix r(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionError("CMatrix::from_rows: ragged or non-square literal");
        }
        int j = 0;
        for (cplx v : row) {
            r.m_(i, j++) = v;
        }
        ++i;
    }
    return r;
}

CMatrix CMatrix::adjoint() const { return CMatrix(Storage(m_.adjoint())); }
CMatrix CMatrix::conjugate() const { return CMatrix(Storage(m_.conjugate())); }
CMatrix CMatrix::transpose() const { return CMatrix(Storage(m_.transpose())); }

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    require_same_dim(*this, o, "operator+");
    m_ += o.m_;
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    require_same_dim(*this, o, "operator-");
    m_ -= o.m_;
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    m_ *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "operator*");
    return CMatrix(CMatrix::Storage(a.m_ * b.m_));
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    require_same_dim(*this, o, "max_abs_diff");
    return (m_ - o.m_).cwiseAbs().maxCoeff();
}

double CMatrix::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

bool CMatrix::is_hermitian(double tol) const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

bool CMatrix::is_unitary(double tol) const {
    const Storage prod = m_ * m_.adjoint();
    return (prod - Storage::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

bool CMatrix::is_density_matrix(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    if (std::abs(trace() - cplx(1.0, 0.0)) > tol) {
        return false;
    }
    const auto ev = herm_eigvals(*this, tol);
    return ev.back() >= -tol;
}

CMatrix pauli_x() { return CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
CMatrix pauli_y() { return CMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}); }
CMatrix pauli_z() { return CMatrix::diagonal({1.0, -1.0}); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    if (na * nb > kMaxDim) {
        throw DimensionError("kron: result dimension " + std::to_string(na * nb) + " exceeds " +
                             std::to_string(kMaxDim));
    }
    CMatrix r(na * nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < nb; ++k) {
                for (int l = 0; l < nb; ++l) {
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

EigenSystem herm_eig(const CMatrix& h, double tol) {
    if (!h.is_hermitian(tol)) {
        throw ContractViolation("herm_eig: input is not Hermitian within " + std::to_string(tol));
    }
    const int n = h.dim();
    Eigen::SelfAdjointEigenSolver<Work> solver(Work(h.storage()), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("herm_eig: tridiagonal QR did not converge");
    }
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals(a) > vals(b); });

    EigenSystem out{std::vector<double>(n), CMatrix(n)};
    for (int k = 0; k < n; ++k) {
        out.values[k] = vals(order[k]);
        for (int r = 0; r < n; ++r) {
            out.vectors(r, k) = vecs(r, order[k]);
        }
    }
    return out;
}

CMatrix expm_i(const EigenSystem& eig, double t) {
    const int n = eig.vectors.dim();
    const auto& v = eig.vectors.storage();
    CMatrix::Storage phased = v;
    for (int k = 0; k < n; ++k) {
        const double theta = -eig.values[k] * t;
        phased.col(k) *= cplx(std::cos(theta), std::sin(theta));
    }
    return CMatrix(CMatrix::Storage(phased * v.adjoint()));
}

CMatrix expm_i(const CMatrix& h, double t) { return expm_i(herm_eig(h), t); }

CMatrix ptrace_last_qubit(const CMatrix& rho) {
    if (rho.dim() != 8) {
        throw DimensionError("ptrace_last_qubit: expected an 8x8 matrix, got " + std::to_string(rho.dim()));
    }
    CMatrix out(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

CMatrix reduce_to_first(const CMatrix& rho) {
    if (rho.dim() != 4) {
        throw DimensionError("reduce_to_first: expected a 4x4 matrix");
    }
    CMatrix out(2);
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            out(a, c) = rho(2 * a, 2 * c) + rho(2 * a + 1, 2 * c + 1);
        }
    }
    return out;
}

CMatrix reduce_to_second(const CMatrix& rho) {
    if (rho.dim() != 4) {
        throw DimensionError("reduce_to_second: expected a 4x4 matrix");
    }
    CMatrix out(2);
    for (int b = 0; b < 2; ++b) {
        for (int d = 0; d < 2; ++d) {
            out(b, d) = rho(b, d) + rho(2 + b, 2 + d);
        }
    }
    return out;
}

std::vector<cplx> eigvals_general(const CMatrix& m) {
    Eigen::ComplexEigenSolver<Work> solver(Work(m.storage()), false);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("eigvals_general: Schur QR iteration did not converge for a " + std::to_string(m.dim()) +
                             "x" + std::to_string(m.dim()) + " matrix (max |entry| = " +
                             std::to_string(m.max_abs()) + ")");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

std::vector<double> singular_values(const CMatrix& m) {
    Eigen::JacobiSVD<Work> svd(Work(m.storage()));
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> herm_eigvals(const CMatrix& h, double tol) {
    if (!h.is_hermitian(tol)) {
        throw ContractViolation("herm_eigvals: input is not Hermitian within " + std::to_string(tol));
    }
    Eigen::SelfAdjointEigenSolver<Work> solver(Work(h.storage()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("herm_eigvals: tridiagonal QR did not converge");
    }
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + h.dim());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace dmqc
