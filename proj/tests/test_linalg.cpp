#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "dmqc/errors.hpp"
#include "dmqc/linalg.hpp"
#include "dmqc/states.hpp"

using namespace dmqc;

namespace {

CMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix a(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            a(r, c) = {n(rng), n(rng)};
        }
    }
    return (a + a.adjoint()) * cplx{0.5, 0.0};
}

// Plain triple loop, independent of the library multiply.
CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < a.dim(); ++c) {
            cplx s{};
            for (int k = 0; k < a.dim(); ++k) {
                s += a(r, k) * b(k, c);
            }
            out(r, c) = s;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("kron of Paulis matches the hand-written 4x4") {
    const cplx i{0.0, 1.0};
    // sigma_x ⊗ sigma_y
    const CMatrix expected = CMatrix::from_rows({{0, 0, 0, -i}, {0, 0, i, 0}, {0, -i, 0, 0}, {i, 0, 0, 0}});
    const CMatrix xy = kron(pauli_x(), pauli_y());
    CHECK(xy.max_abs_diff(expected) == 0.0);
    CHECK(naive_mul(xy, xy).max_abs_diff(CMatrix::identity(4)) == 0.0);
    CHECK((xy * xy).max_abs_diff(naive_mul(xy, xy)) < 1e-15);
}

TEST_CASE("kron respects the most-significant-first ordering") {
    const CMatrix p0 = CMatrix::diagonal({1, 0});
    const CMatrix p1 = CMatrix::diagonal({0, 1});
    const CMatrix m = kron(p0, p1);  // |01><01|
    CHECK(m(1, 1) == cplx{1.0, 0.0});
    CHECK(m.max_abs_diff(CMatrix::diagonal({0, 1, 0, 0})) == 0.0);
    CHECK(kron(kron(p1, p0), p1)(5, 5) == cplx{1.0, 0.0});
}

TEST_CASE("kron beyond three qubits is rejected") {
    CHECK_THROWS_AS(kron(CMatrix::identity(4), CMatrix::identity(4)), DimensionError);
    CHECK_FALSE(is_supported_dim(3));
    CHECK(is_supported_dim(8));
}

TEST_CASE("Pauli algebra") {
    const cplx i{0.0, 1.0};
    CHECK((pauli_x() * pauli_y()).max_abs_diff(pauli_z() * i) == 0.0);
    CHECK((pauli_y() * pauli_z()).max_abs_diff(pauli_x() * i) == 0.0);
    CHECK((pauli_z() * pauli_x()).max_abs_diff(pauli_y() * i) == 0.0);
    for (const auto& p : {pauli_x(), pauli_y(), pauli_z()}) {
        CHECK(p.is_hermitian());
        CHECK(p.is_unitary());
        CHECK(std::abs(p.trace()) == 0.0);
    }
}

TEST_CASE("herm_eig reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(7);
    for (int dim : {2, 4, 8}) {
        for (int rep = 0; rep < 20; ++rep) {
            const CMatrix h = random_hermitian(dim, rng);
            const EigenSystem e = herm_eig(h);
            REQUIRE(e.values.size() == static_cast<std::size_t>(dim));
            CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
            CHECK(e.vectors.is_unitary(1e-12));
            CMatrix lambda(dim);
            for (int k = 0; k < dim; ++k) {
                lambda(k, k) = e.values[k];
            }
            const CMatrix back = e.vectors * lambda * e.vectors.adjoint();
            CHECK(back.max_abs_diff(h) < 1e-12 * std::max(1.0, h.max_abs()) * dim);
            double tr = 0.0;
            for (double v : e.values) {
                tr += v;
            }
            CHECK(tr == doctest::Approx(h.trace().real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
    CMatrix m = CMatrix::identity(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(herm_eig(m), ContractViolation);
}

TEST_CASE("expm_i is unitary and obeys the group law") {
    std::mt19937_64 rng(11);
    for (int dim : {2, 4, 8}) {
        const CMatrix h = random_hermitian(dim, rng);
        const EigenSystem e = herm_eig(h);
        const CMatrix u1 = expm_i(e, 0.37);
        const CMatrix u2 = expm_i(e, 1.21);
        CHECK(u1.is_unitary(1e-12));
        CHECK((u1 * u2).max_abs_diff(expm_i(e, 1.58)) < 1e-12);
        CHECK(expm_i(e, 0.0).max_abs_diff(CMatrix::identity(dim)) < 1e-14);
        CHECK((u1 * expm_i(e, -0.37)).max_abs_diff(CMatrix::identity(dim)) < 1e-12);
    }
}

TEST_CASE("expm_i of a Pauli matches cos/sin") {
    const double t = 0.83;
    const cplx i{0.0, 1.0};
    const CMatrix expected = CMatrix::identity(2) * std::cos(t) - pauli_y() * (i * std::sin(t));
    CHECK(expm_i(pauli_y(), t).max_abs_diff(expected) < 1e-15);
}

TEST_CASE("partial traces of product states") {
    const CMatrix a = werner(0.3);
    const CMatrix c = aux_qubit(cplx{0.6, 0.0}, cplx{0.0, 0.8});
    CHECK(ptrace_last_qubit(kron(a, c)).max_abs_diff(a) < 1e-15);

    const CMatrix r1 = CMatrix::from_rows({{0.7, cplx{0.1, 0.2}}, {cplx{0.1, -0.2}, 0.3}});
    const CMatrix r2 = CMatrix::from_rows({{0.4, 0.1}, {0.1, 0.6}});
    const CMatrix p = kron(r1, r2);
    CHECK(reduce_to_first(p).max_abs_diff(r1) < 1e-15);
    CHECK(reduce_to_second(p).max_abs_diff(r2) < 1e-15);
    CHECK_THROWS_AS(ptrace_last_qubit(a), DimensionError);
}

TEST_CASE("eigvals_general: Jordan block, diagonal and known products") {
    const CMatrix jordan = CMatrix::from_rows({{2.0, 1.0}, {0.0, 2.0}});
    for (const cplx& v : eigvals_general(jordan)) {
        CHECK(std::abs(v - cplx{2.0, 0.0}) < 1e-7);
    }
    auto d = eigvals_general(CMatrix::diagonal({3.0, -1.0, cplx{0.0, 2.0}, 0.5}));
    std::vector<double> re;
    for (const auto& v : d) {
        re.push_back(v.real());
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-1.0));
    CHECK(re[3] == doctest::Approx(3.0));
}

TEST_CASE("herm_eigvals matches herm_eig") {
    std::mt19937_64 rng(3);
    const CMatrix h = random_hermitian(4, rng);
    const auto a = herm_eigvals(h);
    const auto b = herm_eig(h).values;
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-12));
    }
}

TEST_CASE("density-matrix predicate") {
    CHECK(werner(0.5).is_density_matrix());
    CHECK_FALSE(CMatrix::diagonal({1.2, -0.2, 0, 0}).is_density_matrix());
    CHECK_FALSE(CMatrix::diagonal({0.5, 0.4, 0, 0}).is_density_matrix());
}
