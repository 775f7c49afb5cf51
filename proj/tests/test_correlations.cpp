#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "dmqc/correlations.hpp"
#include "dmqc/errors.hpp"
#include "dmqc/states.hpp"

using namespace dmqc;

namespace {


CMatrix haar_like_unitary2(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    cplx a{n(rng), n(rng)}, b{n(rng), n(rng)};
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    const cplx phase = std::polar(1.0, n(rng));
    return CMatrix::from_rows({{a, -std::conj(b) * phase}, {b, std::conj(a) * phase}});
}

}  // namespace

TEST_CASE("spin flip of a Bell state is itself") {
    const CMatrix bell = mems(1.0);
    CHECK(spin_flip(bell).max_abs_diff(bell) < 1e-15);
    CHECK(spin_flip(CMatrix::diagonal({1, 0, 0, 0})).max_abs_diff(CMatrix::diagonal({0, 0, 0, 1})) < 1e-15);
}

TEST_CASE("concurrence of the Werner family") {
    for (int k = 0; k <= 100; ++k) {
        const double g = k / 100.0;
        CHECK(concurrence(werner(g)) == doctest::Approx(std::max(0.0, (3 * g - 1) / 2)).epsilon(1e-10));
    }
}

TEST_CASE("concurrence of the MEMS family") {
    for (int k = 0; k <= 100; ++k) {
        const double g = k / 100.0;
        CHECK(std::abs(concurrence(mems(g)) - g) < 1e-10);
    }
}

TEST_CASE("square-root spectrum of a Werner state") {
    const auto l = concurrence_roots(werner(0.5));
    CHECK(l[0] == doctest::Approx(std::sqrt(0.390625)));
    for (int k = 1; k < 4; ++k) {
        CHECK(l[k] == doctest::Approx(0.125));
    }
}

TEST_CASE("roots agree with square roots of eig(rho rho~) on full-rank states") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        CMatrix g(4);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                g(r, c) = {n(rng), n(rng)};
            }
        }
        CMatrix rho = g * g.adjoint();
        rho *= 1.0 / rho.trace().real();
        std::vector<double> ref;
        for (const cplx& e : eigvals_general(rho * spin_flip(rho))) {
            ref.push_back(std::sqrt(std::max(0.0, e.real())));
        }
        std::sort(ref.begin(), ref.end(), std::greater<>());
        const auto l = concurrence_roots(rho);
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(l[k] - ref[k]) < 1e-10);
        }
    }
}

TEST_CASE("concurrence rejects non-physical input") {
    CHECK_THROWS_AS(concurrence_roots(CMatrix::diagonal({0.6, -0.1, 0.6, -0.1})), NumericFailure);
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937_64 rng(5);
    for (const CMatrix& rho : {werner(0.7), mems(0.4), mems(0.9)}) {
        for (int rep = 0; rep < 100; ++rep) {
            const CMatrix u = kron(haar_like_unitary2(rng), haar_like_unitary2(rng));
            REQUIRE(u.is_unitary(1e-12));
            const CMatrix r2 = u * rho * u.adjoint();
            CHECK(std::abs(concurrence(r2) - concurrence(rho)) < 1e-9);
        }
    }
}

TEST_CASE("entropies") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(vn_entropy(werner(0.5)) == doctest::Approx(0.625 * std::log2(8.0 / 5.0) + 1.125).epsilon(1e-12));
    CHECK(vn_entropy(werner(0.5)) == doctest::Approx(1.548795).epsilon(1e-6));
    CHECK(vn_entropy(werner(0.0)) == doctest::Approx(2.0));
    CHECK(std::abs(vn_entropy(mems(1.0))) < 1e-12);
    CHECK(mutual_information(mems(1.0)) == doctest::Approx(2.0));
}

TEST_CASE("X-state extraction and validation") {
    const XState x = xstate_from_matrix(mems(0.8));
    CHECK(x.rho11 == doctest::Approx(0.4));
    CHECK(x.rho14.real() == doctest::Approx(0.4));
    CHECK(x.to_matrix().max_abs_diff(mems(0.8)) == 0.0);
    CMatrix bad = mems(0.8);
    bad(0, 1) = 0.01;
    bad(1, 0) = 0.01;
    CHECK_THROWS_AS(xstate_from_matrix(bad), StructureError);
    XState neg = x;
    neg.rho14 = 0.9;
    CHECK_THROWS_AS(neg.validate(), ContractViolation);
}

TEST_CASE("X-state spectrum from blocks") {
    const XState x = xstate_from_matrix(werner(0.5));
    const auto e = x.eigenvalues();
    CHECK(e[0] == doctest::Approx(0.625));
    CHECK(e[3] == doctest::Approx(0.125));
}

TEST_CASE("discord anchors") {
    auto d = discord_x(xstate_from_matrix(mems(2.0 / 3.0)));
    CHECK(d.discord == doctest::Approx(0.5500477595827576).epsilon(1e-12));
    CHECK(d.classical == doctest::Approx(0.3682480744717319).epsilon(1e-12));
    d = discord_x(xstate_from_matrix(mems(1.0 / 3.0)));
    CHECK(d.discord == doctest::Approx(0.1258145836939113).epsilon(1e-12));
    CHECK(d.classical == doctest::Approx(0.25162916738782304).epsilon(1e-12));
    d = discord_x(xstate_from_matrix(mems(0.5)));
    CHECK(d.discord == doctest::Approx(0.3042903712002687).epsilon(1e-12));
    d = discord_x(xstate_from_matrix(mems(1.0)));
    CHECK(d.discord == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.classical == doctest::Approx(1.0).epsilon(1e-12));
    d = discord_x(xstate_from_matrix(CMatrix::diagonal({0.25, 0.25, 0.25, 0.25})));
    CHECK(std::abs(d.discord) < 1e-12);
    CHECK(std::abs(d.classical) < 1e-12);
}

TEST_CASE("discord plus classical correlation equals mutual information") {
    for (double g : {0.0, 0.1, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
        for (const CMatrix& rho : {mems(g), werner(g)}) {
            const auto d = discord_x(xstate_from_matrix(rho));
            CHECK(std::abs(d.discord + d.classical - mutual_information(rho)) < 1e-9);
            CHECK(d.discord >= 0.0);
        }
    }
}
