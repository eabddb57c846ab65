#include <doctest.h>

#include <cmath>

#include "homindex/numop.hpp"

using namespace homindex;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform(std::uint64_t& s) { return (double)(mix(s) >> 11) * 0x1.0p-53; }

CMat random_mat(std::uint64_t& s, std::size_t d) {
    CMat m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = {2.0 * uniform(s) - 1.0, 2.0 * uniform(s) - 1.0};
    return m;
}

CMat random_hermitian(std::uint64_t& s, std::size_t d) {
    CMat m = random_mat(s, d);
    CMat h(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

} // namespace

TEST_CASE("dense index vanishes in finite dimension") {
    std::uint64_t s = 3;
    for (int rep = 0; rep < 10; ++rep) {
        CMat t = random_mat(s, 8);
        for (unsigned n = 1; n <= 3; ++n)
            CHECK(std::abs(homological_index_dense(t, n)) < 1e-10);
    }
    // unitary: both defect operators vanish identically
    CMat u(3);
    u(0, 1) = 1.0; u(1, 2) = 1.0; u(2, 0) = 1.0;
    CHECK(homological_index_dense(u, 2) == 0.0);
    CHECK(homological_index_dense(CMat(5), 3) == 0.0);
}

TEST_CASE("bounded transform of a diagonal matrix") {
    CMat d(3);
    d(0, 0) = 1.0; d(1, 1) = -2.0; d(2, 2) = 0.5;
    BoundedTransform bt = bounded_transform(d);
    for (std::size_t i = 0; i < 3; ++i) {
        const double di = d(i, i).real();
        CHECK(std::abs(bt.op(i, i).real() - di / std::sqrt(1.0 + di * di)) < 1e-13);
    }
    CHECK(bt.defect_plus < 1e-12);
    CHECK(bt.defect_minus < 1e-12);

    BoundedTransform zero = bounded_transform(CMat(4));
    CHECK(zero.op.max_abs() == 0.0);
}

TEST_CASE("bounded transform residuals on random input") {
    std::uint64_t s = 7;
    for (int rep = 0; rep < 6; ++rep) {
        CMat d = random_mat(s, 6);
        BoundedTransform bt = bounded_transform(d);
        CHECK(bt.defect_plus < 1e-10);
        CHECK(bt.defect_minus < 1e-10);
        CHECK(operator_norm(bt.op) <= 1.0 + 1e-12);
    }
}

TEST_CASE("inverse square root at the origin") {
    InverseSqrtResult r = inverse_sqrt_quadrature(CMat(1) , 1e-8);
    CHECK(std::abs(r.value(0, 0).real() - 1.0) < 1e-8);
    CHECK(r.error_estimate < 1e-6);
}

TEST_CASE("inverse square root of diag(1)") {
    CMat d(1);
    d(0, 0) = 1.0;
    InverseSqrtResult r = inverse_sqrt_quadrature(d, 1e-8);
    CHECK(std::abs(r.value(0, 0).real() - 1.0 / std::sqrt(2.0)) < 1e-8);
}

TEST_CASE("inverse square root matches the eigendecomposition oracle") {
    std::uint64_t s = 13;
    for (int rep = 0; rep < 3; ++rep) {
        CMat d = random_hermitian(s, 8);
        InverseSqrtResult r = inverse_sqrt_quadrature(d, 1e-7);
        HermitianEig e = hermitian_eig(d * d);
        CMat oracle = hermitian_function(e, [](double lam) { return 1.0 / std::sqrt(1.0 + lam); });
        CHECK((r.value - oracle).max_abs() < 1e-6);
        CHECK((r.value - oracle).max_abs() < r.error_estimate + 1e-9);
    }
    CHECK_THROWS_AS(inverse_sqrt_quadrature(random_mat(s, 4), 1e-6), std::invalid_argument);
}

TEST_CASE("resolvent identities") {
    std::uint64_t s = 17;
    CMat d = random_hermitian(s, 6);
    CMat a = random_hermitian(s, 6);

    SUBCASE("coincident parameters vanish") {
        ResolventReport rep = resolvent_suite(d, a, 0.7, 0.7, 1.0);
        CHECK(rep.max_residual < 1e-14);
    }
    SUBCASE("no perturbation vanishes") {
        ResolventReport rep = resolvent_suite(d, CMat(6), 0.0, 1.0, 2.0);
        CHECK(rep.max_residual < 1e-14);
    }
    SUBCASE("random pair") {
        ResolventReport rep = resolvent_suite(d, a, 0.0, 1.0, 1.0);
        CHECK(rep.max_residual < 1e-10);
    }
    SUBCASE("hermitian inputs required") {
        CHECK_THROWS_AS(resolvent_suite(random_mat(s, 4), CMat(4), 0.0, 1.0, 1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("derivative formulas with richardson ratios") {
    std::uint64_t s = 23;
    SUBCASE("zero perturbation is exact") {
        CMat d = random_hermitian(s, 5);
        DerivativeReport rep = derivative_suite(d, CMat(5), 1.0, 2, 1e-4);
        CHECK(rep.x_residual_h == 0.0);
        CHECK(rep.r_residual_h == 0.0);
        CHECK(rep.rn_residual_h == 0.0);
    }
    SUBCASE("scalar case has vanishing first derivative at zero") {
        CMat d(1), a(1);
        a(0, 0) = 1.0;
        // R_t = 1/(1+t^2) so dR/dt = 0 at t = 0; the finite difference agrees
        DerivativeReport rep = derivative_suite(d, a, 1.0, 1, 1e-4);
        const CMat r0 = CMat::identity(1);
        CHECK(rep.r_residual_h < 1e-8);
    }
    SUBCASE("order two convergence") {
        CMat d = random_hermitian(s, 6);
        CMat a = random_hermitian(s, 6);
        DerivativeReport rep = derivative_suite(d, a, 1.0, 2, 1e-4);
        CHECK(rep.x_ratio() == doctest::Approx(4.0).epsilon(0.15));
        CHECK(rep.r_ratio() == doctest::Approx(4.0).epsilon(0.15));
        CHECK(rep.rn_ratio() == doctest::Approx(4.0).epsilon(0.15));
    }
}

TEST_CASE("chain norm upper bound") {
    const std::size_t d = 4;
    std::vector<std::vector<CMat>> single{{CMat::identity(d), CMat::identity(d)}};
    KnChainNorm v = kn_norm_upper(single, 1);
    CHECK(v.value == doctest::Approx(2.0 * d + 1.0).epsilon(1e-12));

    std::vector<std::vector<CMat>> zero{{CMat(d), CMat(d)}};
    CHECK(kn_norm_upper(zero, 1).value == 0.0);

    CHECK_THROWS_AS(kn_norm_upper({{CMat(2)}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(kn_norm_upper({{CMat(2), CMat(3)}}, 1), std::invalid_argument);

    // the trace functional is dominated by the degree-0 norm
    std::uint64_t s = 31;
    for (int rep = 0; rep < 5; ++rep) {
        CMat x = random_mat(s, 6);
        const double tr = std::abs(x.trace());
        CHECK(tr <= kn_norm_upper({{x}}, 0).value + 1e-10);
    }
}

TEST_CASE("trace is a cocycle") {
    CMat a(3), b(3);
    a(0, 0) = 2.0; a(1, 1) = -1.0; a(2, 2) = 0.5;
    b(0, 0) = 1.0; b(1, 1) = 3.0; b(2, 2) = -2.0;
    CHECK(trace_cocycle_check(a, b) == 0.0);

    std::uint64_t s = 37;
    for (int rep = 0; rep < 5; ++rep) {
        CMat x = random_mat(s, 16);
        CMat y = random_mat(s, 16);
        const double scale = 16.0 * x.frobenius() * y.frobenius();
        CHECK(trace_cocycle_check(x, y) < 1e-10 * std::max(1.0, scale));
        CHECK(trace_cocycle_check(x, x.adjoint()) < 1e-10 * std::max(1.0, scale));
    }
}

TEST_CASE("dense pairing matches the index") {
    std::uint64_t s = 41;
    for (int rep = 0; rep < 5; ++rep) {
        CMat t = random_mat(s, 6);
        PairingReport rep2 = pairing_check_dense(t, 2);
        CHECK(rep2.residual < 1e-10);
        CHECK(std::abs(rep2.index_value) < 1e-10);
    }
    PairingReport zero = pairing_check_dense(CMat(4), 2);
    CHECK(zero.index_value == 0.0);
    CHECK(zero.pairing_value == 0.0);
}
