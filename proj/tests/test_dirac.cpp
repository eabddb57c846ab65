#include <doctest.h>

#include <cmath>

#include "homindex/lattice.hpp"
#include "homindex/numop.hpp"
#include "homindex/schatten.hpp"

using namespace homindex;

TEST_CASE("clifford representations are exact") {
    CliffordRep c1 = clifford_build(1);
    CHECK(c1.generator_count() == 1);
    CHECK(c1.rep_dim() == 1);
    CHECK(c1.gens[0](0, 0) == cdouble(1.0, 0.0));
    CHECK(c1.relation_defect() == 0.0);

    CliffordRep c2 = clifford_build(2);
    CHECK(c2.generator_count() == 3);
    CHECK(c2.rep_dim() == 2);
    CHECK(c2.relation_defect() == 0.0);
    // the three generators are the standard spin matrices
    CHECK(c2.gens[0](0, 1) == cdouble(1.0, 0.0));
    CHECK(c2.gens[1](0, 1) == cdouble(0.0, -1.0));
    CHECK(c2.gens[2](0, 0) == cdouble(1.0, 0.0));
    CHECK(c2.gens[2](1, 1) == cdouble(-1.0, 0.0));

    for (unsigned n : {3u, 4u}) {
        CliffordRep c = clifford_build(n);
        CHECK(c.generator_count() == 2 * n - 1);
        CHECK(c.rep_dim() == (std::size_t(1) << (n - 1)));
        CHECK(c.relation_defect() == 0.0);
    }
    CHECK_THROWS_AS(clifford_build(0), std::invalid_argument);
    CHECK_THROWS_AS(clifford_build(5), std::invalid_argument);
}

TEST_CASE("derivative matrices are anti-hermitian circulants") {
    LatticeSpec spec{1, 8, 2.0};
    for (unsigned axis : {0u, 1u}) {
        CMat d = lattice_derivative(spec, axis);
        CHECK((d + d.adjoint()).max_abs() == 0.0);
    }
    CMat d0 = lattice_derivative(spec, 0);
    CMat d1 = lattice_derivative(spec, 1);
    CHECK((d0 * d1 - d1 * d0).max_abs() == 0.0);
}

TEST_CASE("zero-potential pair is normal and squares to the laplacian") {
    LatticeSpec spec{1, 8, 2.0};
    Potential zero = make_potential("zero", 0.0, 1.0);
    DiracPair pair = dirac_assemble(spec, zero);
    CHECK(pair.adjoint_defect == 0.0);

    CMat lap(spec.site_count());
    for (unsigned axis = 0; axis < 2; ++axis) {
        CMat d = lattice_derivative(spec, axis);
        lap -= d * d;
    }
    const double scale = std::max(1.0, lap.max_abs());
    CHECK(((pair.minus * pair.plus) - lap).max_abs() < 1e-13 * scale);
    CHECK(((pair.plus * pair.minus) - lap).max_abs() < 1e-13 * scale);
    CHECK(((pair.minus * pair.plus) - (pair.plus * pair.minus)).max_abs() < 1e-12 * scale);
}

TEST_CASE("zero-potential normality in four dimensions") {
    LatticeSpec spec{2, 4, 2.0};
    Potential zero = make_potential("zero", 0.0, 1.0);
    DiracPair pair = dirac_assemble(spec, zero);
    CMat lap(spec.site_count());
    for (unsigned axis = 0; axis < 4; ++axis) {
        CMat d = lattice_derivative(spec, axis);
        lap -= d * d;
    }
    CMat lifted = kron(lap, CMat::identity(2));
    const double scale = std::max(1.0, lifted.max_abs());
    CHECK(((pair.minus * pair.plus) - lifted).max_abs() < 1e-12 * scale);
    CHECK(((pair.minus * pair.plus) - (pair.plus * pair.minus)).max_abs() < 1e-12 * scale);
}

TEST_CASE("assembled pair stays adjoint with a potential") {
    LatticeSpec spec{1, 8, 3.0};
    Potential g = make_potential("gaussian", 0.8, 1.5);
    DiracPair pair = dirac_assemble(spec, g);
    CHECK(pair.adjoint_defect < 1e-13);
}

TEST_CASE("budget guard") {
    LatticeSpec spec{2, 8, 2.0}; // 8^4 * 2 = 8192 within default budget
    CHECK_NOTHROW(spec.validate());
    LatticeSpec too_big{2, 12, 2.0}; // 12^4 * 2 = 41472
    Potential zero = make_potential("zero", 0.0, 1.0);
    CHECK_THROWS_AS(dirac_assemble(too_big, zero), std::invalid_argument);
}

TEST_CASE("lattice index vanishes") {
    Potential g = make_potential("gaussian", 0.6, 1.0);
    for (unsigned N : {6u, 8u}) {
        LatticeSpec spec{1, N, 2.0};
        DiracPair pair = dirac_assemble(spec, g);
        BoundedTransform bt = bounded_transform(pair.plus, 1e-8);
        const double idx = homological_index_dense(bt.op, 1);
        CHECK(std::abs(idx) < 1e-9 * double(spec.site_count()));
    }
}

TEST_CASE("spectral inverse power matches the dense eigensolver route") {
    ScalarGrid grid{1, 8, 2.0};
    for (double s : {0.35, 1.0}) {
        CMat spectral = laplacian_inverse_power(grid, s);
        HermitianEig e = hermitian_eig(laplacian_dense(grid));
        CMat dense(grid.site_count());
        for (std::size_t j = 0; j < grid.site_count(); ++j) {
            const double f = std::pow(1.0 + std::max(e.values[j], 0.0), -s);
            for (std::size_t i = 0; i < grid.site_count(); ++i)
                dense(i, j) = e.vectors(i, j) * f;
        }
        dense = dense * e.vectors.adjoint();
        CHECK((spectral - dense).max_abs() < 1e-10);
    }

    ScalarGrid grid2{2, 4, 1.5};
    CMat spectral2 = laplacian_inverse_power(grid2, 0.5);
    CHECK((spectral2 - spectral2.adjoint()).max_abs() < 1e-12);
}

TEST_CASE("decay experiment edge cases") {
    ScalarGrid grid{1, 16, 2.0};
    auto zero_f = [](const std::vector<double>&) { return 0.0; };
    RefinementTable t = schatten_decay_experiment(grid, zero_f, 0.0, 0.25, 2.0, 0.1);
    CHECK(t.rows[0].value == 0.0);
    CHECK(t.rows[1].value == 0.0);

    auto f = [](const std::vector<double>& x) { return 1.0 / (1.0 + x[0] * x[0]); };
    CHECK_THROWS_AS(schatten_decay_experiment(grid, f, 0.0, 0.75, 2.0, 0.1),
                    std::invalid_argument); // s + r beyond m/2
    CHECK_THROWS_AS(schatten_decay_experiment(grid, f, 0.0, 0.25, 3.0, 0.1),
                    std::invalid_argument); // p inconsistent with s + r
}

TEST_CASE("decaying symbol stabilizes, flat symbol grows") {
    ScalarGrid grid{1, 32, 4.0};
    auto f = [](const std::vector<double>& x) { return 1.0 / (1.0 + x[0] * x[0]); };
    RefinementTable stab = schatten_decay_experiment(grid, f, 0.0, 0.25, 2.0, 0.1);
    CHECK(std::abs(stab.ratio - 1.0) < 0.10);

    auto flat = [](const std::vector<double>&) { return 1.0; };
    RefinementTable grow = schatten_decay_experiment(grid, flat, 0.0, 0.5, 1.0, 0.1);
    CHECK(grow.ratio > 1.5);
}

TEST_CASE("scaling family diagnostics") {
    LatticeSpec spec{1, 6, 2.0};
    Potential g = make_potential("inverse-poly", 0.5, 2.0);
    auto rows = scaling_family(spec, g, {0.25, 1.0, 4.0});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(std::abs(row.index_value) < 1e-9 * double(spec.site_count()));
        CHECK(row.transform_defect < 1e-8);
    }
    // large lambda scales the operator away, so the defect difference shrinks
    auto tiny = scaling_family(spec, g, {1.0, 1e6});
    CHECK(tiny[1].difference_norm < tiny[0].difference_norm);
    CHECK(tiny[1].difference_norm < 1e-4);
}
