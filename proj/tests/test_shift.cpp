#include <doctest.h>

#include <cmath>

#include "homindex/shiftop.hpp"

using namespace homindex;

TEST_CASE("inverse-poly index telescopes to -1") {
    ShiftOp op = make_shift_rule("inverse-poly");
    ShiftIndexResult r = homological_index_shift(op, 2, 1e-8);
    CHECK(std::abs(r.value - (-1.0)) <= r.bound);
    CHECK(r.bound < 1e-8 + 1e-12);

    // independent route: raw partial sums of the diagonal far past the cutoff
    double direct = 0.0;
    double prev = 1.0;
    for (std::uint64_t k = 0; k < 1000000; ++k) {
        const double w2 = 1.0 - 1.0 / double(k + 2);
        const double cur = (1.0 - w2) * (1.0 - w2);
        direct += cur - prev;
        prev = cur;
    }
    CHECK(std::abs(direct - r.value) < 1e-7);
}

TEST_CASE("every degree of the inverse-poly rule telescopes") {
    ShiftOp op = make_shift_rule("inverse-poly");
    for (unsigned n = 1; n <= 4; ++n) {
        ShiftIndexResult r = homological_index_shift(op, n, 1e-6);
        CHECK(std::abs(r.value - (-1.0)) <= r.bound + 1e-12);
    }
}

TEST_CASE("isometric weights leave only the boundary term") {
    ShiftOp op = make_shift_rule("one");
    ShiftIndexResult r = homological_index_shift(op, 1, 1e-10);
    CHECK(r.value == -1.0);
    CHECK(r.bound < 1e-9);
}

TEST_CASE("zero weights vanish") {
    ShiftOp op = make_shift_rule("zero");
    ShiftIndexResult r = homological_index_shift(op, 3, 1e-10);
    CHECK(r.value == 0.0);
}

TEST_CASE("non-summable degree is rejected") {
    ShiftOp op = make_shift_rule("alternating-slow");
    CHECK_THROWS_AS(homological_index_shift(op, 1, 1e-6), std::domain_error);
    // degree 2 is fine
    ShiftIndexResult r = homological_index_shift(op, 2, 1e-5);
    CHECK(std::abs(r.value - (-1.0)) <= r.bound + 1e-12);
}

TEST_CASE("commutator diagonal closed form") {
    ShiftOp op = make_shift_rule("inverse-poly");
    // entries 1/(k+1) - 1/(k+2)
    for (std::uint64_t k = 0; k < 5; ++k) {
        const double w2k = op.weight(k) * op.weight(k);
        const double w2p = (k == 0) ? 0.0 : op.weight(k - 1) * op.weight(k - 1);
        CHECK(std::abs((w2k - w2p) - (1.0 / double(k + 1) - 1.0 / double(k + 2))) < 1e-14);
    }
    CommutatorSchattenResult c1 = commutator_schatten_check(op, 2, 1000);
    CommutatorSchattenResult c2 = commutator_schatten_check(op, 2, 10000);
    CHECK(std::abs(c1.value - c2.value) < c1.tail);
    CHECK(c2.tail < c1.tail);
}

TEST_CASE("constant weights concentrate the commutator at the corner") {
    ShiftOp op;
    op.name = "constant";
    op.weight = [](std::uint64_t) { return 0.6; };
    op.remainder_bound = [](unsigned, std::uint64_t) { return 0.0; };
    op.commutator_tail = [](unsigned, std::uint64_t K) { return K >= 1 ? 0.0 : 1.0; };
    CommutatorSchattenResult c = commutator_schatten_check(op, 1, 100);
    CHECK(c.value == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("word walk diagonal") {
    ShiftOp op = make_shift_rule("inverse-poly");
    // y x picks up w_k^2, x y picks up w_{k-1}^2
    FreePoly yx = FreePoly::y() * FreePoly::x();
    FreePoly xy = FreePoly::x() * FreePoly::y();
    for (std::uint64_t k = 0; k < 6; ++k) {
        const double wk = op.weight(k);
        CHECK(shift_diagonal(op, yx, k) == doctest::Approx(wk * wk).epsilon(1e-14));
        const double expected = (k == 0) ? 0.0 : op.weight(k - 1) * op.weight(k - 1);
        CHECK(shift_diagonal(op, xy, k) == doctest::Approx(expected).epsilon(1e-14));
    }
    // unbalanced words have no diagonal part
    CHECK(shift_diagonal(op, FreePoly::x(), 3) == 0.0);
}

TEST_CASE("pairing through the word walk agrees with the index") {
    ShiftOp op = make_shift_rule("inverse-poly");
    ShiftPairingReport rep = pairing_check_shift(op, 2, 1e-8);
    CHECK(std::abs(rep.index.value - (-1.0)) <= rep.index.bound);
    CHECK(std::abs(rep.pairing_value - (-1.0)) <= rep.index.bound + rep.pairing_bound);
    CHECK(rep.residual < 2e-8);

    ShiftPairingReport zero = pairing_check_shift(make_shift_rule("zero"), 2, 1e-8);
    CHECK(zero.index.value == 0.0);
    CHECK(zero.pairing_value == 0.0);
}

TEST_CASE("rule registry") {
    for (const auto& name : shift_rule_names())
        CHECK(make_shift_rule(name).name == name);
    CHECK_THROWS_AS(make_shift_rule("nope"), std::invalid_argument);
    for (const auto& name : shift_family_names()) {
        auto family = make_shift_family(name);
        CHECK(family(0.0).weight(0) <= 1.0);
    }
    CHECK_THROWS_AS(make_shift_family("nope"), std::invalid_argument);
}
