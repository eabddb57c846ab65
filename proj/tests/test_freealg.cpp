#include <doctest.h>

#include "homindex/evaluate.hpp"
#include "homindex/freepoly.hpp"

using namespace homindex;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

FreePoly random_poly(std::uint64_t& s, std::size_t n_terms, std::size_t max_len) {
    FreePoly p;
    for (std::size_t t = 0; t < n_terms; ++t) {
        std::size_t len = mix(s) % (max_len + 1);
        std::string letters;
        for (std::size_t i = 0; i < len; ++i)
            letters.push_back((mix(s) & 1) ? 'y' : 'x');
        std::int64_t c = (std::int64_t)(mix(s) % 7) - 3;
        p.add_term(Word(letters), GaussQ(c));
    }
    return p;
}

CMat random_mat(std::uint64_t& s, std::size_t d) {
    CMat m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double re = (double)(mix(s) >> 11) * 0x1.0p-53 - 0.5;
            double im = (double)(mix(s) >> 11) * 0x1.0p-53 - 0.5;
            m(i, j) = {2.0 * re, 2.0 * im};
        }
    return m;
}

} // namespace

TEST_CASE("word ordering is degree then lex") {
    CHECK(Word("x") < Word("y"));
    CHECK(Word("y") < Word("xx"));
    CHECK(Word() < Word("x"));
    CHECK(Word("xy") < Word("yx"));
}

TEST_CASE("product basics") {
    FreePoly v = elem_v();
    CHECK(v * FreePoly::x() == FreePoly::x() - FreePoly(Word("xyx")));
    std::uint64_t s = 7;
    FreePoly p = random_poly(s, 5, 3);
    CHECK(FreePoly::one() * p == p);
    FreePoly sum = FreePoly::x() + FreePoly::y();
    FreePoly diff = FreePoly::x() - FreePoly::y();
    FreePoly expect = FreePoly(Word("xx")) - FreePoly(Word("xy")) + FreePoly(Word("yx")) - FreePoly(Word("yy"));
    CHECK(sum * diff == expect);
}

TEST_CASE("ring laws on random polynomials") {
    std::uint64_t s = 42;
    for (int rep = 0; rep < 20; ++rep) {
        FreePoly p = random_poly(s, 4, 3);
        FreePoly q = random_poly(s, 4, 3);
        FreePoly r = random_poly(s, 4, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((q + r) * p == q * p + r * p);
    }
}

TEST_CASE("omega small cases") {
    CHECK(omega(1) == FreePoly::x());
    // omega(2) = x + v*x assembled through the product itself
    FreePoly expect = FreePoly::x() + elem_v() * FreePoly::x();
    CHECK(omega(2) == expect);
    CHECK(omega(2) == GaussQ(2) * FreePoly::x() - FreePoly(Word("xyx")));
    CHECK_THROWS_AS(omega(0), std::invalid_argument);
}

TEST_CASE("omega identities for n = 1..6") {
    const FreePoly v = elem_v();
    const FreePoly w = elem_w();
    for (unsigned n = 1; n <= 6; ++n) {
        FreePoly om = omega(n);
        CHECK(FreePoly::y() * om == FreePoly::one() - w.pow(n));
        CHECK(om * FreePoly::y() == FreePoly::one() - v.pow(n));
        CHECK(v * om == om * w);
    }
}

TEST_CASE("text round trip") {
    FreePoly v = elem_v();
    CHECK(v.str() == "1 - 1*x*y");
    CHECK(FreePoly::parse(v.str()) == v);
    FreePoly zero;
    CHECK(zero.str() == "0");
    CHECK(FreePoly::parse("0") == zero);
    FreePoly mixed = FreePoly(Word("xy"), GaussQ(Rational(1, 2), Rational(-3, 4)))
        + FreePoly(Word(), GaussQ(Rational(0), Rational(1)));
    CHECK(FreePoly::parse(mixed.str()) == mixed);
    std::uint64_t s = 99;
    for (int rep = 0; rep < 10; ++rep) {
        FreePoly p = random_poly(s, 6, 4);
        CHECK(FreePoly::parse(p.str()) == p);
    }
}

TEST_CASE("evaluation basics") {
    std::uint64_t s = 5;
    CMat t = random_mat(s, 4);
    Evaluation ev = evaluation_from_operator(t);

    CMat unit = evaluate(FreePoly::one(), ev);
    CHECK((unit - CMat::identity(4)).max_abs() == 0.0);

    CMat v_img = evaluate(elem_v(), ev);
    CMat expect = CMat::identity(4) - t * t.adjoint();
    CHECK((v_img - expect).max_abs() < 1e-14);

    // w^n - v^n vanishes at the zero operator
    Evaluation ev0(CMat(3), CMat(3));
    for (unsigned n = 1; n <= 3; ++n) {
        FreePoly diff = elem_w().pow(n) - elem_v().pow(n);
        CHECK(evaluate(diff, ev0).max_abs() == 0.0);
    }
}

TEST_CASE("evaluation is a homomorphism") {
    std::uint64_t s = 2024;
    for (int rep = 0; rep < 8; ++rep) {
        CMat ix = random_mat(s, 4);
        CMat iy = random_mat(s, 4);
        Evaluation ev(ix, iy);
        FreePoly p = random_poly(s, 4, 3);
        FreePoly q = random_poly(s, 4, 3);
        CMat lhs = evaluate(p * q, ev);
        CMat rhs = evaluate(p, ev) * evaluate(q, ev);
        CHECK((lhs - rhs).frobenius() < 1e-12 * (1.0 + lhs.frobenius()));
    }
}

TEST_CASE("evaluation dimension mismatch is rejected") {
    CHECK_THROWS_AS(Evaluation(CMat(2), CMat(3)), std::invalid_argument);
}
