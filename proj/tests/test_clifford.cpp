#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "ahm6/clifford.hpp"
#include "test_util.hpp"

using namespace ahm6;
using ahm6::testing::Rng;
using ahm6::testing::f6;

TEST_CASE("clifford product") {
    CliffordElement e1 = CliffordElement::basis(6, blade_bit(1));
    CliffordElement e2 = CliffordElement::basis(6, blade_bit(2));
    CHECK(clifford_mul(e1, e2) == CliffordElement::basis(6, blade_of({1, 2})));
    CHECK(clifford_mul(e2, e1) == Rat(-1) * CliffordElement::basis(6, blade_of({1, 2})));
    CHECK(clifford_mul(e1, e1) == CliffordElement::scalar(6, Rat(-1)));

    // (e123)^2 = +1 by direct blade multiplication
    CliffordElement e123 = CliffordElement::basis(6, blade_of({1, 2, 3}));
    CHECK(clifford_mul(e123, e123) == CliffordElement::scalar(6, Rat(1)));

    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        CliffordElement a = embed_form(rng.form(6, rng.int_in(1, 3)));
        CliffordElement b = embed_form(rng.form(6, rng.int_in(1, 3)));
        CliffordElement c = embed_form(rng.form(6, rng.int_in(1, 3)));
        CHECK(clifford_mul(clifford_mul(a, b), c) == clifford_mul(a, clifford_mul(b, c)));
    }
}

TEST_CASE("embedding of forms") {
    CHECK(embed_3form(KForm(6, 3)).is_zero());
    CHECK(embed_3form(f6("e123")) == CliffordElement::basis(6, blade_of({1, 2, 3})));
    CliffordElement x = embed_3form(f6("e123 - e356"));
    CHECK(x.coeff(blade_of({1, 2, 3})) == 1);
    CHECK(x.coeff(blade_of({3, 5, 6})) == -1);
    CHECK_THROWS_AS(embed_3form(f6("e12")), std::invalid_argument);
}

TEST_CASE("spin representation") {
    const GammaRep& rep = default_gamma_rep();
    CHECK(gamma_rep_of(CliffordElement::scalar(6, Rat(1)), rep) == RatMatrix::identity(8));
    for (int i = 1; i <= 7; ++i) {
        CliffordElement gi = CliffordElement::basis(7, blade_bit(i));
        CHECK(gamma_rep_of(clifford_mul(gi, gi), rep) == RatMatrix::identity(8) * Rat(-1));
    }
    // consistent with the blade-level square
    CliffordElement e123 = CliffordElement::basis(6, blade_of({1, 2, 3}));
    RatMatrix m = gamma_rep_of(e123, rep);
    CHECK(m * m == RatMatrix::identity(8));

    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        CliffordElement a = embed_form(rng.form(6, rng.int_in(1, 3)));
        CliffordElement b = embed_form(rng.form(6, rng.int_in(1, 3)));
        CHECK(gamma_rep_of(clifford_mul(a, b), rep) == gamma_rep_of(a, rep) * gamma_rep_of(b, rep));
    }
}

TEST_CASE("is_scalar") {
    CHECK(*is_scalar(CliffordElement::scalar(6, rat(5, 2))) == rat(5, 2));
    CHECK(!is_scalar(CliffordElement::basis(6, blade_of({1, 2}))).has_value());
    KForm t = f6("e123 - e356");
    CliffordElement c = embed_3form(t);
    CHECK(!is_scalar(clifford_mul(c, c)).has_value());
    CHECK(*is_scalar(CliffordElement(6)) == 0);
}

TEST_CASE("lambda12 square diagnostics") {
    std::array<Rat, 12> zero{};
    CHECK(lambda12_square_diagnostics(zero) == std::set<Rat>{Rat(0)});

    std::array<Rat, 12> a1{};
    a1[0] = 1;
    auto d1 = lambda12_square_diagnostics(a1);
    CHECK(d1.count(Rat(0)) == 1);
    CHECK(d1.count(Rat(4)) == 1);

    std::array<Rat, 12> a710{};
    a710[6] = 1;
    a710[9] = 1;
    CHECK(lambda12_square_diagnostics(a710).count(Rat(16)) == 1);

    // The diagonal realizes exactly three quadratics plus the invariant
    // kernel plane; the coefficients are forced by tr gamma(T^2) = 8 |T|^2.
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Lambda12Params p = rng.lambda12();
        const auto& a = p.a;
        Rat qp = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] +
                 (a[6] + a[9]) * (a[6] + a[9]) + (a[7] + a[8]) * (a[7] + a[8]);
        Rat qm = a[2] * a[2] + a[3] * a[3] + a[4] * a[4] + a[5] * a[5] +
                 (a[6] - a[9]) * (a[6] - a[9]) + (a[7] - a[8]) * (a[7] - a[8]);
        Rat q1 = a[0] * a[0] + a[1] * a[1] + a[4] * a[4] + a[5] * a[5] +
                 4 * a[10] * a[10] + 4 * a[11] * a[11];
        std::set<Rat> expect = {Rat(0), 4 * q1, 4 * qp, 4 * qm};
        CHECK(lambda12_square_diagnostics(p.a) == expect);

        // trace consistency of the diagnostics
        KForm t = p.to_form();
        RatMatrix m = gamma_rep_of(embed_3form(t));
        CHECK((m * m).trace() == 8 * inner(t, t));
    }
}

TEST_CASE("jacobi scalar check") {
    auto zero = jacobi_scalar_check(KForm(6, 3), {}, {});
    CHECK(zero.has_value());
    CHECK(rat_is_zero(*zero));
    CHECK(!jacobi_scalar_check(f6("e123 - e356"), {}, {}).has_value());
    CHECK_THROWS_AS(jacobi_scalar_check(KForm(6, 3), {f6("e12")}, {}), std::invalid_argument);
}

TEST_CASE("spinor kernel dimension") {
    CHECK(spinor_kernel_dim(KForm(6, 3)) == 8);
    // Lambda^3_12 annihilates the su(3)-invariant spinor plane: the
    // brute-force determinant vanishes on every sample and the generic
    // nullity is 2.
    Rng rng(24);
    int nullity2 = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Lambda12Params p = rng.lambda12();
        if (p.is_zero()) continue;
        RatMatrix m = gamma_rep_of(embed_3form(p.to_form()));
        CHECK(rat_is_zero(m.det()));
        if (spinor_kernel_dim(p.to_form()) == 2) ++nullity2;
    }
    CHECK(nullity2 >= 15);
    // generic 3-forms act invertibly
    int invertible = 0;
    for (int trial = 0; trial < 20; ++trial)
        if (spinor_kernel_dim(rng.form(6, 3)) == 0) ++invertible;
    CHECK(invertible >= 15);
}

TEST_CASE("bad fixture is rejected") {
    std::string path = "/tmp/ahm6_bad_gamma.txt";
    {
        std::ofstream out(path);
        for (int i = 0; i < 7 * 64; ++i) out << (i % 2) << " ";
    }
    CHECK_THROWS_AS(GammaRep::load(path), std::runtime_error);
    CHECK_THROWS_AS(GammaRep::load("/nonexistent/gamma.txt"), std::runtime_error);
    std::remove(path.c_str());
}
