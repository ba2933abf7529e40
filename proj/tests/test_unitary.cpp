#include <doctest.h>

#include <map>

#include "ahm6/exterior.hpp"
#include "test_util.hpp"

using namespace ahm6;
using ahm6::testing::Rng;
using ahm6::testing::f4;
using ahm6::testing::f6;

TEST_CASE("J pullback") {
    CHECK(j_pullback(kaehler_form(6)) == kaehler_form(6));
    KForm m = f6("e13 - e24");
    CHECK(j_pullback(m) == Rat(-1) * m);
    KForm t = f6("e123 - e356");
    CHECK(j_pullback(t) == hodge(t));
    // involution on 2-forms, complex structure on 3-forms
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        KForm w = rng.form(6, 2);
        CHECK(j_pullback(j_pullback(w)) == w);
        KForm f = rng.form(6, 3);
        CHECK(j_pullback(j_pullback(f)) == Rat(-1) * f);
    }
}

TEST_CASE("u/m splitting") {
    auto [u0, m0] = split_u_m(f4("e12"));
    CHECK(u0 == f4("e12"));
    CHECK(m0.is_zero());
    auto [u1, m1] = split_u_m(f4("e13"));
    CHECK(u1 == Rat(1, 2) * f4("e13 + e24"));
    CHECK(m1 == Rat(1, 2) * f4("e13 - e24"));
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        KForm w = rng.form(6, 2);
        auto [u, m] = split_u_m(w);
        CHECK(u + m == w);
        CHECK(j_pullback(u) == u);
        CHECK(j_pullback(m) == Rat(-1) * m);
    }
    // the u(k) equations w_{2i-1,2j-1} = w_{2i,2j}
    for (const auto& b : u_basis(6)) {
        CHECK(b.coeff(blade_of({1, 3})) == b.coeff(blade_of({2, 4})));
        CHECK(b.coeff(blade_of({1, 5})) == b.coeff(blade_of({2, 6})));
        CHECK(b.coeff(blade_of({3, 5})) == b.coeff(blade_of({4, 6})));
    }
}

TEST_CASE("tau eigenforms") {
    KForm t2 = f6("-e246 + e136 + e145 + e235");
    CHECK(tau(t2) == Rat(3) * hodge(t2));
    KForm t6 = wedge(f6("e1"), kaehler_form(6));
    CHECK(tau(t6) == hodge(t6));
    KForm t12 = f6("e123 - e356");
    CHECK(tau(t12) == Rat(-1) * hodge(t12));
}

TEST_CASE("project_lambda3") {
    KForm b2 = f6("-e246 + e136 + e145 + e235");
    auto s2 = project_lambda3(b2);
    CHECK(s2.t2 == b2);
    CHECK(s2.x.is_zero());
    CHECK(s2.t12.is_zero());

    auto s6 = project_lambda3(f6("e134 + e156"));
    CHECK(s6.t2.is_zero());
    CHECK(s6.x == f6("e1"));
    CHECK(s6.t12.is_zero());

    auto s12 = project_lambda3(f6("e123 - e356"));
    CHECK(s12.t12 == f6("e123 - e356"));
    CHECK(s12.t2.is_zero());
    CHECK(s12.x.is_zero());

    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        KForm t = rng.form(6, 3);
        auto s = project_lambda3(t);
        CHECK(s.t2 + wedge(s.x, kaehler_form(6)) + s.t12 == t);
        CHECK(tau(tau(s.t2)) == Rat(-9) * s.t2);
        CHECK(tau(tau(s.t12)) == Rat(-1) * s.t12);
        CHECK(j_pullback(s.t12) == hodge(s.t12));
    }
}

TEST_CASE("theta and phi") {
    CHECK(theta(KForm(6, 3)).is_zero());
    KForm b2 = f6("-e246 + e136 + e145 + e235");
    IntrinsicTorsion g2 = theta(b2);
    for (int i = 1; i <= 6; ++i) CHECK(g2.gamma(i) == interior(i, b2)); // no projection loss
    CHECK(phi(g2) == Rat(3) * b2);

    // derived composition oracle on Lambda^3_6
    KForm t6 = wedge(f6("e1"), kaehler_form(6));
    IntrinsicTorsion g6 = theta(t6);
    for (int i = 1; i <= 6; ++i) CHECK(g6.gamma(i) == m_part(interior(i, t6)));
    CHECK(phi(g6) == t6);

    for (Blade b : enumerate_blades(4, 3)) {
        KForm f = KForm::basis(4, b);
        CHECK(phi(theta(f)) == f);
    }
}

TEST_CASE("w_projection") {
    // pure W3
    TorsionSplit s = w_projection(theta(f6("e123 - e356")));
    CHECK(s.t12 == f6("e123 - e356"));
    CHECK(s.t2.is_zero());
    CHECK(s.x.is_zero());
    CHECK(s.w2.is_zero());

    // the standard W2 element
    IntrinsicTorsion w2(6);
    w2.set_gamma(1, f6("e14 + e23"));
    w2.set_gamma(2, f6("e13 - e24"));
    TorsionSplit sw = w_projection(w2);
    CHECK(!sw.w2.is_zero());
    CHECK(sw.t2.is_zero());
    CHECK(sw.x.is_zero());
    CHECK(sw.t12.is_zero());
    CHECK(phi(sw.w2).is_zero());

    // reassembly and dimension count 2 + 16 + 12 + 6 = 36
    Rng rng(14);
    for (int trial = 0; trial < 15; ++trial) {
        IntrinsicTorsion g = rng.torsion(6);
        TorsionSplit sp = w_projection(g);
        CHECK(assemble_torsion(sp) == g);
    }
    auto tb = torsion_basis(6);
    CHECK(tb.size() == 36);

    // exact ranks of the four component projectors on R^6 x m^6
    std::vector<std::vector<Rat>> w1_img, w2_img, w3_img, w4_img;
    KForm omega = kaehler_form(6);
    for (const auto& g : tb) {
        TorsionSplit sp = w_projection(g);
        w1_img.push_back(torsion_coords(theta(sp.t2)));
        w2_img.push_back(torsion_coords(sp.w2));
        w3_img.push_back(torsion_coords(theta(sp.t12)));
        w4_img.push_back(torsion_coords(theta(wedge(sp.x, omega))));
    }
    CHECK(span_rank(w1_img) == 2);
    CHECK(span_rank(w2_img) == 16);
    CHECK(span_rank(w3_img) == 12);
    CHECK(span_rank(w4_img) == 6);
}

TEST_CASE("psi") {
    KForm t1 = f6("-e246 + e136 + e145 + e235");
    CHECK(psi(t1, IntrinsicTorsion(6)).is_zero());
    Rng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        KForm p = psi(t1, rng.torsion(6));
        CHECK(j_pullback(p) == p); // u(3) membership
    }
    CHECK_THROWS_AS(psi(f6("e123 - e356"), IntrinsicTorsion(6)), std::invalid_argument);
    CHECK_THROWS_AS(psi(KForm(6, 3), IntrinsicTorsion(6)), std::invalid_argument);
}

TEST_CASE("pi and pi1") {
    KForm omega = kaehler_form(6);
    CHECK(pi_codifferential(theta(wedge(f6("e1"), omega))) == f6("4*e1"));
    CHECK(pi_codifferential(theta(f6("e123 - e356"))).is_zero());
    CHECK(pi_codifferential(theta(f4("e123"))) == f4("2*e3")); // -2 J(*e123) = -2 J(e4)

    KForm b2 = f6("-e246 + e136 + e145 + e235");
    CHECK(pi1_differential(theta(b2)) == Rat(-6) * hodge(b2));
    KForm t6 = wedge(f6("e1"), omega);
    CHECK(pi1_differential(theta(t6)) == Rat(-2) * hodge(t6));
    KForm t12 = f6("e123 - e356");
    CHECK(pi1_differential(theta(t12)) == Rat(2) * hodge(t12));
}

TEST_CASE("nijenhuis embedding") {
    CHECK(nijenhuis_embed(KForm(6, 1), KForm(6, 1), KForm(6, 1)).is_zero());
    IntrinsicTorsion n = nijenhuis_embed(f6("e5"), KForm(6, 1), KForm(6, 1));
    TorsionSplit s = w_projection(n);
    CHECK(s.t12.is_zero());
    CHECK(s.x.is_zero());
    CHECK(in_lambda3_2(phi(n)));
    CHECK(phi(nijenhuis_embed4(f4("e1"))).is_zero());
}

TEST_CASE("gray-hervella classes") {
    GHClass kaehler = gray_hervella_class(IntrinsicTorsion(6));
    CHECK(kaehler.str() == "{}");

    GHClass w1 = gray_hervella_class(theta(f6("-e246 + e136 + e145 + e235")));
    CHECK(w1.str() == "{W1}");

    GHClass w4 = gray_hervella_class(theta(wedge(f6("e1"), kaehler_form(6))));
    CHECK(w4.str() == "{W4}");

    IntrinsicTorsion mixed = theta(f6("e123 - e356")) + theta(wedge(f6("e2"), kaehler_form(6)));
    CHECK(gray_hervella_class(mixed).str() == "{W3,W4}");

    // dim 4: Nijenhuis part is W2, the rest W4
    GHClass c4 = gray_hervella_class(nijenhuis_embed4(f4("e1")));
    CHECK(c4.dim == 4);
    CHECK(c4.str() == "{W2}");
    CHECK(gray_hervella_class(theta(f4("e123"))).str() == "{W4}");
}

TEST_CASE("characteristic torsion") {
    KForm t2 = f6("-e246 + e136 + e145 + e235");
    TorsionSplit s = w_projection(theta(t2));
    KForm tc = characteristic_torsion(s);
    CHECK(tc == Rat(-2) * t2);
    CHECK(tc == Rat(-8) * t2 + j_pullback(Rat(-6) * hodge(t2)));

    KForm t12 = f6("e123 - e356");
    TorsionSplit s12 = w_projection(theta(t12));
    CHECK(characteristic_torsion(s12) == Rat(-2) * t12);
    CHECK(characteristic_torsion(s12) == j_pullback(Rat(2) * hodge(t12)));

    TorsionSplit zero = w_projection(IntrinsicTorsion(6));
    CHECK(characteristic_torsion(zero).is_zero());

    IntrinsicTorsion w2(6);
    w2.set_gamma(1, f6("e14 + e23"));
    w2.set_gamma(2, f6("e13 - e24"));
    CHECK_THROWS_AS(characteristic_torsion(w_projection(w2)), std::domain_error);
}

TEST_CASE("characters") {
    RatMatrix g1(6, 6);
    for (int i = 0; i < 4; ++i) g1.at(i, i) = -1;
    g1.at(4, 4) = g1.at(5, 5) = 1;
    CHECK(character(g1, CharacterSpace::lambda3_12) == 4);
    CHECK(character(g1, CharacterSpace::r6_plus_r6) == -4);

    RatMatrix g2(6, 6);
    g2.at(0, 3) = 1;
    g2.at(1, 2) = -1;
    g2.at(2, 1) = 1;
    g2.at(3, 0) = -1;
    g2.at(4, 4) = g2.at(5, 5) = 1;
    CHECK(character(g2, CharacterSpace::lambda3_12) == 0);
    CHECK(character(g2, CharacterSpace::r6_plus_6r1) == 8);

    // a rotation mixing the complex lines does not preserve the splitting
    RatMatrix bad = RatMatrix::identity(6);
    bad.at(0, 0) = 0; bad.at(0, 2) = 1;
    bad.at(2, 2) = 0; bad.at(2, 0) = 1;
    CHECK_THROWS_AS(character(bad, CharacterSpace::lambda3_12), std::invalid_argument);

    CHECK(trace_j(TraceSpace::r6) == 0);
    CHECK(trace_j(TraceSpace::m6) == -6);
    CHECK(trace_j(TraceSpace::u3) == 9);
}

TEST_CASE("documented character identity of Sym^2(C^3)") {
    // weights of C^3 at diag(z, z, z^-2) are (1, 1, -2); Sym^2 collects the
    // pairwise sums, so the character is 3 z^2 + 2 z^-1 + z^-4.
    std::map<int, int> laurent;
    int weights[3] = {1, 1, -2};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) laurent[weights[i] + weights[j]]++;
    std::map<int, int> expected = {{2, 3}, {-1, 2}, {-4, 1}};
    CHECK(laurent == expected);
}

TEST_CASE("intrinsic torsion type invariants") {
    IntrinsicTorsion g(6);
    CHECK_THROWS_AS(g.set_gamma(1, f6("e12")), std::invalid_argument); // not in m
    g.set_gamma(1, f6("e13 - e24"));
    CHECK(g.gamma_vec(f6("2*e1")) == f6("2*e13 - 2*e24"));
}
