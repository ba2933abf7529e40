#include <doctest.h>

#include "ahm6/clifford.hpp"
#include "ahm6/exterior.hpp"
#include "ahm6/homogeneous.hpp"
#include "test_util.hpp"

using namespace ahm6;
using ahm6::testing::Rng;
using ahm6::testing::f6;

TEST_CASE("flat case algebra") {
    CHECK(flat_case_algebra(KForm(6, 3)).is_abelian());

    LieAlgebraTable t = flat_case_algebra(f6("e123"));
    CHECK(t.jacobi_defect().second);
    // brackets close on span{e1, e2, e3}: [e1, e2] = -e3
    CHECK(t.bracket_basis(0, 1) == std::vector<Rat>({0, 0, -1, 0, 0, 0}));
    for (int i = 3; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (const auto& v : t.bracket_basis(i, j)) CHECK(rat_is_zero(v));

    CHECK(!flat_case_algebra(f6("e123 - e356")).jacobi_defect().second);

    // Jacobi iff the Clifford square is scalar
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        KForm tf = rng.form(6, 3);
        CliffordElement c = embed_3form(tf);
        CHECK(flat_case_algebra(tf).jacobi_defect().second ==
              is_scalar(clifford_mul(c, c)).has_value());
    }
}

TEST_CASE("transvection algebra") {
    CurvatureMap r0 = CurvatureMap::zero({f6("e12")});
    LieAlgebraTable t = transvection_algebra({f6("e12")}, KForm(6, 3), r0);
    CHECK(t.dim() == 7);
    CHECK(t.jacobi_defect().second);
    // [w1, e1] = e2 under the grade-1 rho action
    CHECK(t.bracket_basis(0, 1) == std::vector<Rat>({0, 0, 1, 0, 0, 0, 0}));

    // a non-closed generator set is rejected: [e12, e13] = e23
    CHECK_THROWS_AS(transvection_algebra({f6("e12"), f6("e13")}, KForm(6, 3),
                                         CurvatureMap::zero({f6("e12"), f6("e13")})),
                    std::invalid_argument);
}

TEST_CASE("invariant curvature solver") {
    // SO(3) model: unique solution 4 pr_so(3)
    auto mu = so3_mu_basis();
    auto sol = solve_invariant_curvature(mu, sl2c_torsion());
    REQUIRE(sol.consistent);
    CHECK(sol.null_basis.empty());

    // torus case: the forced constraints R56 = 0, R12^2 = R34^1 = -1
    std::vector<KForm> gens = {f6("e12"), f6("e34")};
    auto family = solve_invariant_curvature(gens, f6("e125 - e345"));
    REQUIRE(family.consistent);
    CHECK(family.null_basis.size() == 2);
    int p12 = blade_position(6, blade_of({1, 2}));
    int p34 = blade_position(6, blade_of({3, 4}));
    int p56 = blade_position(6, blade_of({5, 6}));
    auto check_constraints = [&](const CurvatureMap& m, bool homogeneous) {
        CHECK(rat_is_zero(m.coeff.at(p56, 0)));
        CHECK(rat_is_zero(m.coeff.at(p56, 1)));
        Rat expect = homogeneous ? Rat(0) : Rat(-1);
        CHECK(m.coeff.at(p12, 1) == expect);
        CHECK(m.coeff.at(p34, 0) == expect);
        // invariance kills every non-invariant 2-blade
        for (int b = 0; b < 15; ++b) {
            if (b == p12 || b == p34 || b == p56) continue;
            CHECK(rat_is_zero(m.coeff.at(b, 0)));
            CHECK(rat_is_zero(m.coeff.at(b, 1)));
        }
    };
    check_constraints(family.particular, false);
    for (const auto& h : family.null_basis) check_constraints(h, true);

    // no generators: R = 0 is the only candidate and T = 0 works
    auto none = solve_invariant_curvature({}, KForm(6, 3));
    CHECK(none.consistent);
    CHECK(none.null_basis.empty());
    // with a Lambda^3_12 torsion the flat algebra violates Jacobi
    auto blocked = solve_invariant_curvature({}, f6("e123 - e356"));
    CHECK(!blocked.consistent);
}

TEST_CASE("w3 family") {
    W3FamilyReport r00 = w3_family({rat(0), rat(0)});
    CHECK(r00.jacobi);
    CHECK(r00.center_matches);
    CHECK(r00.quotient_matches);
    CHECK(r00.holonomy_dim == 2);
    CHECK(r00.p1_class == ThreeDimClass::so3);
    CHECK(r00.p2_class == ThreeDimClass::so3);
    CHECK(r00.p1_p2_commute);

    W3FamilyReport rh = w3_family({rat(2), rat(1, 2)});
    CHECK(rh.jacobi);
    CHECK(rh.holonomy_dim == 1);

    W3FamilyReport r11 = w3_family({rat(1), rat(1)});
    CHECK(r11.jacobi);
    CHECK(r11.holonomy_dim == 1);
    // [e1,e2] = [e3,e4] = 0 in the quotient: the factors degenerate
    CHECK(r11.p1_class == ThreeDimClass::other);
    CHECK(r11.p2_class == ThreeDimClass::other);

    W3FamilyReport rm = w3_family({rat(-1), rat(3)});
    CHECK(rm.jacobi);
    CHECK(rm.holonomy_dim == 2);
    CHECK(rm.p1_class == ThreeDimClass::so3);  // [e1,e2] = 2 w1
    CHECK(rm.p2_class == ThreeDimClass::sl2R); // [e3,e4] = -2 w2
}

TEST_CASE("holonomy closure") {
    CurvatureMap r = CurvatureMap::zero({f6("e12"), f6("e34")});
    CHECK(holonomy_algebra(r).first == 0);
    r.coeff.at(blade_position(6, blade_of({1, 2})), 0) = 2;
    r.coeff.at(blade_position(6, blade_of({3, 4})), 0) = -1;
    r.coeff.at(blade_position(6, blade_of({1, 2})), 1) = -1;
    r.coeff.at(blade_position(6, blade_of({3, 4})), 1) = rat(1, 2);
    CHECK(holonomy_algebra(r).first == 1); // r1 r2 = 1
}

TEST_CASE("coframe differential") {
    CoframeAlgebra cf = heisenberg_coframe();
    CHECK(coframe_d(cf, KForm::e(6, 1)).is_zero());
    CHECK(coframe_d(cf, KForm::e(6, 5)) == f6("e13 - e24"));
    CHECK(coframe_d(cf, kaehler_form(6)) == f6("e136 - e246 - e145 - e235"));
    KForm tc = f6("e245 - e135 - e236 - e146");
    CHECK(coframe_d(cf, tc) == f6("-4*e1234"));
    // Leibniz rule
    Rng rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        KForm a = rng.form(6, rng.int_in(1, 2));
        KForm b = rng.form(6, rng.int_in(1, 2));
        KForm lhs = coframe_d(cf, wedge(a, b));
        KForm rhs = wedge(coframe_d(cf, a), b);
        KForm second = wedge(a, coframe_d(cf, b));
        rhs += (a.grade() % 2 == 0) ? second : Rat(-1) * second;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sigma and coupling forms") {
    KForm tc = f6("e245 - e135 - e236 - e146");
    // oracle: T^2 = |T|^2 - 2 sigma_T in the Clifford algebra
    CHECK(sigma_4form(tc) == f6("2*e1234 - 2*e1256 - 2*e3456"));
    CliffordElement sq = clifford_mul(embed_3form(tc), embed_3form(tc));
    CliffordElement expect = CliffordElement::scalar(6, inner(tc, tc)) -
                             Rat(2) * embed_form(sigma_4form(tc));
    CHECK(sq == expect);
    CHECK(sigma_4form(KForm(6, 3)).is_zero());

    Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        KForm t = rng.form(6, 3);
        CHECK(coupling_4form(t, t).is_zero());
    }
    CHECK(coupling_4form(KForm(6, 3), rng.form(6, 3)).is_zero());
    KForm c = coupling_4form(f6("-e246 + e136 + e145 + e235"), wedge(f6("e1"), kaehler_form(6)));
    CHECK(!c.is_zero());
}

TEST_CASE("link relations") {
    CHECK(link_relations_check(KForm(6, 3), KForm(6, 3), f6("e1")).all());
    CHECK(link_relations_check(f6("-e246 + e136 + e145 + e235"), f6("e123 - e356"), KForm(6, 1)).all());
    LinkReport bad = link_relations_check(KForm(6, 3), f6("e123 - e356"), f6("e1"));
    CHECK(!bad.rel1); // T12(e1, e2, e3) = 1 != 0
    CHECK_THROWS_AS(link_relations_check(f6("e123"), KForm(6, 3), f6("e1")), std::invalid_argument);
}

TEST_CASE("u2 case identities") {
    KForm rep = f6("e135 - e245 + e236 + e146");
    U2CaseReport r = u2_case_identities(rep);
    CHECK(r.d_e56);
    CHECK(r.d_e12_e34);
    CHECK(r.d_omega_hat);
    CHECK(r.nk_tau);
    CHECK(u2_case_identities(Rat(2) * rep).all());
    CHECK_THROWS_AS(u2_case_identities(sl2c_torsion()), std::domain_error);
}

TEST_CASE("sl2c model") {
    Sl2cReport rep = sl2c_model_report();
    CHECK(rep.curvature_unique);
    CHECK(rep.curvature_is_4pr);
    CHECK(rep.jacobi);
    CHECK(rep.clifford_scalar);
    CHECK(rep.torsion_norm2 == 12);
    CHECK(rep.ric_is_minus4);
    CHECK(rep.killing_nondegenerate);
    CHECK(rep.spinor_kernel == 2);
}

TEST_CASE("heisenberg model") {
    HeisenbergReport rep = heisenberg_report();
    CHECK(rep.d_omega == f6("e136 - e246 - e145 - e235"));
    CHECK(rep.torsion == f6("e245 - e135 - e236 - e146"));
    CHECK(rep.d_torsion == f6("-4*e1234"));
    CHECK(rep.sigma == f6("2*e1234") - Rat(2) * wedge(f6("e12 + e34"), f6("e56")));
    CHECK(rep.delta_omega_zero);
    CHECK(rep.pure_w3);
    CHECK(!rep.parallel);
}
