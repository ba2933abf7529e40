#include <doctest.h>

#include "ahm6/clifford.hpp"
#include "ahm6/exterior.hpp"
#include "ahm6/homogeneous.hpp"
#include "test_util.hpp"

using namespace ahm6;
using ahm6::testing::Rng;
using ahm6::testing::f6;

TEST_CASE("lambda12 parameter basis") {
    const auto& basis = Lambda12Params::basis();
    REQUIRE(basis.size() == 12);
    for (const auto& b : basis) CHECK(in_lambda3_12(b));
    std::vector<std::vector<Rat>> cols;
    for (const auto& b : basis) cols.push_back(form_coords(b, 3));
    CHECK(span_rank(cols) == 12);

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Lambda12Params p = rng.lambda12();
        auto q = Lambda12Params::from_form(p.to_form());
        REQUIRE(q.has_value());
        CHECK(q->a == p.a);
    }
    CHECK(!Lambda12Params::from_form(f6("e123 + e356")).has_value());
}

TEST_CASE("isotropy matrix entries and kernel") {
    Lambda12Params zero;
    CHECK(isotropy_matrix(zero).is_zero());

    Lambda12Params a1;
    a1.a[0] = 1;
    RatMatrix m = isotropy_matrix(a1);
    CHECK(m.at(1, 3) == -2); // the -2 A1 entry in the second row
    CHECK(m.at(0, 4) == -2);

    Rng rng(32);
    auto ub = u_basis(6);
    for (int trial = 0; trial < 60; ++trial) {
        Lambda12Params p = rng.lambda12();
        KForm t = p.to_form();
        std::vector<std::vector<Rat>> cols;
        for (const auto& w : ub) cols.push_back(form_coords(rho_action(w, t), 3));
        auto direct = RatMatrix::from_columns(cols).kernel();
        auto tabulated = isotropy_matrix(p).kernel();
        CHECK(same_span(direct, tabulated));
        if (!p.is_zero()) CHECK(isotropy_matrix(p).rank() >= 3);
    }
}

TEST_CASE("u3 parameter form round trip") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        U3TwoFormParams p;
        for (auto& v : p.w) v = rng.rational();
        auto q = U3TwoFormParams::from_form(p.to_form());
        REQUIRE(q.has_value());
        CHECK(q->w == p.w);
    }
    CHECK(!U3TwoFormParams::from_form(f6("e13 - e24")).has_value());
}

TEST_CASE("isotropy algebra of the orbit representatives") {
    KForm u2_rep = f6("e135 - e245 + e236 + e146");
    IsotropyResult r1 = isotropy_algebra(u2_rep, Ambient::u3);
    CHECK(r1.dim == 4);
    CHECK(r1.tag == OrbitTag::u2);
    for (const auto& g : r1.generators) CHECK(rho_action(g, u2_rep).is_zero());

    KForm so3_rep = f6("2*e123 - 2*e356 - e246 - e136 + e145 - e235");
    IsotropyResult r2 = isotropy_algebra(so3_rep, Ambient::u3);
    CHECK(r2.dim == 3);
    CHECK(r2.tag == OrbitTag::so3);
    LieAlgebraTable t = stabilizer_table(r2.generators);
    CHECK(t.jacobi_defect().second);
    auto [pos, neg, zero] = t.killing_form().signature();
    CHECK(neg == 3);
    CHECK(zero == 0);

    KForm two = f6("e125 - e345");
    IsotropyResult r3 = isotropy_algebra(two, Ambient::u3);
    CHECK(r3.dim == 2);
    CHECK(r3.tag == OrbitTag::two_dim);
    std::vector<std::vector<Rat>> gens, expect;
    for (const auto& g : r3.generators) gens.push_back(form_coords(g, 2));
    expect.push_back(form_coords(f6("e12"), 2));
    expect.push_back(form_coords(f6("e34"), 2));
    CHECK(same_span(gens, expect));

    CHECK(isotropy_algebra(KForm(6, 3), Ambient::u3).tag == OrbitTag::full);
    CHECK(isotropy_algebra(KForm(6, 3), Ambient::u3).dim == 9);

    // a Lambda^3_2 form is SU(3)-invariant: dim 8 inside u(3)
    KForm nk = f6("-e246 + e136 + e145 + e235");
    IsotropyResult r4 = isotropy_algebra(nk, Ambient::u3);
    CHECK(r4.dim == 8);
    CHECK(r4.tag == OrbitTag::other);
}

TEST_CASE("orbit_tag preconditions") {
    CHECK(orbit_tag(f6("e125 - e345")) == OrbitTag::two_dim);
    CHECK(orbit_tag(KForm(6, 3)) == OrbitTag::full);
    CHECK_THROWS_AS(orbit_tag(f6("e123 + e356")), std::invalid_argument);
}

TEST_CASE("so3 mu generators") {
    auto mu = so3_mu_basis();
    KForm t = sl2c_torsion();
    for (const auto& m : mu) CHECK(rho_action(m, t).is_zero());
    LieAlgebraTable table = stabilizer_table(mu);
    CHECK(table.jacobi_defect().second);
    auto [pos, neg, zero] = table.killing_form().signature();
    CHECK(neg == 3);
    CHECK(zero == 0);
}

TEST_CASE("circle criterion") {
    CHECK(circle_preserves(1, 1, 0).first);
    CHECK(circle_preserves(1, 2, 3).first);
    CHECK(!circle_preserves(1, 2, 5).first);
    CHECK_THROWS_AS(circle_preserves(0, 0, 0), std::invalid_argument);
    // kernel dimension equals the solution-space dimension of the lemma
    CHECK(circle_preserves(1, 2, 0).second == 2);
    CHECK(circle_preserves(0, 1, 0).second == 4);
    CHECK(circle_preserves(1, 1, 0).second == 6);
    CHECK(circle_preserves(1, -1, 0).second == 4);
    CHECK(circle_preserves(1, 1, 2).second == 2);
}

TEST_CASE("lemma case reports") {
    auto r11 = lemma_algebra_case_report(1, 2, 0);
    CHECK(r11.case_tag == "1.1");
    CHECK(r11.solution_dim == 2);
    CHECK(r11.param_indices == std::vector<int>({3, 4}));
    CHECK(r11.generic_isotropy_dim == 2);
    CHECK(r11.constraints.empty());

    auto r12 = lemma_algebra_case_report(0, 1, 0);
    CHECK(r12.case_tag == "1.2");
    CHECK(r12.solution_dim == 4);
    CHECK(r12.generic_isotropy_dim == 2);

    auto r13 = lemma_algebra_case_report(1, 1, 0);
    CHECK(r13.case_tag == "1.3");
    CHECK(r13.solution_dim == 6);
    CHECK(r13.param_indices == std::vector<int>({3, 4, 7, 8, 9, 10}));
    CHECK(r13.constraints.size() == 3);
    // off the constraint locus only the circle itself survives, on it the
    // isotropy grows to dimension two
    CHECK(r13.generic_isotropy_dim == 1);

    auto r14 = lemma_algebra_case_report(1, -1, 0);
    CHECK(r14.case_tag == "1.4");
    CHECK(r14.solution_dim == 4);
    CHECK(r14.param_indices == std::vector<int>({3, 4, 11, 12}));
    CHECK(r14.constraints == std::vector<std::string>({"A11 = 0", "A12 = 0"}));

    auto r2 = lemma_algebra_case_report(1, 1, 2);
    CHECK(r2.case_tag == "2");
    CHECK(r2.solution_dim == 2);
    CHECK(r2.param_indices == std::vector<int>({11, 12}));
    CHECK(r2.generic_isotropy_dim == 4);

    // permuted arrangements keep the case structure
    auto perm12 = lemma_algebra_case_report(0, 0, 3);
    CHECK(perm12.case_tag == "1.2");
    CHECK(perm12.solution_dim == 4);
    CHECK(perm12.param_indices == std::vector<int>({1, 2, 5, 6}));
    auto perm2 = lemma_algebra_case_report(-1, -1, -2);
    CHECK(perm2.case_tag == "2");
    CHECK(perm2.solution_dim == 2);

    CHECK_THROWS_AS(lemma_algebra_case_report(1, 2, 5), std::domain_error);
}

TEST_CASE("constrained case forms have two-dimensional isotropy") {
    // a case-1.3 form satisfying the quadratic relations
    Lambda12Params p;
    p.a[2] = 1; p.a[3] = 2; p.a[6] = 3; p.a[7] = 6; p.a[8] = 2; p.a[9] = -4;
    CHECK(isotropy_algebra(p.to_form(), Ambient::u3).dim == 2);
    // a case-1.4 form after the forced vanishing A11 = A12 = 0
    Lambda12Params q;
    q.a[2] = 1; q.a[3] = 2;
    CHECK(isotropy_algebra(q.to_form(), Ambient::u3).dim == 2);
}

TEST_CASE("scalar completion constraints") {
    KForm circle13 = f6("e12 + e34");
    auto build = [](std::initializer_list<std::pair<int, int>> vals) {
        Lambda12Params p;
        for (auto [idx, v] : vals) p.a[static_cast<size_t>(idx - 1)] = v;
        return p.to_form();
    };
    // constraints satisfied: A3 A10 = -A4 A9, A7 A10 = -A8 A9, A3 A8 = A4 A7
    KForm good = build({{3, 1}, {4, 2}, {7, 3}, {8, 6}, {9, 2}, {10, -4}});
    CHECK(scalar_completion_exists(good, circle13));
    KForm bad = build({{3, 1}, {4, 2}, {7, 3}, {8, 5}, {9, 2}, {10, -4}});
    CHECK(!scalar_completion_exists(bad, circle13));

    KForm circle14 = f6("e12 - e34");
    CHECK(!scalar_completion_exists(build({{3, 1}, {4, 2}, {11, 1}}), circle14));
    CHECK(scalar_completion_exists(build({{3, 1}, {4, 2}}), circle14));
}

TEST_CASE("complex scaling invariance of the stabilizer dimension") {
    Rng rng(34);
    for (const KForm& rep : {f6("e135 - e245 + e236 + e146"),
                             f6("2*e123 - 2*e356 - e246 - e136 + e145 - e235")}) {
        int base = isotropy_algebra(rep, Ambient::u3).dim;
        for (int trial = 0; trial < 10; ++trial) {
            Rat a = rng.rational(), b = rng.rational();
            if (rat_is_zero(a) && rat_is_zero(b)) a = 1;
            KForm t = a * rep + b * j_pullback(rep);
            CHECK(isotropy_algebra(t, Ambient::u3).dim == base);
        }
    }
}

TEST_CASE("so(6) ambient stabilizers") {
    KForm nk = f6("-e246 + e136 + e145 + e235");
    IsotropyResult so6 = isotropy_algebra(nk, Ambient::so6);
    IsotropyResult u3 = isotropy_algebra(nk, Ambient::u3);
    CHECK(so6.dim >= u3.dim);
    for (const auto& g : so6.generators) CHECK(rho_action(g, nk).is_zero());
    // the u(3) stabilizer embeds in the so(6) one
    std::vector<std::vector<Rat>> big, small;
    for (const auto& g : so6.generators) big.push_back(form_coords(g, 2));
    small = big;
    for (const auto& g : u3.generators) small.push_back(form_coords(g, 2));
    CHECK(span_rank(small) == span_rank(big));
}
