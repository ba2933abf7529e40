#include <doctest.h>

#include "ahm6/exterior.hpp"
#include "test_util.hpp"

using namespace ahm6;
using ahm6::testing::Rng;
using ahm6::testing::f4;
using ahm6::testing::f6;

TEST_CASE("wedge on blades") {
    CHECK(wedge(f6("e1"), f6("e2")) == f6("e12"));
    CHECK(wedge(f6("e12"), f6("e13")).is_zero());
    CHECK(wedge(f6("e1"), f6("e12 + e34 + e56")) == f6("e134 + e156"));
    CHECK_THROWS_AS(wedge(f6("e1"), f4("e1")), std::invalid_argument);
}

TEST_CASE("wedge grading") {
    Rng rng(1);
    for (int trial = 0; trial < 25; ++trial) {
        int ka = rng.int_in(0, 3), kb = rng.int_in(0, 3);
        KForm a = rng.form(6, ka), b = rng.form(6, kb);
        KForm ab = wedge(a, b);
        CHECK(ab.grade() == ka + kb);
        KForm ba = wedge(b, a);
        if ((ka * kb) % 2 == 1) ba *= Rat(-1);
        CHECK(ab == ba);
    }
    // grade above the dimension collapses to zero
    CHECK(wedge(f6("e12345"), f6("e123")).is_zero());
}

TEST_CASE("interior product") {
    CHECK(interior(1, f6("e123")) == f6("e23"));
    CHECK(interior(2, f6("e123")) == f6("-e13"));
    CHECK(interior(4, f6("e123")).is_zero());
    CHECK_THROWS_AS(interior(7, f6("e123")), std::invalid_argument);

    // antiderivation law with e_i -| e_i = 1
    Rng rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        int ka = rng.int_in(0, 3);
        KForm a = rng.form(6, ka), b = rng.form(6, rng.int_in(0, 3));
        for (int i = 1; i <= 6; ++i) {
            KForm rhs = wedge(interior(i, a), b);
            KForm second = wedge(a, interior(i, b));
            rhs += (ka % 2 == 0) ? second : Rat(-1) * second;
            CHECK(interior(i, wedge(a, b)) == rhs);
        }
    }
}

TEST_CASE("hodge star") {
    CHECK(hodge(f6("e123")) == f6("e456"));
    KForm t = f6("e123 - e356");
    CHECK(hodge(hodge(t)) == Rat(-1) * t);
    CHECK(hodge(f4("e12")) == f4("e34"));

    Rng rng(3);
    for (int n : {4, 6})
        for (int k = 0; k <= n; ++k) {
            KForm a = rng.form(n, k), b = rng.form(n, k);
            CHECK(inner(hodge(a), hodge(b)) == inner(a, b));
            CHECK(wedge(a, hodge(b)) ==
                  inner(a, b) * KForm::basis(n, (Blade{1} << n) - 1));
        }
}

TEST_CASE("inner product") {
    CHECK(inner(f6("e123"), f6("e123")) == 1);
    CHECK(inner(f6("e123"), f6("e456")) == 0);
    CHECK(inner(f6("2*e123 - e356"), f6("e356")) == -1);
    CHECK_THROWS_AS(inner(f6("e12"), f6("e123")), std::invalid_argument);
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        KForm a = rng.nonzero_form(6, 3);
        CHECK(sgn(inner(a, a)) > 0); // positive definite
    }
}

TEST_CASE("rho action") {
    CHECK(rho_action(f6("e12"), f6("e12")).is_zero());
    // oracle: the skew matrix E21 - E12 maps e1 to e2
    CHECK(rho_action(f6("e12"), f6("e1")) == f6("e2"));
    CHECK(rho_action(f6("e12"), f6("e2")) == f6("-e1"));

    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        KForm w = rng.form(6, 2);
        RatMatrix m(6, 6);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                Rat c = w.coeff(blade_bit(i) | blade_bit(j));
                m.at(j - 1, i - 1) += c;
                m.at(i - 1, j - 1) -= c;
            }
        KForm v = rng.form(6, 1);
        CHECK(form_coords(rho_action(w, v), 1) == m.apply(form_coords(v, 1)));
    }

    // the Lambda^3_2 reference pair: tau maps the first basis form to 3 * it
    KForm t1 = f6("-e246 + e136 + e145 + e235");
    KForm t2 = f6("-e135 + e245 + e236 + e146");
    CHECK(hodge(t1) == t2);
    CHECK(rho_action(kaehler_form(6), t1) == Rat(3) * t2);
}

TEST_CASE("matrix_of") {
    LinearOperator id = matrix_of([](const KForm& f) { return f; }, 6, 3, 3);
    CHECK(id.matrix == RatMatrix::identity(20));
    LinearOperator star = matrix_of([](const KForm& f) { return hodge(f); }, 6, 3, 3);
    CHECK(star.matrix * star.matrix == RatMatrix::identity(20) * Rat(-1));
    LinearOperator t = matrix_of([](const KForm& f) { return tau(f); }, 6, 3, 3);
    CHECK(t.matrix.rank() == 20);
}

TEST_CASE("exact matrix kernel and rank against rref cross-check") {
    Rng rng(6);
    for (int trial = 0; trial < 25; ++trial) {
        int r = rng.int_in(1, 8), c = rng.int_in(1, 8);
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng.int_in(0, 2)) m.at(i, j) = rng.rational();
        auto kernel = m.kernel();
        CHECK(static_cast<int>(kernel.size()) == c - m.rank());
        for (const auto& k : kernel) {
            for (const auto& v : m.apply(k)) CHECK(rat_is_zero(v));
        }
        CHECK(span_rank(kernel) == static_cast<int>(kernel.size()));
    }
}

TEST_CASE("determinant and signature") {
    RatMatrix m(3, 3);
    m.at(0, 0) = 2; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 2; m.at(1, 2) = rat(1, 2);
    m.at(2, 1) = rat(1, 2); m.at(2, 2) = 1;
    // cofactor expansion by hand: 2*(2 - 1/4) - 1*(1) = 5/2
    CHECK(m.det() == rat(5, 2));
    auto [pos, neg, zero] = m.signature();
    CHECK(pos == 3);
    CHECK(neg == 0);
    CHECK(zero == 0);

    RatMatrix s(2, 2);
    s.at(0, 1) = 1;
    s.at(1, 0) = 1;
    auto [p2, n2, z2] = s.signature();
    CHECK(p2 == 1);
    CHECK(n2 == 1);
    CHECK(z2 == 0);
}
