#include "ahm6/homogeneous.hpp"

#include <stdexcept>

#include "ahm6/clifford.hpp"
#include "ahm6/exterior.hpp"
#include "ahm6/isotropy.hpp"
#include "ahm6/unitary.hpp"

namespace ahm6 {

namespace {

std::vector<std::vector<Rat>> form_columns(const std::vector<KForm>& forms, int grade) {
    std::vector<std::vector<Rat>> cols;
    for (const auto& f : forms) cols.push_back(form_coords(f, grade));
    return cols;
}

std::vector<Rat> torsion_vector_part(const KForm& torsion, int i, int j) {
    // -T(e_i, e_j, .) as e-coordinates
    KForm one = interior(j, interior(i, torsion));
    std::vector<Rat> out(6, Rat(0));
    for (int k = 1; k <= 6; ++k) out[static_cast<size_t>(k - 1)] = -one.coeff(blade_bit(k));
    return out;
}

} // namespace

CurvatureMap CurvatureMap::zero(std::vector<KForm> generators) {
    CurvatureMap r;
    r.coeff = RatMatrix(15, static_cast<int>(generators.size()));
    r.generators = std::move(generators);
    return r;
}

std::vector<Rat> CurvatureMap::apply_coords(int i, int j) const {
    int g = coeff.cols();
    std::vector<Rat> out(static_cast<size_t>(g), Rat(0));
    if (i == j) return out;
    int sign = i < j ? 1 : -1;
    Blade b = blade_bit(i) | blade_bit(j);
    int row = blade_position(6, b);
    for (int k = 0; k < g; ++k) out[static_cast<size_t>(k)] = sign > 0 ? coeff.at(row, k) : -coeff.at(row, k);
    return out;
}

KForm CurvatureMap::apply(const KForm& beta) const {
    KForm out(6, 2);
    for (const auto& [b, c] : beta.terms()) {
        int row = blade_position(6, b);
        for (int k = 0; k < coeff.cols(); ++k)
            out += (c * coeff.at(row, k)) * generators[static_cast<size_t>(k)];
    }
    return out;
}

std::vector<KForm> CurvatureMap::r_forms() const {
    auto blades = enumerate_blades(6, 2);
    std::vector<KForm> out;
    for (int k = 0; k < coeff.cols(); ++k) {
        KForm f(6, 2);
        for (size_t r = 0; r < blades.size(); ++r) f.add_term(blades[r], coeff.at(static_cast<int>(r), k));
        out.push_back(f);
    }
    return out;
}

bool CurvatureMap::operator==(const CurvatureMap& o) const {
    return generators == o.generators && coeff == o.coeff;
}

LieAlgebraTable flat_case_algebra(const KForm& torsion) {
    if (torsion.dim() != 6) throw std::invalid_argument("flat_case_algebra: dim 6 expected");
    std::vector<std::string> labels;
    for (int i = 1; i <= 6; ++i) labels.push_back("e" + std::to_string(i));
    return LieAlgebraTable::from_brackets(6, labels, [&](int i, int j) {
        return torsion_vector_part(torsion, i + 1, j + 1);
    });
}

LieAlgebraTable transvection_algebra(const std::vector<KForm>& gt_basis, const KForm& torsion,
                                     const CurvatureMap& curvature) {
    int g = static_cast<int>(gt_basis.size());
    int n = g + 6;
    auto gt_cols = form_columns(gt_basis, 2);
    std::vector<std::string> labels;
    for (int a = 1; a <= g; ++a) labels.push_back("w" + std::to_string(a));
    for (int i = 1; i <= 6; ++i) labels.push_back("e" + std::to_string(i));

    return LieAlgebraTable::from_brackets(n, labels, [&](int i, int j) -> std::vector<Rat> {
        std::vector<Rat> out(static_cast<size_t>(n), Rat(0));
        if (i < g && j < g) {
            KForm br = rho_action(gt_basis[static_cast<size_t>(i)], gt_basis[static_cast<size_t>(j)]);
            auto coords = coords_in_span(gt_cols, form_coords(br, 2));
            if (!coords) throw std::invalid_argument("transvection_algebra: g_T basis not bracket-closed");
            for (int a = 0; a < g; ++a) out[static_cast<size_t>(a)] = (*coords)[static_cast<size_t>(a)];
        } else if (i < g) {
            // A . Y: grade-1 rho action
            KForm v = rho_action(gt_basis[static_cast<size_t>(i)], KForm::e(6, j - g + 1));
            for (int k = 1; k <= 6; ++k) out[static_cast<size_t>(g + k - 1)] = v.coeff(blade_bit(k));
        } else {
            auto rc = curvature.apply_coords(i - g + 1, j - g + 1);
            for (int a = 0; a < g; ++a) out[static_cast<size_t>(a)] = -rc[static_cast<size_t>(a)];
            auto tv = torsion_vector_part(torsion, i - g + 1, j - g + 1);
            for (int k = 0; k < 6; ++k) out[static_cast<size_t>(g + k)] = tv[static_cast<size_t>(k)];
        }
        return out;
    });
}

InvariantCurvatureSolution solve_invariant_curvature(const std::vector<KForm>& gt_basis,
                                                     const KForm& torsion) {
    int g = static_cast<int>(gt_basis.size());
    auto blades2 = enumerate_blades(6, 2);
    int nb = static_cast<int>(blades2.size()); // 15
    int unknowns = nb * g;
    auto gt_cols = form_columns(gt_basis, 2);

    auto map_from = [&](const std::vector<Rat>& m) {
        CurvatureMap r = CurvatureMap::zero(gt_basis);
        for (int b = 0; b < nb; ++b)
            for (int k = 0; k < g; ++k) r.coeff.at(b, k) = m[static_cast<size_t>(b * g + k)];
        return r;
    };

    // ad-coordinates of the g_T action on itself
    std::vector<std::vector<std::vector<Rat>>> ad(static_cast<size_t>(g));
    for (int a = 0; a < g; ++a) {
        ad[static_cast<size_t>(a)].resize(static_cast<size_t>(g));
        for (int k = 0; k < g; ++k) {
            KForm br = rho_action(gt_basis[static_cast<size_t>(a)], gt_basis[static_cast<size_t>(k)]);
            auto coords = coords_in_span(gt_cols, form_coords(br, 2));
            if (!coords) throw std::invalid_argument("solve_invariant_curvature: g_T basis not bracket-closed");
            ad[static_cast<size_t>(a)][static_cast<size_t>(k)] = *coords;
        }
    }

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;

    // Equivariance: R(rho(g_a) beta) = [g_a, R(beta)] for every generator
    // and every basis 2-form.
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < nb; ++b) {
            KForm moved = rho_action(gt_basis[static_cast<size_t>(a)], KForm::basis(6, blades2[static_cast<size_t>(b)]));
            auto mc = form_coords(moved, 2);
            for (int c = 0; c < g; ++c) {
                std::vector<Rat> row(static_cast<size_t>(unknowns), Rat(0));
                for (int b2 = 0; b2 < nb; ++b2)
                    if (!rat_is_zero(mc[static_cast<size_t>(b2)])) row[static_cast<size_t>(b2 * g + c)] += mc[static_cast<size_t>(b2)];
                for (int k = 0; k < g; ++k)
                    row[static_cast<size_t>(b * g + k)] -= ad[static_cast<size_t>(a)][static_cast<size_t>(k)][static_cast<size_t>(c)];
                rows.push_back(std::move(row));
                rhs.push_back(Rat(0));
            }
        }

    // Jacobi identity of the transvection algebra: affine in R.
    auto jacobi_components = [&](const CurvatureMap& r) {
        LieAlgebraTable t = transvection_algebra(gt_basis, torsion, r);
        int n = t.dim();
        std::vector<Rat> vals;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    std::vector<Rat> ei(static_cast<size_t>(n), Rat(0)), ej = ei, ek = ei;
                    ei[static_cast<size_t>(i)] = 1; ej[static_cast<size_t>(j)] = 1; ek[static_cast<size_t>(k)] = 1;
                    auto s1 = t.bracket(t.bracket_basis(i, j), ek);
                    auto s2 = t.bracket(t.bracket_basis(j, k), ei);
                    auto s3 = t.bracket(t.bracket_basis(k, i), ej);
                    for (int m = 0; m < n; ++m)
                        vals.push_back(s1[static_cast<size_t>(m)] + s2[static_cast<size_t>(m)] + s3[static_cast<size_t>(m)]);
                }
        return vals;
    };

    std::vector<Rat> zero_m(static_cast<size_t>(unknowns), Rat(0));
    auto d0 = jacobi_components(map_from(zero_m));
    size_t jrows = d0.size();
    std::vector<std::vector<Rat>> jcols(static_cast<size_t>(unknowns));
    for (int u = 0; u < unknowns; ++u) {
        std::vector<Rat> m = zero_m;
        m[static_cast<size_t>(u)] = 1;
        auto du = jacobi_components(map_from(m));
        jcols[static_cast<size_t>(u)].resize(jrows);
        for (size_t r = 0; r < jrows; ++r) jcols[static_cast<size_t>(u)][r] = du[r] - d0[r];
    }
    for (size_t r = 0; r < jrows; ++r) {
        std::vector<Rat> row(static_cast<size_t>(unknowns), Rat(0));
        bool nonzero = false;
        for (int u = 0; u < unknowns; ++u) {
            row[static_cast<size_t>(u)] = jcols[static_cast<size_t>(u)][r];
            nonzero = nonzero || !rat_is_zero(row[static_cast<size_t>(u)]);
        }
        if (!nonzero && rat_is_zero(d0[r])) continue;
        rows.push_back(std::move(row));
        rhs.push_back(-d0[r]);
    }

    InvariantCurvatureSolution sol;
    if (unknowns == 0) {
        sol.consistent = true;
        for (const auto& v : rhs)
            if (!rat_is_zero(v)) sol.consistent = false;
        sol.particular = CurvatureMap::zero(gt_basis);
        return sol;
    }

    RatMatrix sys(static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int u = 0; u < unknowns; ++u) sys.at(static_cast<int>(r), u) = rows[r][static_cast<size_t>(u)];
    auto solved = sys.solve_affine(rhs);
    if (!solved) return sol;
    sol.consistent = true;
    sol.particular = map_from(solved->first);
    for (const auto& h : solved->second) sol.null_basis.push_back(map_from(h));
    return sol;
}

std::pair<int, std::vector<std::vector<Rat>>> holonomy_algebra(const CurvatureMap& curvature) {
    LieAlgebraTable gt = stabilizer_table(curvature.generators);
    std::vector<std::vector<Rat>> basis;
    auto try_add = [&](const std::vector<Rat>& v) {
        std::vector<std::vector<Rat>> probe = basis;
        probe.push_back(v);
        if (span_rank(probe) > static_cast<int>(basis.size())) basis.push_back(v);
    };
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) try_add(curvature.apply_coords(i, j));
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = basis.size();
        for (size_t i = 0; i < sz && !grew; ++i)
            for (size_t j = i + 1; j < sz && !grew; ++j) {
                auto before = basis.size();
                try_add(gt.bracket(basis[i], basis[j]));
                grew = basis.size() > before;
            }
    }
    return {static_cast<int>(basis.size()), basis};
}

KForm coframe_d(const CoframeAlgebra& cf, const KForm& form) {
    if (form.dim() != cf.dim) throw std::invalid_argument("coframe_d: dimension mismatch");
    KForm out(cf.dim, form.grade() + 1);
    for (const auto& [b, c] : form.terms()) {
        auto idx = blade_indices(b);
        for (size_t p = 0; p < idx.size(); ++p) {
            KForm rest = KForm::basis(cf.dim, b & ~blade_bit(idx[p]));
            KForm term = wedge(cf.d_coframe[static_cast<size_t>(idx[p] - 1)], rest);
            out += ((p % 2 == 0) ? c : -c) * term;
        }
    }
    return out;
}

CoframeAlgebra coframe_of_table(const LieAlgebraTable& table) {
    CoframeAlgebra cf;
    cf.dim = table.dim();
    for (int k = 0; k < cf.dim; ++k) {
        KForm d(cf.dim, 2);
        for (int i = 0; i < cf.dim; ++i)
            for (int j = i + 1; j < cf.dim; ++j)
                d.add_term(blade_bit(i + 1) | blade_bit(j + 1), -table.bracket_basis(i, j)[static_cast<size_t>(k)]);
        cf.d_coframe.push_back(d);
    }
    return cf;
}

KForm sigma_4form(const KForm& torsion) {
    if (torsion.dim() != 6) throw std::invalid_argument("sigma_4form: dim 6 expected");
    KForm out(6, 4);
    for (int i = 1; i <= 6; ++i) {
        KForm c = interior(i, torsion);
        out += wedge(c, c);
    }
    return Rat(1, 2) * out;
}

KForm coupling_4form(const KForm& t, const KForm& s) {
    if (t.dim() != 6 || s.dim() != 6) throw std::invalid_argument("coupling_4form: dim 6 expected");
    KForm out(6, 4);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            out += wedge(interior(i, interior(j, t)), interior(i, interior(j, s)));
    return out;
}

LinkReport link_relations_check(const KForm& t2, const KForm& t12, const KForm& x) {
    if (!in_lambda3_2(t2)) throw std::invalid_argument("link_relations_check: T2 not in Lambda^3_2");
    if (!in_lambda3_12(t12)) throw std::invalid_argument("link_relations_check: T12 not in Lambda^3_12");
    KForm jx = j_vec(x);
    LinkReport rep;
    rep.rel1 = rep.rel2 = rep.rel3 = true;
    for (int a = 1; a <= 6; ++a) {
        KForm ea = KForm::e(6, a);
        if (!rat_is_zero(eval_form(t12, {x, jx, ea}))) rep.rel1 = false;
        for (int b = 1; b <= 6; ++b) {
            KForm eb = KForm::e(6, b);
            KForm ja = j_vec(ea), jb = j_vec(eb);
            Rat lhs2 = eval_form(t12, {x, ea, eb});
            Rat rhs2 = eval_form(t12, {x, ja, jb}) + 2 * eval_form(t2, {x, ea, eb});
            if (lhs2 != rhs2) rep.rel2 = false;
            Rat lhs3 = eval_form(t12, {jx, ea, eb});
            Rat rhs3 = eval_form(t12, {jx, ja, jb}) - 2 * eval_form(t2, {jx, ea, eb});
            if (lhs3 != rhs3) rep.rel3 = false;
        }
    }
    return rep;
}

U2CaseReport u2_case_identities(const KForm& torsion) {
    if (orbit_tag(torsion) != OrbitTag::u2)
        throw std::domain_error("u2_case_identities: torsion is not on the U(2) orbit");
    KForm star_t = hodge(torsion);
    KForm e56 = KForm::basis(6, blade_of({5, 6}));
    KForm e12_e34 = KForm::basis(6, blade_of({1, 2})) + KForm::basis(6, blade_of({3, 4}));
    KForm omega_hat = Rat(-1) * e12_e34 + e56;
    KForm d_omega_hat = rho_action(omega_hat, torsion);

    U2CaseReport rep;
    rep.d_e56 = (rho_action(e56, torsion) == star_t);
    rep.d_e12_e34 = (rho_action(e12_e34, torsion) == Rat(-2) * star_t);
    rep.d_omega_hat = (d_omega_hat == Rat(3) * star_t);
    rep.nk_tau = (tau(tau(d_omega_hat, omega_hat), omega_hat) == Rat(-9) * d_omega_hat);
    return rep;
}

W3FamilyReport w3_family(const W3FamilyParams& params) {
    KForm w1 = KForm::basis(6, blade_of({1, 2}));
    KForm w2 = KForm::basis(6, blade_of({3, 4}));
    KForm torsion(6, 3);
    torsion.add_term(blade_of({1, 2, 5}), Rat(1));
    torsion.add_term(blade_of({3, 4, 5}), Rat(-1));

    CurvatureMap r = CurvatureMap::zero({w1, w2});
    int p12 = blade_position(6, blade_of({1, 2}));
    int p34 = blade_position(6, blade_of({3, 4}));
    r.coeff.at(p12, 0) = params.r1;
    r.coeff.at(p34, 0) = -1;
    r.coeff.at(p12, 1) = -1;
    r.coeff.at(p34, 1) = params.r2;

    W3FamilyReport rep;
    rep.params = params;
    rep.algebra = transvection_algebra({w1, w2}, torsion, r);
    rep.jacobi = rep.algebra.jacobi_defect().second;
    rep.holonomy_dim = holonomy_algebra(r).first;

    // center = span{w1 - w2 + e5, e6} in the basis w1, w2, e1..e6
    auto center = rep.algebra.center_basis();
    std::vector<Rat> z1(8, Rat(0)), z2(8, Rat(0));
    z1[0] = 1; z1[1] = -1; z1[6] = 1;
    z2[7] = 1;
    std::vector<std::vector<Rat>> expected = {z1, z2};
    rep.center_matches = same_span(center, expected);

    // quotient by the center in the complement basis w1, w2, e1, e2, e3, e4
    std::vector<std::vector<Rat>> complement;
    for (int i : {0, 1, 2, 3, 4, 5}) {
        std::vector<Rat> v(8, Rat(0));
        v[static_cast<size_t>(i)] = 1;
        complement.push_back(v);
    }
    LieAlgebraTable q = rep.algebra.quotient(expected, complement, {"w1", "w2", "e1", "e2", "e3", "e4"});

    auto unit = [&](int i) {
        std::vector<Rat> v(6, Rat(0));
        v[static_cast<size_t>(i)] = 1;
        return v;
    };
    auto scaled = [&](int i, const Rat& s) {
        std::vector<Rat> v(6, Rat(0));
        v[static_cast<size_t>(i)] = s;
        return v;
    };
    std::vector<Rat> zero6(6, Rat(0));
    rep.quotient_matches =
        q.bracket_basis(0, 1) == zero6 &&
        q.bracket_basis(0, 2) == unit(3) &&          // [w1, e1] = e2
        q.bracket_basis(0, 3) == scaled(2, Rat(-1)) && // [w1, e2] = -e1
        q.bracket_basis(0, 4) == zero6 && q.bracket_basis(0, 5) == zero6 &&
        q.bracket_basis(1, 2) == zero6 && q.bracket_basis(1, 3) == zero6 &&
        q.bracket_basis(1, 4) == unit(5) &&          // [w2, e3] = e4
        q.bracket_basis(1, 5) == scaled(4, Rat(-1)) && // [w2, e4] = -e3
        q.bracket_basis(2, 4) == zero6 && q.bracket_basis(2, 5) == zero6 &&
        q.bracket_basis(3, 4) == zero6 && q.bracket_basis(3, 5) == zero6 &&
        q.bracket_basis(2, 3) == scaled(0, Rat(1) - params.r1) && // [e1, e2] = (1-r1) w1
        q.bracket_basis(4, 5) == scaled(1, Rat(1) - params.r2);   // [e3, e4] = (1-r2) w2

    // p1 = span{w1, e1, e2}, p2 = span{w2, e3, e4} inside the quotient
    std::vector<std::vector<Rat>> p1 = {unit(0), unit(2), unit(3)};
    std::vector<std::vector<Rat>> p2 = {unit(1), unit(4), unit(5)};
    rep.p1_class = classify_3d(q.subalgebra(p1, {"w1", "e1", "e2"}));
    rep.p2_class = classify_3d(q.subalgebra(p2, {"w2", "e3", "e4"}));
    rep.p1_p2_commute = true;
    for (const auto& a : p1)
        for (const auto& b : p2)
            for (const auto& v : q.bracket(a, b))
                if (!rat_is_zero(v)) rep.p1_p2_commute = false;
    return rep;
}

std::vector<KForm> so3_mu_basis() {
    auto mk = [](std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
        KForm f(6, 2);
        for (const auto& [idx, s] : terms) f.add_term(blade_of(idx), Rat(s));
        return f;
    };
    return {mk({{{1, 2}, 1}, {{5, 6}, -1}}),
            mk({{{1, 3}, 1}, {{2, 4}, 1}, {{3, 5}, 1}, {{4, 6}, 1}}),
            mk({{{1, 4}, 1}, {{2, 3}, -1}, {{3, 6}, 1}, {{4, 5}, -1}})};
}

KForm sl2c_torsion() {
    KForm t(6, 3);
    t.add_term(blade_of({1, 2, 3}), Rat(2));
    t.add_term(blade_of({3, 5, 6}), Rat(-2));
    t.add_term(blade_of({2, 4, 6}), Rat(-1));
    t.add_term(blade_of({1, 3, 6}), Rat(-1));
    t.add_term(blade_of({1, 4, 5}), Rat(1));
    t.add_term(blade_of({2, 3, 5}), Rat(-1));
    return t;
}

Sl2cReport sl2c_model_report() {
    Sl2cReport rep;
    rep.torsion = sl2c_torsion();
    auto mu = so3_mu_basis();

    auto sol = solve_invariant_curvature(mu, rep.torsion);
    rep.curvature_unique = sol.consistent && sol.null_basis.empty();
    if (!sol.consistent) return rep;
    const CurvatureMap& r = sol.particular;

    // 4 pr_so(3): Gram-normalized projections keep everything rational.
    CurvatureMap four_pr = CurvatureMap::zero(mu);
    auto blades2 = enumerate_blades(6, 2);
    for (size_t b = 0; b < blades2.size(); ++b)
        for (size_t k = 0; k < mu.size(); ++k) {
            KForm eb = KForm::basis(6, blades2[b]);
            four_pr.coeff.at(static_cast<int>(b), static_cast<int>(k)) =
                Rat(4) * inner(eb, mu[k]) / inner(mu[k], mu[k]);
        }
    rep.curvature_is_4pr = (r == four_pr);

    rep.algebra = transvection_algebra(mu, rep.torsion, r);
    rep.jacobi = rep.algebra.jacobi_defect().second;
    rep.clifford_scalar = jacobi_scalar_check(rep.torsion, mu, r.r_forms()).has_value();
    rep.torsion_norm2 = inner(rep.torsion, rep.torsion);

    RatMatrix ric(6, 6);
    for (int j = 1; j <= 6; ++j)
        for (int k = 1; k <= 6; ++k) {
            Rat v(0);
            for (int i = 1; i <= 6; ++i) {
                KForm rij = r.apply(wedge(KForm::e(6, i), KForm::e(6, j)));
                v += inner(rho_action(rij, KForm::e(6, k)), KForm::e(6, i));
            }
            ric.at(j - 1, k - 1) = v;
        }
    rep.ric_is_minus4 = (ric == RatMatrix::identity(6) * Rat(-4));
    rep.killing_nondegenerate = !rat_is_zero(rep.algebra.killing_form().det());
    rep.spinor_kernel = spinor_kernel_dim(rep.torsion);
    return rep;
}

CoframeAlgebra heisenberg_coframe() {
    CoframeAlgebra cf;
    cf.dim = 6;
    for (int i = 0; i < 4; ++i) cf.d_coframe.push_back(KForm(6, 2));
    KForm d5(6, 2), d6(6, 2);
    d5.add_term(blade_of({1, 3}), Rat(1));
    d5.add_term(blade_of({2, 4}), Rat(-1));
    d6.add_term(blade_of({1, 4}), Rat(1));
    d6.add_term(blade_of({2, 3}), Rat(1));
    cf.d_coframe.push_back(d5);
    cf.d_coframe.push_back(d6);
    return cf;
}

HeisenbergReport heisenberg_report() {
    CoframeAlgebra cf = heisenberg_coframe();
    KForm omega = kaehler_form(6);
    HeisenbergReport rep;
    rep.d_omega = coframe_d(cf, omega);
    rep.delta_omega_zero = coframe_d(cf, hodge(omega)).is_zero(); // delta = -*d* up to sign
    // hermitian W3 structure: d Omega = 2 * T12, Tc = -2 T12 = *dOmega
    rep.torsion = hodge(rep.d_omega);
    TorsionSplit split;
    split.t2 = KForm(6, 3);
    split.x = KForm(6, 1);
    split.t12 = Rat(-1, 2) * hodge(rep.d_omega);
    split.w2 = IntrinsicTorsion(6);
    rep.cls = gray_hervella_class(assemble_torsion(split));
    rep.pure_w3 = !rep.cls.w1 && !rep.cls.w2 && rep.cls.w3 && !rep.cls.w4;
    rep.d_torsion = coframe_d(cf, rep.torsion);
    rep.sigma = sigma_4form(rep.torsion);
    rep.parallel = (rep.d_torsion == Rat(2) * rep.sigma);
    return rep;
}

} // namespace ahm6
