#include "ahm6/isotropy.hpp"

#include <stdexcept>

#include "ahm6/exterior.hpp"
#include "ahm6/unitary.hpp"

namespace ahm6 {

namespace {

std::vector<std::vector<Rat>> basis_columns(const std::vector<KForm>& basis, int grade) {
    std::vector<std::vector<Rat>> cols;
    for (const auto& b : basis) cols.push_back(form_coords(b, grade));
    return cols;
}

} // namespace

const std::vector<KForm>& Lambda12Params::basis() {
    static const std::vector<KForm> b = [] {
        // A1..A6 pair a blade with its volume complement, A7..A10 are the
        // re-signed diagonal pairs, A11 and A12 the two four-term
        // combinations (the u(2)-orbit representative and its rotation).
        auto mk = [](std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
            KForm f(6, 3);
            for (const auto& [idx, s] : terms) f.add_term(blade_of(idx), Rat(s));
            return f;
        };
        std::vector<KForm> out;
        out.push_back(mk({{{1, 2, 3}, 1}, {{3, 5, 6}, -1}}));
        out.push_back(mk({{{1, 2, 4}, 1}, {{4, 5, 6}, -1}}));
        out.push_back(mk({{{1, 2, 5}, 1}, {{3, 4, 5}, -1}}));
        out.push_back(mk({{{1, 2, 6}, 1}, {{3, 4, 6}, -1}}));
        out.push_back(mk({{{1, 3, 4}, 1}, {{1, 5, 6}, -1}}));
        out.push_back(mk({{{2, 3, 4}, 1}, {{2, 5, 6}, -1}}));
        out.push_back(mk({{{1, 3, 5}, 1}, {{2, 4, 5}, 1}}));
        out.push_back(mk({{{2, 4, 6}, 1}, {{1, 3, 6}, 1}}));
        out.push_back(mk({{{1, 4, 5}, 1}, {{2, 3, 5}, -1}}));
        out.push_back(mk({{{2, 3, 6}, 1}, {{1, 4, 6}, -1}}));
        out.push_back(mk({{{1, 3, 5}, 1}, {{2, 4, 5}, -1}, {{2, 3, 6}, 1}, {{1, 4, 6}, 1}}));
        out.push_back(mk({{{2, 4, 6}, 1}, {{1, 3, 6}, -1}, {{1, 4, 5}, 1}, {{2, 3, 5}, 1}}));
        return out;
    }();
    return b;
}

KForm Lambda12Params::to_form() const {
    KForm f(6, 3);
    const auto& b = basis();
    for (int i = 0; i < 12; ++i) f += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    return f;
}

std::optional<Lambda12Params> Lambda12Params::from_form(const KForm& form) {
    if (form.dim() != 6 || (!form.is_zero() && form.grade() != 3)) return std::nullopt;
    auto coords = coords_in_span(basis_columns(basis(), 3), form_coords(form, 3));
    if (!coords) return std::nullopt;
    Lambda12Params p;
    for (int i = 0; i < 12; ++i) p.a[static_cast<size_t>(i)] = (*coords)[static_cast<size_t>(i)];
    return p;
}

bool Lambda12Params::is_zero() const {
    for (const auto& v : a)
        if (!rat_is_zero(v)) return false;
    return true;
}

KForm U3TwoFormParams::to_form() const {
    auto basis = u_basis(6);
    KForm f(6, 2);
    for (int i = 0; i < 9; ++i) f += w[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)];
    return f;
}

std::optional<U3TwoFormParams> U3TwoFormParams::from_form(const KForm& form) {
    if (form.dim() != 6 || (!form.is_zero() && form.grade() != 2)) return std::nullopt;
    auto coords = coords_in_span(basis_columns(u_basis(6), 2), form_coords(form, 2));
    if (!coords) return std::nullopt;
    U3TwoFormParams p;
    for (int i = 0; i < 9; ++i) p.w[static_cast<size_t>(i)] = (*coords)[static_cast<size_t>(i)];
    return p;
}

RatMatrix isotropy_matrix(const Lambda12Params& p) {
    const Rat& a1 = p.a[0]; const Rat& a2 = p.a[1]; const Rat& a3 = p.a[2]; const Rat& a4 = p.a[3];
    const Rat& a5 = p.a[4]; const Rat& a6 = p.a[5]; const Rat& a7 = p.a[6]; const Rat& a8 = p.a[7];
    const Rat& a9 = p.a[8]; const Rat& a10 = p.a[9]; const Rat& a11 = p.a[10]; const Rat& a12 = p.a[11];
    Rat A = a7 + a10, B = a7 - a10, C = a8 + a9, D = a8 - a9;
    Rat z(0);
    std::vector<std::vector<Rat>> rows = {
        {2 * a12, z, z, 2 * a2, -2 * a1, 2 * a12, -2 * a6, 2 * a5, -2 * a12},
        {-2 * a11, z, z, -2 * a1, -2 * a2, -2 * a11, 2 * a5, 2 * a6, 2 * a11},
        {a6, a1, a2, -a3, -a4, z, D - 2 * a12, -B - 2 * a11, z},
        {-a5, a2, -a1, -a4, a3, z, -B + 2 * a11, -D - 2 * a12, z},
        {z, a5, -a6, C - 2 * a12, -A - 2 * a11, -a2, -a3, -a4, z},
        {z, -a6, -a5, A - 2 * a11, C + 2 * a12, -a1, a4, -a3, z},
        {-D, 2 * a4, -2 * a3, z, z, D, -2 * a6, -2 * a5, -D},
        {B, -2 * a3, -2 * a4, z, z, -B, 2 * a5, -2 * a6, B},
        {z, 2 * a10, 2 * a8, -a6, -a5, z, a2, a1, a3},
        {z, -2 * a9, 2 * a7, -a5, a6, z, a1, -a2, -a4},
        {C, -2 * a4, -2 * a3, 2 * a2, 2 * a1, -C, z, z, -C},
        {A, -2 * a3, 2 * a4, 2 * a1, -2 * a2, -A, z, z, -A}};
    RatMatrix m(12, 9);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 9; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

namespace {

std::vector<KForm> ambient_basis(Ambient ambient) {
    if (ambient == Ambient::u3) return u_basis(6);
    std::vector<KForm> out;
    for (Blade b : enumerate_blades(6, 2)) out.push_back(KForm::basis(6, b));
    return out;
}

OrbitTag tag_for_lambda12(const KForm& form, const IsotropyResult& res) {
    if (form.is_zero()) return OrbitTag::full;
    switch (res.dim) {
        case 0: return OrbitTag::zero_dim;
        case 1: return OrbitTag::one_dim;
        case 2: return OrbitTag::two_dim;
        case 3: {
            LieAlgebraTable t = stabilizer_table(res.generators);
            auto [pos, neg, zero] = t.killing_form().signature();
            if (neg == 3 && zero == 0) return OrbitTag::so3;
            throw std::logic_error("orbit_tag: 3-dimensional stabilizer is not so(3)");
        }
        case 4: {
            LieAlgebraTable t = stabilizer_table(res.generators);
            auto center = t.center_basis();
            auto derived = t.derived_basis();
            if (center.size() == 1 && derived.size() == 3) {
                LieAlgebraTable d = t.subalgebra(derived);
                auto [pos, neg, zero] = d.killing_form().signature();
                if (neg == 3 && zero == 0) return OrbitTag::u2;
            }
            throw std::logic_error("orbit_tag: 4-dimensional stabilizer is not u(2)");
        }
        default:
            throw std::logic_error("orbit_tag: unexpected stabilizer dimension " + std::to_string(res.dim));
    }
}

} // namespace

IsotropyResult isotropy_algebra(const KForm& form, Ambient ambient) {
    if (form.dim() != 6 || (!form.is_zero() && form.grade() != 3))
        throw std::invalid_argument("isotropy_algebra: 3-form on R^6 expected");
    auto basis = ambient_basis(ambient);
    std::vector<std::vector<Rat>> cols;
    for (const auto& w : basis) cols.push_back(form_coords(rho_action(w, form), 3));
    RatMatrix sys = RatMatrix::from_columns(cols);
    auto kernel = sys.kernel();

    IsotropyResult res;
    res.dim = static_cast<int>(kernel.size());
    for (const auto& k : kernel) {
        KForm g(6, 2);
        for (size_t i = 0; i < basis.size(); ++i) g += k[i] * basis[i];
        res.generators.push_back(g);
    }
    if (form.is_zero()) {
        res.tag = OrbitTag::full;
    } else if (ambient == Ambient::u3 && Lambda12Params::from_form(form)) {
        res.tag = tag_for_lambda12(form, res);
    } else {
        res.tag = res.dim == 0 ? OrbitTag::zero_dim
                : res.dim == 1 ? OrbitTag::one_dim
                : res.dim == 2 ? OrbitTag::two_dim
                               : OrbitTag::other;
    }
    return res;
}

OrbitTag orbit_tag(const KForm& form) {
    if (!Lambda12Params::from_form(form))
        throw std::invalid_argument("orbit_tag: form is not in Lambda^3_12");
    return isotropy_algebra(form, Ambient::u3).tag;
}

std::string orbit_tag_str(OrbitTag tag) {
    switch (tag) {
        case OrbitTag::u2: return "u2";
        case OrbitTag::so3: return "so3";
        case OrbitTag::two_dim: return "two_dim";
        case OrbitTag::one_dim: return "one_dim";
        case OrbitTag::zero_dim: return "zero_dim";
        case OrbitTag::full: return "full";
        default: return "other";
    }
}

namespace {

// rho(k1 e12 + k2 e34 + k3 e56) restricted to Lambda^3_12 in the A-basis.
RatMatrix circle_action_matrix(int k1, int k2, int k3) {
    KForm w(6, 2);
    w.add_term(blade_of({1, 2}), Rat(k1));
    w.add_term(blade_of({3, 4}), Rat(k2));
    w.add_term(blade_of({5, 6}), Rat(k3));
    const auto& basis = Lambda12Params::basis();
    std::vector<std::vector<Rat>> cols;
    for (const auto& b : basis) {
        auto p = Lambda12Params::from_form(rho_action(w, b));
        if (!p) throw std::logic_error("circle action left Lambda^3_12");
        cols.push_back(std::vector<Rat>(p->a.begin(), p->a.end()));
    }
    return RatMatrix::from_columns(cols);
}

} // namespace

std::pair<bool, int> circle_preserves(int k1, int k2, int k3) {
    if (k1 == 0 && k2 == 0 && k3 == 0)
        throw std::invalid_argument("circle_preserves: (k1,k2,k3) must be nonzero");
    int dim = static_cast<int>(circle_action_matrix(k1, k2, k3).kernel().size());
    return {dim > 0, dim};
}

LemmaCaseReport lemma_algebra_case_report(int k1, int k2, int k3) {
    auto [preserves, kdim] = circle_preserves(k1, k2, k3);
    if (!preserves)
        throw std::domain_error("lemma_algebra_case_report: circle does not preserve any nonzero form");

    LemmaCaseReport rep;
    rep.solution_dim = kdim;

    int ks[3] = {k1, k2, k3};
    int zeros = 0;
    std::vector<int> nz;
    for (int k : ks) {
        if (k == 0) ++zeros;
        else nz.push_back(k);
    }
    if (zeros == 2) rep.case_tag = "1.2";
    else if (zeros == 1) {
        if (nz[0] == nz[1]) rep.case_tag = "1.3";
        else if (nz[0] == -nz[1]) rep.case_tag = "1.4";
        else rep.case_tag = "1.1";
    } else {
        rep.case_tag = "2";
    }

    auto kernel = circle_action_matrix(k1, k2, k3).kernel();
    std::vector<bool> support(12, false);
    for (const auto& v : kernel)
        for (int i = 0; i < 12; ++i)
            if (!rat_is_zero(v[static_cast<size_t>(i)])) support[static_cast<size_t>(i)] = true;
    for (int i = 0; i < 12; ++i)
        if (support[static_cast<size_t>(i)]) rep.param_indices.push_back(i + 1);

    // Generic element of the solution space: prime weights keep it away
    // from the lower-dimensional strata.
    static const int weights[] = {2, 3, 5, 7, 11, 13};
    Lambda12Params generic;
    for (size_t v = 0; v < kernel.size(); ++v)
        for (int i = 0; i < 12; ++i) generic.a[static_cast<size_t>(i)] += Rat(weights[v % 6]) * kernel[v][static_cast<size_t>(i)];
    rep.generic_isotropy_dim = isotropy_algebra(generic.to_form(), Ambient::u3).dim;

    if (rep.case_tag == "1.3")
        rep.constraints = {"A3*A10 = -A4*A9", "A7*A10 = -A8*A9", "A3*A8 = A4*A7"};
    else if (rep.case_tag == "1.4")
        rep.constraints = {"A11 = 0", "A12 = 0"};
    return rep;
}

LieAlgebraTable stabilizer_table(const std::vector<KForm>& generators) {
    std::vector<std::vector<Rat>> cols = basis_columns(generators, 2);
    std::vector<std::string> labels;
    for (size_t i = 0; i < generators.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
    return LieAlgebraTable::from_brackets(
        static_cast<int>(generators.size()), labels, [&](int i, int j) {
            KForm br = rho_action(generators[static_cast<size_t>(i)], generators[static_cast<size_t>(j)]);
            auto coords = coords_in_span(cols, form_coords(br, 2));
            if (!coords) throw std::invalid_argument("stabilizer_table: generators not bracket-closed");
            return *coords;
        });
}

} // namespace ahm6
