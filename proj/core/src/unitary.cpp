#include "ahm6/unitary.hpp"

#include <algorithm>
#include <stdexcept>

namespace ahm6 {

namespace {

void require_even_dim(int dim, const char* where) {
    if (dim != 4 && dim != 6) throw std::invalid_argument(std::string(where) + ": dim must be 4 or 6");
}

KForm b3(std::initializer_list<int> a, int sa, std::initializer_list<int> b, int sb,
         std::initializer_list<int> c = {}, int sc = 0, std::initializer_list<int> d = {}, int sd = 0) {
    KForm f(6, 3);
    f.add_term(blade_of(a), Rat(sa));
    f.add_term(blade_of(b), Rat(sb));
    if (sc) f.add_term(blade_of(c), Rat(sc));
    if (sd) f.add_term(blade_of(d), Rat(sd));
    return f;
}

} // namespace

KForm kaehler_form(int dim) {
    require_even_dim(dim, "kaehler_form");
    KForm f(dim, 2);
    for (int i = 1; i + 1 <= dim; i += 2) f.add_term(blade_of({i, i + 1}), Rat(1));
    return f;
}

KForm j_pullback(const KForm& form) {
    require_even_dim(form.dim(), "j_pullback");
    KForm out(form.dim(), form.grade());
    for (const auto& [b, c] : form.terms()) {
        int sign = 1;
        std::vector<int> mapped;
        for (int i : blade_indices(b)) {
            if (i % 2 == 1) { mapped.push_back(i + 1); sign = -sign; }
            else            { mapped.push_back(i - 1); }
        }
        // sort the substituted indices, tracking the permutation parity
        for (size_t p = 1; p < mapped.size(); ++p)
            for (size_t q = p; q > 0 && mapped[q - 1] > mapped[q]; --q) {
                std::swap(mapped[q - 1], mapped[q]);
                sign = -sign;
            }
        Blade nb = 0;
        for (int i : mapped) nb |= blade_bit(i);
        out.add_term(nb, sign > 0 ? c : -c);
    }
    return out;
}

KForm j_vec(const KForm& v) {
    require_even_dim(v.dim(), "j_vec");
    if (!v.is_zero() && v.grade() != 1) throw std::invalid_argument("j_vec: grade-1 form expected");
    KForm out(v.dim(), 1);
    for (const auto& [b, c] : v.terms()) {
        int i = blade_indices(b)[0];
        if (i % 2 == 1) out.add_term(blade_bit(i + 1), c);
        else            out.add_term(blade_bit(i - 1), -c);
    }
    return out;
}

std::pair<KForm, KForm> split_u_m(const KForm& omega) {
    if (!omega.is_zero() && omega.grade() != 2) throw std::invalid_argument("split_u_m: 2-form expected");
    KForm j = j_pullback(omega);
    Rat half(1, 2);
    return {half * (omega + j), half * (omega - j)};
}

KForm u_part(const KForm& omega) { return split_u_m(omega).first; }
KForm m_part(const KForm& omega) { return split_u_m(omega).second; }

std::vector<KForm> m_basis(int dim) {
    require_even_dim(dim, "m_basis");
    std::vector<KForm> out;
    auto add = [&](int a, int b, int c, int d, int sd) {
        KForm f(dim, 2);
        f.add_term(blade_of({a, b}), Rat(1));
        f.add_term(blade_of({c, d}), Rat(sd));
        out.push_back(f);
    };
    // pairs of complex lines (2i-1, 2i), (2j-1, 2j), i < j
    for (int i = 1; i <= dim / 2; ++i)
        for (int j = i + 1; j <= dim / 2; ++j) {
            int a = 2 * i - 1, b = 2 * j - 1;
            add(a, b, a + 1, b + 1, -1);  // e_{2i-1,2j-1} - e_{2i,2j}
            add(a, b + 1, a + 1, b, +1);  // e_{2i-1,2j} + e_{2i,2j-1}
        }
    return out;
}

std::vector<KForm> u_basis(int dim) {
    require_even_dim(dim, "u_basis");
    std::vector<KForm> out;
    if (dim == 6) {
        auto f2 = [&](std::initializer_list<int> a) { return KForm::basis(6, blade_of(a)); };
        auto p2 = [&](std::initializer_list<int> a, int s, std::initializer_list<int> b) {
            KForm f(6, 2);
            f.add_term(blade_of(a), Rat(1));
            f.add_term(blade_of(b), Rat(s));
            return f;
        };
        out = {f2({1, 2}),
               p2({1, 3}, +1, {2, 4}), p2({1, 4}, -1, {2, 3}),
               p2({1, 5}, +1, {2, 6}), p2({1, 6}, -1, {2, 5}),
               f2({3, 4}),
               p2({3, 5}, +1, {4, 6}), p2({3, 6}, -1, {4, 5}),
               f2({5, 6})};
    } else {
        auto p2 = [&](std::initializer_list<int> a, int s, std::initializer_list<int> b) {
            KForm f(4, 2);
            f.add_term(blade_of(a), Rat(1));
            f.add_term(blade_of(b), Rat(s));
            return f;
        };
        out = {KForm::basis(4, blade_of({1, 2})), KForm::basis(4, blade_of({3, 4})),
               p2({1, 3}, +1, {2, 4}), p2({1, 4}, -1, {2, 3})};
    }
    return out;
}

KForm tau(const KForm& form, const std::optional<KForm>& omega) {
    if (form.dim() != 6) throw std::invalid_argument("tau: dim 6 expected");
    return rho_action(omega ? *omega : kaehler_form(6), form);
}

Lambda3Split project_lambda3(const KForm& form) {
    if (form.dim() != 6) throw std::invalid_argument("project_lambda3: dim 6 expected");
    if (!form.is_zero() && form.grade() != 3) throw std::invalid_argument("project_lambda3: 3-form expected");
    // A = -*J is +Id on Lambda^3_+ and -Id on Lambda^3_- = {X ^ Omega}.
    KForm a = Rat(-1) * hodge(j_pullback(form));
    Rat half(1, 2);
    KForm plus = half * (form + a);
    KForm minus = half * (form - a);
    // tau^2 = -9 on Lambda^3_2 and -1 on Lambda^3_12.
    KForm t2 = Rat(-1, 8) * (tau(tau(plus)) + plus);
    KForm t12 = plus - t2;
    // Recover X from minus = X ^ Omega; the forms e_i ^ Omega are orthogonal
    // with squared norm 2.
    KForm omega = kaehler_form(6);
    KForm x(6, 1);
    for (int i = 1; i <= 6; ++i) {
        Rat xi = inner(minus, wedge(KForm::e(6, i), omega)) / 2;
        x.add_term(blade_bit(i), xi);
    }
    if (wedge(x, omega) != minus)
        throw std::logic_error("project_lambda3: Lambda^3_- part is not of the form X ^ Omega");
    return {t2, x, t12};
}

bool in_lambda3_2(const KForm& form) {
    auto s = project_lambda3(form);
    return s.x.is_zero() && s.t12.is_zero();
}
bool in_lambda3_6(const KForm& form) {
    auto s = project_lambda3(form);
    return s.t2.is_zero() && s.t12.is_zero();
}
bool in_lambda3_12(const KForm& form) {
    auto s = project_lambda3(form);
    return s.t2.is_zero() && s.x.is_zero();
}

RatMatrix lambda3_projector(int which) {
    auto fn = [which](const KForm& f) {
        auto s = project_lambda3(f);
        if (which == 2) return s.t2;
        if (which == 6) return wedge(s.x, kaehler_form(6));
        if (which == 12) return s.t12;
        throw std::invalid_argument("lambda3_projector: which must be 2, 6 or 12");
    };
    return matrix_of(fn, 6, 3, 3).matrix;
}

std::vector<KForm> lambda3_2_basis() {
    return {b3({2, 4, 6}, -1, {1, 3, 6}, +1, {1, 4, 5}, +1, {2, 3, 5}, +1),
            b3({1, 3, 5}, -1, {2, 4, 5}, +1, {2, 3, 6}, +1, {1, 4, 6}, +1)};
}

std::vector<KForm> lambda3_6_basis() {
    std::vector<KForm> out;
    for (int i = 1; i <= 6; ++i) out.push_back(wedge(KForm::e(6, i), kaehler_form(6)));
    return out;
}

std::vector<KForm> lambda3_12_basis() {
    return {b3({1, 2, 3}, 1, {3, 5, 6}, -1), b3({1, 2, 4}, 1, {4, 5, 6}, -1),
            b3({1, 2, 5}, 1, {3, 4, 5}, -1), b3({1, 2, 6}, 1, {3, 4, 6}, -1),
            b3({1, 3, 4}, 1, {1, 5, 6}, -1), b3({2, 3, 4}, 1, {2, 5, 6}, -1),
            b3({1, 3, 5}, 1, {2, 4, 5}, +1), b3({2, 4, 6}, 1, {1, 3, 6}, +1),
            b3({1, 3, 5}, 1, {2, 3, 6}, +1), b3({2, 4, 6}, 1, {1, 4, 5}, +1),
            b3({1, 3, 5}, 1, {1, 4, 6}, +1), b3({2, 4, 6}, 1, {2, 3, 5}, +1)};
}

IntrinsicTorsion::IntrinsicTorsion(int dim) : dim_(dim), gamma_(static_cast<size_t>(dim), KForm(dim, 2)) {
    require_even_dim(dim, "IntrinsicTorsion");
}

IntrinsicTorsion::IntrinsicTorsion(int dim, std::vector<KForm> gamma) : dim_(dim), gamma_(std::move(gamma)) {
    require_even_dim(dim, "IntrinsicTorsion");
    if (gamma_.size() != static_cast<size_t>(dim)) throw std::invalid_argument("IntrinsicTorsion: wrong component count");
    for (size_t i = 0; i < gamma_.size(); ++i) set_gamma(static_cast<int>(i + 1), gamma_[i]);
}

void IntrinsicTorsion::set_gamma(int i, const KForm& g) {
    if (g.dim() != dim_) throw std::invalid_argument("IntrinsicTorsion: component dimension mismatch");
    if (!g.is_zero() && g.grade() != 2) throw std::invalid_argument("IntrinsicTorsion: component must be a 2-form");
    if (j_pullback(g) != Rat(-1) * g)
        throw std::invalid_argument("IntrinsicTorsion: component is not in m (J(w) = -w fails)");
    gamma_[static_cast<size_t>(i - 1)] = g;
}

KForm IntrinsicTorsion::gamma_vec(const KForm& v) const {
    KForm out(dim_, 2);
    for (const auto& [b, c] : v.terms()) out += c * gamma(blade_indices(b)[0]);
    return out;
}

bool IntrinsicTorsion::is_zero() const {
    for (const auto& g : gamma_)
        if (!g.is_zero()) return false;
    return true;
}

IntrinsicTorsion& IntrinsicTorsion::operator+=(const IntrinsicTorsion& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("IntrinsicTorsion: dimension mismatch");
    for (size_t i = 0; i < gamma_.size(); ++i) gamma_[i] += o.gamma_[i];
    return *this;
}
IntrinsicTorsion& IntrinsicTorsion::operator-=(const IntrinsicTorsion& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("IntrinsicTorsion: dimension mismatch");
    for (size_t i = 0; i < gamma_.size(); ++i) gamma_[i] -= o.gamma_[i];
    return *this;
}
IntrinsicTorsion& IntrinsicTorsion::operator*=(const Rat& s) {
    for (auto& g : gamma_) g *= s;
    return *this;
}

IntrinsicTorsion theta(const KForm& form) {
    require_even_dim(form.dim(), "theta");
    IntrinsicTorsion out(form.dim());
    for (int i = 1; i <= form.dim(); ++i) out.set_gamma(i, m_part(interior(i, form)));
    return out;
}

KForm phi(const IntrinsicTorsion& gamma) {
    KForm out(gamma.dim(), 3);
    for (int i = 1; i <= gamma.dim(); ++i) out += wedge(KForm::e(gamma.dim(), i), gamma.gamma(i));
    return out;
}

std::vector<IntrinsicTorsion> torsion_basis(int dim) {
    auto mb = m_basis(dim);
    std::vector<IntrinsicTorsion> out;
    for (int i = 1; i <= dim; ++i)
        for (const auto& m : mb) {
            IntrinsicTorsion g(dim);
            g.set_gamma(i, m);
            out.push_back(g);
        }
    return out;
}

std::vector<Rat> torsion_coords(const IntrinsicTorsion& gamma) {
    // The m-basis forms are orthogonal with squared norm 2.
    auto mb = m_basis(gamma.dim());
    std::vector<Rat> out;
    for (int i = 1; i <= gamma.dim(); ++i)
        for (const auto& m : mb) out.push_back(inner(gamma.gamma(i), m) / 2);
    return out;
}

IntrinsicTorsion coords_torsion(int dim, const std::vector<Rat>& coords) {
    auto mb = m_basis(dim);
    if (coords.size() != mb.size() * static_cast<size_t>(dim))
        throw std::invalid_argument("coords_torsion: size mismatch");
    IntrinsicTorsion out(dim);
    size_t k = 0;
    for (int i = 1; i <= dim; ++i) {
        KForm g(dim, 2);
        for (const auto& m : mb) g += coords[k++] * m;
        out.set_gamma(i, g);
    }
    return out;
}

IntrinsicTorsion act_torsion(const KForm& omega, const IntrinsicTorsion& gamma) {
    int n = gamma.dim();
    IntrinsicTorsion out(n);
    for (int i = 1; i <= n; ++i) {
        KForm val = rho_action(omega, gamma.gamma(i)) - gamma.gamma_vec(rho_action(omega, KForm::e(n, i)));
        out.set_gamma(i, val);
    }
    return out;
}

TorsionSplit w_projection(const IntrinsicTorsion& gamma) {
    int n = gamma.dim();
    KForm f = phi(gamma);
    TorsionSplit split;
    if (n == 6) {
        auto s = project_lambda3(f);
        split.t2 = Rat(1, 3) * s.t2;
        split.x = s.x;
        split.t12 = s.t12;
    } else {
        // In dim 4 every 3-form is X ^ Omega and Phi Theta = Id.
        KForm omega = kaehler_form(4);
        split.t2 = KForm(4, 3);
        split.t12 = KForm(4, 3);
        KForm x(4, 1);
        for (int i = 1; i <= 4; ++i)
            x.add_term(blade_bit(i), inner(f, wedge(KForm::e(4, i), omega)));
        if (wedge(x, omega) != f) throw std::logic_error("w_projection: dim-4 X recovery failed");
        split.x = x;
    }
    split.w2 = gamma - theta(assembled_form(split));
    if (!phi(split.w2).is_zero()) throw std::logic_error("w_projection: W2 part is not in Ker(Phi)");
    return split;
}

IntrinsicTorsion assemble_torsion(const TorsionSplit& split) {
    IntrinsicTorsion out = theta(assembled_form(split));
    out += split.w2;
    return out;
}

KForm assembled_form(const TorsionSplit& split) {
    int n = split.x.dim() ? split.x.dim() : split.t2.dim();
    KForm f = wedge(split.x, kaehler_form(n));
    if (n == 6) f += split.t2 + split.t12;
    return f;
}

KForm psi(const KForm& t_ref, const IntrinsicTorsion& gamma) {
    if (t_ref.dim() != 6 || gamma.dim() != 6) throw std::invalid_argument("psi: dim 6 expected");
    if (t_ref.is_zero() || !in_lambda3_2(t_ref))
        throw std::invalid_argument("psi: reference form must be a nonzero element of Lambda^3_2");
    KForm out(6, 2);
    for (int i = 1; i <= 6; ++i) out += hodge(wedge(interior(i, t_ref), gamma.gamma(i)));
    return out;
}

KForm pi_codifferential(const IntrinsicTorsion& gamma) {
    int n = gamma.dim();
    KForm out(n, 1);
    for (int i = 1; i <= n; ++i) {
        KForm ei = KForm::e(n, i);
        out += interior_vec(j_vec(ei), gamma.gamma(i)); // Gamma(e_i)(e_i -| Omega, -)
        out -= j_vec(interior(i, gamma.gamma(i)));      // Omega(e_i -| Gamma(e_i), -)
    }
    return out;
}

KForm pi1_differential(const IntrinsicTorsion& gamma) {
    if (gamma.dim() != 6) throw std::invalid_argument("pi1_differential: dim 6 expected");
    KForm out(6, 3);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            KForm ej = KForm::e(6, j);
            KForm val = interior_vec(j_vec(ej), gamma.gamma(i)) - j_vec(interior(j, gamma.gamma(i)));
            out += wedge(KForm::e(6, i), wedge(ej, val));
        }
    return Rat(1, 2) * out;
}

namespace {

IntrinsicTorsion nijenhuis_from_pairs(int dim, const std::vector<std::pair<KForm, KForm>>& pairs) {
    IntrinsicTorsion out(dim);
    for (int k = 1; k <= dim; ++k) {
        KForm g(dim, 2);
        for (const auto& [omega2, vec] : pairs) g += vec.coeff(blade_bit(k)) * omega2;
        out.set_gamma(k, g);
    }
    return out;
}

KForm m2(int dim, std::initializer_list<int> a, int s, std::initializer_list<int> b) {
    KForm f(dim, 2);
    f.add_term(blade_of(a), Rat(1));
    f.add_term(blade_of(b), Rat(s));
    return f;
}

} // namespace

IntrinsicTorsion nijenhuis_embed(const KForm& n1, const KForm& n2, const KForm& n3) {
    std::vector<std::pair<KForm, KForm>> pairs = {
        {m2(6, {1, 3}, -1, {2, 4}), n1}, {m2(6, {2, 3}, +1, {1, 4}), Rat(-1) * j_vec(n1)},
        {m2(6, {1, 5}, -1, {2, 6}), n2}, {m2(6, {2, 5}, +1, {1, 6}), Rat(-1) * j_vec(n2)},
        {m2(6, {3, 5}, -1, {4, 6}), n3}, {m2(6, {3, 6}, +1, {4, 5}), Rat(-1) * j_vec(n3)}};
    return nijenhuis_from_pairs(6, pairs);
}

IntrinsicTorsion nijenhuis_embed4(const KForm& n1) {
    std::vector<std::pair<KForm, KForm>> pairs = {
        {m2(4, {1, 3}, -1, {2, 4}), n1}, {m2(4, {2, 3}, +1, {1, 4}), Rat(-1) * j_vec(n1)}};
    return nijenhuis_from_pairs(4, pairs);
}

std::string GHClass::str() const {
    std::string out = "{";
    const char* names[4] = {"W1", "W2", "W3", "W4"};
    bool flags[4] = {w1, w2, w3, w4};
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (!flags[i]) continue;
        if (!first) out += ",";
        out += names[i];
        first = false;
    }
    return out + "}";
}

GHClass gray_hervella_class(const IntrinsicTorsion& gamma) {
    int n = gamma.dim();
    TorsionSplit s = w_projection(gamma);
    GHClass cls;
    cls.dim = n;
    cls.w1 = !s.t2.is_zero();
    cls.w2 = !s.w2.is_zero();
    cls.w3 = !s.t12.is_zero();
    cls.w4 = !s.x.is_zero();

    KForm delta_omega = Rat(-1) * pi_codifferential(gamma);
    if (n == 6) {
        KForm d_omega = pi1_differential(gamma);
        KForm omega = kaehler_form(6);
        auto expect = [](bool a, bool b, const char* what) {
            if (a != b) throw std::logic_error(std::string("gray_hervella_class: characterization mismatch: ") + what);
        };
        // cosymplectic: no W4 part
        expect(!cls.w4, wedge(omega, d_omega).is_zero(), "Omega ^ dOmega = 0");
        expect(!cls.w4, j_pullback(d_omega) == hodge(d_omega), "J(dOmega) = *dOmega");
        expect(!cls.w4, delta_omega.is_zero(), "delta Omega = 0");
        // G2: no W1 part
        expect(!cls.w1, tau(tau(d_omega)) == Rat(-1) * d_omega, "tau^2(dOmega) = -dOmega");
        // almost Kaehler: only W2
        expect(!cls.w1 && !cls.w3 && !cls.w4, d_omega.is_zero(), "dOmega = 0");
        // nearly Kaehler: only W1
        expect(!cls.w3 && !cls.w4, tau(tau(d_omega)) == Rat(-9) * d_omega, "tau^2(dOmega) = -9 dOmega");
        // W4 type: 2 dOmega = (delta Omega o J) ^ Omega given skew N
        if (!cls.w2) {
            bool w4_eq = (Rat(2) * d_omega == wedge(j_vec(delta_omega), omega));
            expect(!cls.w1 && !cls.w3, w4_eq, "2 dOmega = (delta Omega o J) ^ Omega");
        }
        // W1 + W2 + W4: no W3 part
        KForm probe = d_omega - Rat(1, 2) * hodge(wedge(delta_omega, omega));
        expect(!cls.w3, tau(tau(probe)) == Rat(-9) * probe, "tau^2[dOmega - (1/2)*(deltaOmega ^ Omega)] = -9[...]");
    }
    return cls;
}

KForm characteristic_torsion(const TorsionSplit& split) {
    if (!split.w2.is_zero())
        throw std::domain_error("characteristic_torsion: nonzero W2 part, no characteristic connection");
    return Rat(-2) * assembled_form(split);
}

namespace {

RatMatrix induced_lambda3(const RatMatrix& g) {
    if (g.rows() != 6 || g.cols() != 6) throw std::invalid_argument("character: 6x6 matrix expected");
    auto image = [&](int i) {
        KForm v(6, 1);
        for (int r = 1; r <= 6; ++r) v.add_term(blade_bit(r), g.at(r - 1, i - 1));
        return v;
    };
    auto fn = [&](const KForm& f) {
        KForm out(6, 3);
        for (const auto& [b, c] : f.terms()) {
            auto idx = blade_indices(b);
            out += c * wedge(image(idx[0]), wedge(image(idx[1]), image(idx[2])));
        }
        return out;
    };
    return matrix_of(fn, 6, 3, 3).matrix;
}

} // namespace

Rat character(const RatMatrix& g, CharacterSpace space) {
    if (space == CharacterSpace::r6_plus_r6) return g.trace() * 2;
    if (space == CharacterSpace::r6_plus_6r1) return g.trace() + 6;
    RatMatrix g3 = induced_lambda3(g);
    int which = space == CharacterSpace::lambda3_2 ? 2 : space == CharacterSpace::lambda3_6 ? 6 : 12;
    RatMatrix p = lambda3_projector(which);
    if (!(g3 * p == p * g3))
        throw std::invalid_argument("character: matrix does not preserve the subspace");
    return (g3 * p).trace();
}

RatMatrix nk_symmetrization_matrix() {
    auto basis = torsion_basis(6);
    auto eval2 = [](const KForm& w, const KForm& u, const KForm& v) {
        return scalar_value(interior_vec(v, interior_vec(u, w)));
    };
    KForm omega = kaehler_form(6);
    RatMatrix m(6 * 6 * 6, static_cast<int>(basis.size()));
    for (size_t t = 0; t < basis.size(); ++t) {
        const IntrinsicTorsion& g = basis[t];
        // (nabla_X Omega)(Y, Z) = Gamma(X)(JY, Z) - Omega(Y -| Gamma(X), Z)
        auto nabla = [&](int x, int y, int z) -> Rat {
            KForm ey = KForm::e(6, y), ez = KForm::e(6, z);
            Rat first = eval2(g.gamma(x), j_vec(ey), ez);
            Rat second = eval2(omega, interior_vec(ey, g.gamma(x)), ez);
            return first - second;
        };
        int row = 0;
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                for (int k = 1; k <= 6; ++k)
                    m.at(row++, static_cast<int>(t)) = nabla(i, j, k) + nabla(j, i, k);
    }
    return m;
}

int trace_j(TraceSpace space) {
    Rat t(0);
    if (space == TraceSpace::r6) {
        for (int i = 1; i <= 6; ++i) t += j_vec(KForm::e(6, i)).coeff(blade_bit(i));
    } else {
        auto basis = space == TraceSpace::m6 ? m_basis(6) : u_basis(6);
        std::vector<std::vector<Rat>> cols;
        for (const auto& b : basis) cols.push_back(form_coords(b, 2));
        for (const auto& b : basis) {
            auto c = coords_in_span(cols, form_coords(j_pullback(b), 2));
            if (!c) throw std::logic_error("trace_j: J does not preserve the space");
            t += (*c)[static_cast<size_t>(&b - basis.data())];
        }
    }
    if (t.get_den() != 1) throw std::logic_error("trace_j: non-integer trace");
    return static_cast<int>(t.get_num().get_si());
}

} // namespace ahm6
