#include "ahm6/kform.hpp"

namespace ahm6 {

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    KForm out(a.dim(), a.grade() + b.grade());
    if (a.grade() + b.grade() > a.dim()) return out;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            int s = wedge_sign(ba, bb);
            if (s != 0) out.add_term(ba | bb, rat_signed(s, ca * cb));
        }
    return out;
}

KForm interior(int index, const KForm& form) {
    if (index < 1 || index > form.dim()) throw std::invalid_argument("interior: index out of range");
    KForm out(form.dim(), form.grade() > 0 ? form.grade() - 1 : 0);
    if (form.grade() == 0) return out;
    Blade bit = blade_bit(index);
    for (const auto& [b, c] : form.terms()) {
        if (!(b & bit)) continue;
        int s = interior_sign(index, b);
        out.add_term(b & ~bit, rat_signed(s, c));
    }
    return out;
}

KForm interior_vec(const KForm& v, const KForm& form) {
    if (v.dim() != form.dim()) throw std::invalid_argument("interior_vec: dimension mismatch");
    if (v.grade() != 1 && !v.is_zero()) throw std::invalid_argument("interior_vec: contraction argument must be grade 1");
    KForm out(form.dim(), form.grade() > 0 ? form.grade() - 1 : 0);
    for (const auto& [b, c] : v.terms()) {
        int index = blade_indices(b)[0];
        out += c * interior(index, form);
    }
    return out;
}

KForm hodge(const KForm& form) {
    int n = form.dim();
    Blade full = (Blade{1} << n) - 1;
    KForm out(n, n - form.grade());
    for (const auto& [b, c] : form.terms()) {
        Blade comp = full & ~b;
        int s = wedge_sign(b, comp);
        out.add_term(comp, rat_signed(s, c));
    }
    return out;
}

Rat inner(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    if (!a.is_zero() && !b.is_zero() && a.grade() != b.grade())
        throw std::invalid_argument("inner: grade mismatch");
    Rat out(0);
    for (const auto& [blade, c] : a.terms()) {
        Rat cb = b.coeff(blade);
        if (!rat_is_zero(cb)) out += c * cb;
    }
    return out;
}

KForm rho_action(const KForm& omega, const KForm& form) {
    if (omega.dim() != form.dim()) throw std::invalid_argument("rho_action: dimension mismatch");
    KForm out(form.dim(), form.grade());
    for (int i = 1; i <= form.dim(); ++i)
        out += wedge(interior(i, omega), interior(i, form));
    return out;
}

Rat scalar_value(const KForm& form) {
    if (form.is_zero()) return Rat(0);
    if (form.grade() != 0) throw std::invalid_argument("scalar_value: form has positive grade");
    return form.coeff(0);
}

Rat eval_form(const KForm& form, const std::vector<KForm>& args) {
    KForm cur = form;
    for (const auto& v : args) cur = interior_vec(v, cur);
    return scalar_value(cur);
}

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        bool neg = sgn(c) < 0;
        Rat a = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (b == 0) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += blade_str(b);
        }
    }
    return out;
}

} // namespace ahm6
