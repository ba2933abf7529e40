#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ahm6/blade.hpp"
#include "ahm6/rational.hpp"

namespace ahm6 {

/// Exterior form of a fixed grade on R^n (n <= 7) with exact rational
/// coefficients. Only nonzero terms are stored; two forms are equal iff
/// their term maps are equal. Immutable in spirit: all operations return
/// new values, so forms are safe to share across threads.
class KForm {
public:
    using TermMap = std::map<Blade, Rat, BladeLess>;

    KForm() : dim_(0), grade_(0) {}
    KForm(int dim, int grade) : dim_(dim), grade_(grade) {
        if (dim < 0 || dim > 7) throw std::invalid_argument("KForm: dim must be in 0..7");
        if (grade < 0) throw std::invalid_argument("KForm: negative grade");
    }

    static KForm zero(int dim, int grade) { return KForm(dim, grade); }

    static KForm basis(int dim, Blade b, const Rat& c = Rat(1)) {
        KForm f(dim, blade_grade(b));
        f.add_term(b, c);
        return f;
    }

    /// Basis 1-form e_i.
    static KForm e(int dim, int index) { return basis(dim, blade_bit(index)); }

    int dim() const { return dim_; }
    int grade() const { return grade_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Blade b, const Rat& c) {
        if (rat_is_zero(c)) return;
        if (blade_grade(b) != grade_) throw std::invalid_argument("KForm: term grade mismatch");
        if (b >> dim_) throw std::invalid_argument("KForm: blade index exceeds dimension");
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else {
            it->second += c;
            if (rat_is_zero(it->second)) terms_.erase(it);
        }
    }

    KForm& operator+=(const KForm& o) {
        require_compatible(o);
        if (terms_.empty()) grade_ = o.grade_;
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    KForm& operator-=(const KForm& o) {
        require_compatible(o);
        if (terms_.empty()) grade_ = o.grade_;
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    KForm& operator*=(const Rat& s) {
        if (rat_is_zero(s)) {
            terms_.clear();
        } else {
            for (auto& [b, c] : terms_) c *= s;
        }
        return *this;
    }

    friend KForm operator+(KForm a, const KForm& b) { a += b; return a; }
    friend KForm operator-(KForm a, const KForm& b) { a -= b; return a; }
    friend KForm operator-(const KForm& a) { KForm r = a; r *= Rat(-1); return r; }
    friend KForm operator*(const Rat& s, KForm f) { f *= s; return f; }
    friend KForm operator*(KForm f, const Rat& s) { f *= s; return f; }

    bool operator==(const KForm& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const KForm& o) const { return !(*this == o); }

    /// Canonical serialization: lexicographic blade order, lowest-term
    /// coefficients, no zero terms. Round-trips through parse_form.
    std::string str() const;

private:
    void require_compatible(const KForm& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("KForm: dimension mismatch");
        if (!terms_.empty() && !o.terms_.empty() && grade_ != o.grade_)
            throw std::invalid_argument("KForm: grade mismatch");
    }

    int dim_;
    int grade_;
    TermMap terms_;
};

/// Exterior product. Bilinear, associative, graded-commutative.
KForm wedge(const KForm& a, const KForm& b);

/// Interior product e_i -| T: antiderivation of degree -1 with e_i -| e_i = 1.
KForm interior(int index, const KForm& form);

/// v -| T for a grade-1 form v.
KForm interior_vec(const KForm& v, const KForm& form);

/// Hodge star for the orthonormal blade metric and orientation e_1...e_n.
KForm hodge(const KForm& form);

/// Scalar product with orthonormal blades. Requires equal dim and grade.
Rat inner(const KForm& a, const KForm& b);

/// so(n) action of a 2-form on forms: rho(w)(T) = sum_i (e_i -| w) ^ (e_i -| T).
KForm rho_action(const KForm& omega, const KForm& form);

/// Value of a grade-0 form.
Rat scalar_value(const KForm& form);

/// T(v1,...,vk) for grade-1 arguments, by iterated contraction.
Rat eval_form(const KForm& form, const std::vector<KForm>& args);

} // namespace ahm6
