#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "ahm6/kform.hpp"
#include "ahm6/rat_matrix.hpp"

namespace ahm6 {

/// Element of Cliff(R^n), n <= 7, in the ordered-blade basis with exact
/// rational coefficients; blades of mixed grade are allowed. The defining
/// relations are e_i e_j = e_{ij} for i < j and e_i e_i = -1.
class CliffordElement {
public:
    using TermMap = std::map<Blade, Rat, BladeLess>;

    CliffordElement() : dim_(0) {}
    explicit CliffordElement(int dim) : dim_(dim) {
        if (dim < 0 || dim > 7) throw std::invalid_argument("CliffordElement: dim must be in 0..7");
    }

    static CliffordElement scalar(int dim, const Rat& c);
    static CliffordElement basis(int dim, Blade b, const Rat& c = Rat(1));

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Blade b, const Rat& c);

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    CliffordElement& operator*=(const Rat& s);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { a += b; return a; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { a -= b; return a; }
    friend CliffordElement operator*(const Rat& s, CliffordElement x) { x *= s; return x; }
    bool operator==(const CliffordElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    std::string str() const;

private:
    int dim_;
    TermMap terms_;
};

/// Associative Clifford product.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);

/// A k-form as the Clifford element sum c_B e_{b1} ... e_{bk}.
CliffordElement embed_form(const KForm& form);
CliffordElement embed_3form(const KForm& form);

/// Returns c iff x = c * 1 exactly (blade-basis test).
std::optional<Rat> is_scalar(const CliffordElement& x);

/// The real 8-dimensional spin representation of Cliff(R^7): seven 8x8
/// integer matrices with gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij.
/// Loaded from a plain-text fixture of 7 blocks of 8 rows of 8 integers
/// ('#' starts a comment line); the relations are checked at load.
class GammaRep {
public:
    static GammaRep load(const std::string& path);

    /// Matrix of gamma_{i1} ... gamma_{ik} for an ascending blade.
    const std::array<std::array<int, 8>, 8>& blade_matrix(Blade b) const { return blade_mats_[b]; }

    const std::array<std::array<int, 8>, 8>& gamma(int i) const { return gammas_[static_cast<size_t>(i - 1)]; }

private:
    GammaRep() = default;
    std::array<std::array<std::array<int, 8>, 8>, 7> gammas_{};
    std::vector<std::array<std::array<int, 8>, 8>> blade_mats_;
};

/// Fixture resolution: $AHM6_GAMMA_FIXTURE if set, else the compiled-in
/// default path.
std::string gamma_fixture_path();

/// Cached fixture at gamma_fixture_path(); throws on a bad fixture.
const GammaRep& default_gamma_rep();

/// Image of a Clifford element in the spin representation (8x8 over Q).
RatMatrix gamma_rep_of(const CliffordElement& x, const GammaRep& rep = default_gamma_rep());

/// Distinct diagonal entries of gamma_rep_of(T)^2 for the Lambda^3_12 form
/// with the given 12 coefficients (A-basis of the isotropy module).
std::set<Rat> lambda12_square_diagnostics(const std::array<Rat, 12>& a,
                                          const GammaRep& rep = default_gamma_rep());

/// Scalar test for T^2 + sum_k R_k * g_k with R_k, g_k 2-forms (the g_k are
/// the stabilizer generators, R_k their curvature coefficient forms).
/// Returns the scalar value iff the element is scalar.
std::optional<Rat> jacobi_scalar_check(const KForm& torsion,
                                       const std::vector<KForm>& generators,
                                       const std::vector<KForm>& r_forms);

/// True iff some curvature R = sum R_ij e_i e_j * g with values in the span
/// of the single generator makes T^2 + R a scalar.
bool scalar_completion_exists(const KForm& torsion, const KForm& generator,
                              const GammaRep& rep = default_gamma_rep());

/// Real nullity of the torsion form acting in the spin representation.
int spinor_kernel_dim(const KForm& torsion, const GammaRep& rep = default_gamma_rep());

} // namespace ahm6
