#pragma once

#include <optional>
#include <vector>

#include "ahm6/exterior.hpp"
#include "ahm6/kform.hpp"

namespace ahm6 {

// The standard almost complex structure J e_{2i-1} = e_{2i},
// J e_{2i} = -e_{2i-1} on R^4 and R^6, its Kaehler form
// Omega = e12 + e34 (+ e56), and the resulting u(k) + m splitting of the
// 2-forms. On 3-forms over R^6 the operators J, * and tau = rho(Omega)
// cut out the three irreducible pieces
//
//   Lambda^3 = Lambda^3_2 + Lambda^3_6 + Lambda^3_12
//
// with tau acting as 3*, * and -* respectively. The intrinsic-torsion
// space R^n x m carries the four classes W1..W4 via the morphisms
// Theta(T) = sum e_i x pr_m(e_i -| T) and Phi(X x w) = X ^ w.

/// Omega = e12 + e34 (+ e56 for dim 6).
KForm kaehler_form(int dim);

/// Pullback of J on forms: the substitution e_{2i-1} -> -e_{2i},
/// e_{2i} -> e_{2i-1}, extended multiplicatively to blades.
KForm j_pullback(const KForm& form);

/// J on vectors (grade-1 forms under the metric identification):
/// e_{2i-1} -> e_{2i}, e_{2i} -> -e_{2i-1}.
KForm j_vec(const KForm& v);

/// (u(k)-part, m-part) of a 2-form: ((w + Jw)/2, (w - Jw)/2).
std::pair<KForm, KForm> split_u_m(const KForm& omega);

KForm u_part(const KForm& omega);
KForm m_part(const KForm& omega);

/// Basis of m (dim 2k gives k(k-1) elements), J-antiinvariant 2-forms.
std::vector<KForm> m_basis(int dim);

/// Basis of u(k) as 2-forms; for dim 6 ordered as
/// e12, e13+e24, e14-e23, e15+e26, e16-e25, e34, e35+e46, e36-e45, e56.
std::vector<KForm> u_basis(int dim);

/// tau(T) = rho(Omega')(T); Omega' defaults to the standard Kaehler form.
KForm tau(const KForm& form, const std::optional<KForm>& omega = std::nullopt);

struct Lambda3Split {
    KForm t2;   // Lambda^3_2 component
    KForm x;    // vector with Lambda^3_6 component = x ^ Omega
    KForm t12;  // Lambda^3_12 component
};

/// Splits a 3-form on R^6 along Lambda^3_2 + Lambda^3_6 + Lambda^3_12.
Lambda3Split project_lambda3(const KForm& form);

bool in_lambda3_2(const KForm& form);
bool in_lambda3_6(const KForm& form);
bool in_lambda3_12(const KForm& form);

/// 20x20 projector matrices onto the three components.
RatMatrix lambda3_projector(int which); // which in {2, 6, 12}

/// The two reference basis forms of Lambda^3_2.
std::vector<KForm> lambda3_2_basis();
/// e_i ^ Omega, i = 1..6.
std::vector<KForm> lambda3_6_basis();
/// The reference 12-form basis of Lambda^3_12.
std::vector<KForm> lambda3_12_basis();

/// Element of R^n x m: one m-valued 2-form per basis vector.
class IntrinsicTorsion {
public:
    IntrinsicTorsion() = default;
    explicit IntrinsicTorsion(int dim);
    IntrinsicTorsion(int dim, std::vector<KForm> gamma);

    int dim() const { return dim_; }
    const KForm& gamma(int i) const { return gamma_[static_cast<size_t>(i - 1)]; }
    void set_gamma(int i, const KForm& g);

    /// Gamma(v) for an arbitrary vector, by linearity.
    KForm gamma_vec(const KForm& v) const;

    bool is_zero() const;
    IntrinsicTorsion& operator+=(const IntrinsicTorsion& o);
    IntrinsicTorsion& operator-=(const IntrinsicTorsion& o);
    IntrinsicTorsion& operator*=(const Rat& s);
    friend IntrinsicTorsion operator+(IntrinsicTorsion a, const IntrinsicTorsion& b) { a += b; return a; }
    friend IntrinsicTorsion operator-(IntrinsicTorsion a, const IntrinsicTorsion& b) { a -= b; return a; }
    friend IntrinsicTorsion operator*(const Rat& s, IntrinsicTorsion g) { g *= s; return g; }
    bool operator==(const IntrinsicTorsion& o) const { return dim_ == o.dim_ && gamma_ == o.gamma_; }

private:
    int dim_ = 0;
    std::vector<KForm> gamma_;
};

/// Theta(T) = sum_i e_i x pr_m(e_i -| T).
IntrinsicTorsion theta(const KForm& form);

/// Phi(Gamma) = sum_i e_i ^ Gamma(e_i); the total antisymmetrization.
KForm phi(const IntrinsicTorsion& gamma);

/// Basis e_i x m_a of R^n x m in the fixed (i, a) order.
std::vector<IntrinsicTorsion> torsion_basis(int dim);
std::vector<Rat> torsion_coords(const IntrinsicTorsion& gamma);
IntrinsicTorsion coords_torsion(int dim, const std::vector<Rat>& coords);

/// Action of a u(k) 2-form on R^n x m (derivation of the tensor product).
IntrinsicTorsion act_torsion(const KForm& omega, const IntrinsicTorsion& gamma);

struct TorsionSplit {
    KForm t2;             // W1 data: 3-form in Lambda^3_2
    KForm x;              // W4 data: vector, Gamma_6 = Theta(x ^ Omega)
    KForm t12;            // W3 data: 3-form in Lambda^3_12
    IntrinsicTorsion w2;  // W2 part: kernel of Phi
};

/// Splits an intrinsic torsion into its four U(k)-components. The Theta
/// preimage divides the Lambda^3_2 piece of Phi(Gamma) by 3, matching
/// Phi Theta = 3 Id there and Id on the other two components.
TorsionSplit w_projection(const IntrinsicTorsion& gamma);

/// Reassembles Theta(t2) + Theta(x ^ Omega) + Theta(t12) + w2.
IntrinsicTorsion assemble_torsion(const TorsionSplit& split);

/// The 3-form t2 + x ^ Omega + t12 carried by a split.
KForm assembled_form(const TorsionSplit& split);

/// Psi_T(Gamma) = sum_i *((e_i -| T) ^ Gamma(e_i)) for a reference
/// T in Lambda^3_2. Lands in u(3); on Ker(Phi) it lands in su(3).
KForm psi(const KForm& t_ref, const IntrinsicTorsion& gamma);

/// Pi(Gamma) = -delta Omega, the codifferential surrogate (a vector).
KForm pi_codifferential(const IntrinsicTorsion& gamma);

/// Pi_1(Gamma) = d Omega, the differential surrogate (a 3-form, dim 6).
KForm pi1_differential(const IntrinsicTorsion& gamma);

/// The Nijenhuis tensor with components N1 = N(e1,e3), N2 = N(e1,e5),
/// N3 = N(e3,e5), re-housed in R^6 x m. For dim 4 only N1 is used.
IntrinsicTorsion nijenhuis_embed(const KForm& n1, const KForm& n2, const KForm& n3);
IntrinsicTorsion nijenhuis_embed4(const KForm& n1);

struct GHClass {
    int dim = 6;
    bool w1 = false, w2 = false, w3 = false, w4 = false;
    bool operator==(const GHClass&) const = default;
    std::string str() const; // "{}", "{W1}", "{W1,W3}", ...
};

/// Flags exactly the nonzero components of the intrinsic torsion and
/// cross-checks the differential characterizations of the classes on the
/// surrogates d Omega = Pi_1(Gamma), delta Omega = -Pi(Gamma).
GHClass gray_hervella_class(const IntrinsicTorsion& gamma);

/// Characteristic torsion Tc = -2 T2 - 2 (X ^ Omega) - 2 T12 of a torsion
/// with vanishing W2 part; throws std::domain_error otherwise.
KForm characteristic_torsion(const TorsionSplit& split);

enum class CharacterSpace { lambda3_2, lambda3_6, lambda3_12, r6_plus_r6, r6_plus_6r1 };

/// Trace of the action of an orthogonal matrix g on the given subspace of
/// Lambda^3(R^6) (checked to be preserved), or on the comparison spaces
/// R^6+R^6 and R^6+6R^1.
Rat character(const RatMatrix& g, CharacterSpace space);

enum class TraceSpace { r6, m6, u3 };

/// Trace of the J-action on R^6, m^6 or u(3).
int trace_j(TraceSpace space);

/// Matrix (over the torsion basis) of the symmetrization
/// Gamma -> Gamma-hat(X, Y) = (nabla_X Omega)(Y) + (nabla_Y Omega)(X),
/// whose kernel is exactly W1.
RatMatrix nk_symmetrization_matrix();

} // namespace ahm6
