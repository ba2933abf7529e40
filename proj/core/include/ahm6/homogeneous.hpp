#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ahm6/kform.hpp"
#include "ahm6/lie_algebra.hpp"
#include "ahm6/rat_matrix.hpp"
#include "ahm6/unitary.hpp"

namespace ahm6 {

/// Linear curvature map R : Lambda^2(R^6) -> span(generators), stored as a
/// 15 x g coefficient matrix over the lexicographic 2-blade basis.
struct CurvatureMap {
    std::vector<KForm> generators;
    RatMatrix coeff; // rows: 2-blades, cols: generators

    static CurvatureMap zero(std::vector<KForm> generators);

    /// R(e_i ^ e_j) in generator coordinates.
    std::vector<Rat> apply_coords(int i, int j) const;
    /// R(beta) as a 2-form.
    KForm apply(const KForm& beta) const;
    /// Per-generator coefficient 2-forms R^k = sum_{i<j} R^k_ij e_ij.
    std::vector<KForm> r_forms() const;

    bool operator==(const CurvatureMap& o) const;
};

/// g = R^6 with [X, Y] = -Tc(X, Y): the flat (trivial holonomy) case.
/// Jacobi holds exactly when the Clifford square of T is a scalar.
LieAlgebraTable flat_case_algebra(const KForm& torsion);

/// The transvection algebra g_T + R^6 with bracket
/// [A + X, B + Y] = ([A,B] - R(X,Y)) + (A.Y - B.X - T(X,Y)).
/// The 2-form-on-vector action A.Y is the grade-1 rho action.
LieAlgebraTable transvection_algebra(const std::vector<KForm>& gt_basis, const KForm& torsion,
                                     const CurvatureMap& curvature);

/// Solution set of "R is g_T-equivariant and the transvection algebra
/// satisfies Jacobi": affine in R.
struct InvariantCurvatureSolution {
    bool consistent = false;
    CurvatureMap particular;
    std::vector<CurvatureMap> null_basis;
};

InvariantCurvatureSolution solve_invariant_curvature(const std::vector<KForm>& gt_basis,
                                                     const KForm& torsion);

/// Holonomy algebra of a curvature map: bracket closure of its image
/// inside span(generators). Returns basis vectors in generator coordinates.
std::pair<int, std::vector<std::vector<Rat>>> holonomy_algebra(const CurvatureMap& curvature);

/// Left-invariant coframe with prescribed first structure equations.
struct CoframeAlgebra {
    int dim = 0;
    std::vector<KForm> d_coframe; // de_1, ..., de_n (2-forms)
};

/// Antiderivation extending the coframe differentials.
KForm coframe_d(const CoframeAlgebra& cf, const KForm& form);

/// The Maurer-Cartan coframe of a structure-constant table:
/// de^k = -sum_{i<j} c^k_ij e_i ^ e_j. d^2 = 0 iff Jacobi holds.
CoframeAlgebra coframe_of_table(const LieAlgebraTable& table);

/// sigma_T = (1/2) sum_i (e_i -| T) ^ (e_i -| T).
KForm sigma_4form(const KForm& torsion);

/// sum_{i,j} (e_i -| e_j -| T) ^ (e_i -| e_j -| S); vanishes for S = T.
KForm coupling_4form(const KForm& t, const KForm& s);

/// The three torsion-component identities forced by a parallel torsion
/// with nonzero vector part, evaluated over all basis pairs.
struct LinkReport {
    bool rel1 = false; // T12(X, JX, Y) = 0
    bool rel2 = false; // T12(X, Y, Z) = T12(X, JY, JZ) + 2 T2(X, Y, Z)
    bool rel3 = false; // T12(JX, Y, Z) = T12(JX, JY, JZ) - 2 T2(JX, Y, Z)
    bool all() const { return rel1 && rel2 && rel3; }
};

LinkReport link_relations_check(const KForm& t2, const KForm& t12, const KForm& x);

/// Algebraic identities of the U(2)-orbit torsion: the derivative formula
/// of the stabilizer-invariant 2-forms and the nearly Kaehler structure of
/// Omega-hat = -(e12 + e34) + e56. Throws if the form is not on the
/// U(2) orbit.
struct U2CaseReport {
    bool d_e56 = false;        // formula-d(e56) = *Tc
    bool d_e12_e34 = false;    // formula-d(e12 + e34) = -2 *Tc
    bool d_omega_hat = false;  // d(Omega-hat) = 3 *Tc
    bool nk_tau = false;       // tau_hat^2 (d Omega-hat) = -9 d Omega-hat
    bool all() const { return d_e56 && d_e12_e34 && d_omega_hat && nk_tau; }
};

U2CaseReport u2_case_identities(const KForm& torsion);

/// The naturally reductive family over the torsion e125 - e345 with
/// stabilizer span{e12, e34} and curvature
/// R = (r1 e1^e2 - e3^e4) x w1 + (-e1^e2 + r2 e3^e4) x w2.
struct W3FamilyParams {
    Rat r1, r2;
};

struct W3FamilyReport {
    W3FamilyParams params;
    LieAlgebraTable algebra; // 8-dimensional, basis w1, w2, e1..e6
    bool jacobi = false;
    int holonomy_dim = 0;
    bool center_matches = false;    // center = span{w1 - w2 + e5, e6}
    bool quotient_matches = false;  // the six reference bracket families
    ThreeDimClass p1_class = ThreeDimClass::other;
    ThreeDimClass p2_class = ThreeDimClass::other;
    bool p1_p2_commute = false;
};

W3FamilyReport w3_family(const W3FamilyParams& params);

/// The 9-dimensional transvection model with so(3) stabilizer: torsion
/// 2(e123 - e356) - (e246 + e136 - e145 + e235), curvature 4 pr_so(3).
struct Sl2cReport {
    KForm torsion;
    LieAlgebraTable algebra; // 9-dimensional
    bool curvature_unique = false;
    bool curvature_is_4pr = false;
    bool jacobi = false;
    bool clifford_scalar = false; // (Tc)^2 + 4 (w1^2 + w2^2 + w3^2) scalar
    Rat torsion_norm2;
    bool ric_is_minus4 = false; // Ric = -(1/3) |Tc|^2 Id = -4 Id
    bool killing_nondegenerate = false;
    int spinor_kernel = 0;
};

Sl2cReport sl2c_model_report();

/// so(3) in so(6) spanned by e12 - e56, e13+e24+e35+e46, e14-e23+e36-e45
/// (unnormalized; squared norms 2, 4, 4).
std::vector<KForm> so3_mu_basis();

/// The SO(3)-invariant torsion of the model.
KForm sl2c_torsion();

/// The complex Heisenberg group with its standard invariant coframe:
/// de5 = e13 - e24, de6 = e14 + e23.
struct HeisenbergReport {
    KForm d_omega;
    KForm torsion;     // Tc = *dOmega = J(dOmega)
    KForm d_torsion;   // -4 e1234
    KForm sigma;       // 2 e1234 - 2 (e12 + e34) ^ e56
    GHClass cls;
    bool delta_omega_zero = false;
    bool pure_w3 = false;
    bool parallel = false; // dTc = 2 sigma fails here
};

HeisenbergReport heisenberg_report();

CoframeAlgebra heisenberg_coframe();

} // namespace ahm6
