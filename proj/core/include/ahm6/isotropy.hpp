#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ahm6/kform.hpp"
#include "ahm6/lie_algebra.hpp"
#include "ahm6/rat_matrix.hpp"

namespace ahm6 {

/// Coefficients A1..A12 of a 3-form in the 12-parameter basis of
/// Lambda^3_12:
///   A1 (e123-e356)  A2 (e124-e456)  A3 (e125-e345)   A4 (e126-e346)
///   A5 (e134-e156)  A6 (e234-e256)  A7 (e135+e245)   A8 (e246+e136)
///   A9 (e145-e235)  A10(e236-e146)  A11(e135-e245+e236+e146)
///   A12(e246-e136+e145+e235)
struct Lambda12Params {
    std::array<Rat, 12> a{};

    KForm to_form() const;
    static std::optional<Lambda12Params> from_form(const KForm& form);
    static const std::vector<KForm>& basis();

    bool is_zero() const;
};

/// Coefficients of a 2-form in u(3) over the 9-parameter basis
/// w12 e12 + w13 (e13+e24) + w14 (e14-e23) + w15 (e15+e26) + w16 (e16-e25)
/// + w34 e34 + w35 (e35+e46) + w36 (e36-e45) + w56 e56.
struct U3TwoFormParams {
    std::array<Rat, 9> w{};

    KForm to_form() const;
    static std::optional<U3TwoFormParams> from_form(const KForm& form);
};

/// The 12x9 matrix of the linear system rho(w) T = 0 over the bases above,
/// with A = A7+A10, B = A7-A10, C = A8+A9, D = A8-A9. Its kernel is the
/// isotropy algebra of the Lambda^3_12 form inside u(3).
RatMatrix isotropy_matrix(const Lambda12Params& p);

enum class Ambient { u3, so6 };

enum class OrbitTag { u2, so3, two_dim, one_dim, zero_dim, full, other };

std::string orbit_tag_str(OrbitTag tag);

/// Stabilizer subalgebra of a 3-form: generators, dimension and orbit tag.
struct IsotropyResult {
    std::vector<KForm> generators;
    int dim = 0;
    OrbitTag tag = OrbitTag::other;
};

/// Exact kernel of w -> rho(w) T over the ambient algebra, by
/// fraction-free elimination.
IsotropyResult isotropy_algebra(const KForm& form, Ambient ambient);

/// Orbit-type tag of a Lambda^3_12 form under U(3): u2 / so3 for the two
/// non-abelian stabilizers, else the dimension tags. Throws if the form is
/// not in Lambda^3_12.
OrbitTag orbit_tag(const KForm& form);

/// Whether the circle generated by k1 e12 + k2 e34 + k3 e56 stabilizes a
/// nonzero form in Lambda^3_12, together with the kernel dimension there.
std::pair<bool, int> circle_preserves(int k1, int k2, int k3);

/// The case analysis of the one-parameter stabilizer lemma. Detects the
/// case pattern of (k1,k2,k3) up to permutation, reports the exact
/// solution space of rho(w) T = 0 on Lambda^3_12 and the isotropy
/// dimension of a generic solution; for the two constrained cases lists
/// the relations the Clifford scalar condition forces.
struct LemmaCaseReport {
    std::string case_tag;             // "1.1", "1.2", "1.3", "1.4", "2"
    int solution_dim = 0;
    std::vector<int> param_indices;   // 1-based A-indices spanning the solution space
    int generic_isotropy_dim = 0;
    std::vector<std::string> constraints;
};

LemmaCaseReport lemma_algebra_case_report(int k1, int k2, int k3);

/// Structure constants of a stabilizer (brackets of the generator 2-forms
/// under the commutator rho(a)(b), expressed in the generator span).
LieAlgebraTable stabilizer_table(const std::vector<KForm>& generators);

} // namespace ahm6
