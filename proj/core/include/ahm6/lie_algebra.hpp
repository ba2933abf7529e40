#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ahm6/rat_matrix.hpp"

namespace ahm6 {

/// Finite-dimensional algebra over Q given by structure constants
/// c^k_ij = coefficient of b_k in [b_i, b_j], with exact antisymmetry.
/// Whether Jacobi holds is decidable (jacobi_defect).
class LieAlgebraTable {
public:
    LieAlgebraTable() = default;
    LieAlgebraTable(int dim, std::vector<std::string> labels);

    /// Builds from a bracket callback on basis indices (0-based, i < j).
    static LieAlgebraTable from_brackets(int dim, std::vector<std::string> labels,
                                         const std::function<std::vector<Rat>(int, int)>& bracket);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    void set_bracket(int i, int j, const std::vector<Rat>& value);
    const std::vector<Rat>& bracket_basis(int i, int j) const { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    /// ad_i as a matrix: column j holds [b_i, b_j].
    RatMatrix ad(int i) const;
    RatMatrix ad_of(const std::vector<Rat>& x) const;

    /// Max-norm of the Jacobi cyclic sums over all basis triples, and
    /// whether it vanishes identically.
    std::pair<Rat, bool> jacobi_defect() const;

    bool is_abelian() const;
    std::vector<std::vector<Rat>> derived_basis() const;
    std::vector<std::vector<Rat>> center_basis() const;
    RatMatrix killing_form() const;

    /// Structure constants of the subalgebra spanned by the given vectors;
    /// throws if the span is not bracket-closed.
    LieAlgebraTable subalgebra(const std::vector<std::vector<Rat>>& basis,
                               std::vector<std::string> labels = {}) const;

    /// Quotient by a central subspace, in the given complement basis.
    LieAlgebraTable quotient(const std::vector<std::vector<Rat>>& center,
                             const std::vector<std::vector<Rat>>& complement,
                             std::vector<std::string> labels = {}) const;

private:
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rat>>> c_; // c_[i][j] = coords of [b_i, b_j]
};

enum class ThreeDimClass { so3, sl2R, heisenberg, abelian, other };

std::string three_dim_class_str(ThreeDimClass c);

/// Classification of a 3-dimensional algebra by derived-algebra dimension
/// and the exact signature of its Killing form.
ThreeDimClass classify_3d(const LieAlgebraTable& table);

} // namespace ahm6
