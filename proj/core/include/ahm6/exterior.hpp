#pragma once

#include <functional>

#include "ahm6/kform.hpp"
#include "ahm6/rat_matrix.hpp"

namespace ahm6 {

/// Exact matrix of a linear map between form spaces, over the
/// lexicographically ordered blade bases.
struct LinearOperator {
    int dim = 0;
    int grade_in = 0;
    int grade_out = 0;
    RatMatrix matrix;
};

/// Coordinates of a form over enumerate_blades(form.dim(), grade).
std::vector<Rat> form_coords(const KForm& form, int grade);

KForm coords_form(int dim, int grade, const std::vector<Rat>& coords);

/// Materializes a linear form-to-form function: column j is the image of
/// the j-th lexicographic blade.
LinearOperator matrix_of(const std::function<KForm(const KForm&)>& f,
                         int dim, int grade_in, int grade_out);

} // namespace ahm6
