#include "ahm6/exterior.hpp"

namespace ahm6 {

std::vector<Rat> form_coords(const KForm& form, int grade) {
    auto blades = enumerate_blades(form.dim(), grade);
    std::vector<Rat> out(blades.size(), Rat(0));
    for (size_t i = 0; i < blades.size(); ++i) out[i] = form.coeff(blades[i]);
    return out;
}

KForm coords_form(int dim, int grade, const std::vector<Rat>& coords) {
    auto blades = enumerate_blades(dim, grade);
    if (coords.size() != blades.size()) throw std::invalid_argument("coords_form: size mismatch");
    KForm f(dim, grade);
    for (size_t i = 0; i < blades.size(); ++i) f.add_term(blades[i], coords[i]);
    return f;
}

LinearOperator matrix_of(const std::function<KForm(const KForm&)>& f,
                         int dim, int grade_in, int grade_out) {
    auto in_blades = enumerate_blades(dim, grade_in);
    auto out_blades = enumerate_blades(dim, grade_out);
    LinearOperator op{dim, grade_in, grade_out,
                      RatMatrix(static_cast<int>(out_blades.size()), static_cast<int>(in_blades.size()))};
    for (size_t j = 0; j < in_blades.size(); ++j) {
        KForm image = f(KForm::basis(dim, in_blades[j]));
        if (!image.is_zero() && image.grade() != grade_out)
            throw std::invalid_argument("matrix_of: image grade mismatch");
        for (const auto& [b, c] : image.terms())
            op.matrix.at(blade_position(dim, b), static_cast<int>(j)) = c;
    }
    return op;
}

} // namespace ahm6
