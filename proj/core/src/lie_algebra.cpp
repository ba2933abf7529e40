#include "ahm6/lie_algebra.hpp"

#include <stdexcept>

namespace ahm6 {

LieAlgebraTable::LieAlgebraTable(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
    if (labels_.empty())
        for (int i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i + 1));
    if (static_cast<int>(labels_.size()) != dim) throw std::invalid_argument("LieAlgebraTable: label count mismatch");
    c_.assign(static_cast<size_t>(dim),
              std::vector<std::vector<Rat>>(static_cast<size_t>(dim), std::vector<Rat>(static_cast<size_t>(dim), Rat(0))));
}

LieAlgebraTable LieAlgebraTable::from_brackets(int dim, std::vector<std::string> labels,
                                               const std::function<std::vector<Rat>(int, int)>& bracket) {
    LieAlgebraTable t(dim, std::move(labels));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) t.set_bracket(i, j, bracket(i, j));
    return t;
}

void LieAlgebraTable::set_bracket(int i, int j, const std::vector<Rat>& value) {
    if (static_cast<int>(value.size()) != dim_) throw std::invalid_argument("set_bracket: size mismatch");
    c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = value;
    std::vector<Rat> neg(value.size());
    for (size_t k = 0; k < value.size(); ++k) neg[k] = -value[k];
    c_[static_cast<size_t>(j)][static_cast<size_t>(i)] = neg;
}

std::vector<Rat> LieAlgebraTable::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> out(static_cast<size_t>(dim_), Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (rat_is_zero(y[static_cast<size_t>(j)])) continue;
            Rat f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            const auto& cij = c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int k = 0; k < dim_; ++k)
                if (!rat_is_zero(cij[static_cast<size_t>(k)])) out[static_cast<size_t>(k)] += f * cij[static_cast<size_t>(k)];
        }
    }
    return out;
}

RatMatrix LieAlgebraTable::ad(int i) const {
    RatMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) m.at(k, j) = c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
    return m;
}

RatMatrix LieAlgebraTable::ad_of(const std::vector<Rat>& x) const {
    RatMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
        m = m + ad(i) * x[static_cast<size_t>(i)];
    }
    return m;
}

std::pair<Rat, bool> LieAlgebraTable::jacobi_defect() const {
    Rat worst(0);
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                auto bij = bracket_basis(i, j);
                auto bjk = bracket_basis(j, k);
                auto bki = bracket_basis(k, i);
                std::vector<Rat> ei(static_cast<size_t>(dim_), Rat(0)), ej = ei, ek = ei;
                ei[static_cast<size_t>(i)] = 1; ej[static_cast<size_t>(j)] = 1; ek[static_cast<size_t>(k)] = 1;
                auto s1 = bracket(bij, ek);
                auto s2 = bracket(bjk, ei);
                auto s3 = bracket(bki, ej);
                for (int m = 0; m < dim_; ++m) {
                    Rat v = s1[static_cast<size_t>(m)] + s2[static_cast<size_t>(m)] + s3[static_cast<size_t>(m)];
                    Rat a = abs(v);
                    if (a > worst) worst = a;
                }
            }
    return {worst, rat_is_zero(worst)};
}

bool LieAlgebraTable::is_abelian() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (const auto& v : bracket_basis(i, j))
                if (!rat_is_zero(v)) return false;
    return true;
}

std::vector<std::vector<Rat>> LieAlgebraTable::derived_basis() const {
    std::vector<std::vector<Rat>> gens;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) gens.push_back(bracket_basis(i, j));
    // reduce to a basis
    std::vector<std::vector<Rat>> basis;
    for (const auto& g : gens) {
        std::vector<std::vector<Rat>> probe = basis;
        probe.push_back(g);
        if (span_rank(probe) > static_cast<int>(basis.size())) basis.push_back(g);
    }
    return basis;
}

std::vector<std::vector<Rat>> LieAlgebraTable::center_basis() const {
    // x central iff [x, b_j] = 0 for all j: [x, b_j]_k = sum_i x_i c^k_ij.
    RatMatrix sys(dim_ * dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
            for (int i = 0; i < dim_; ++i)
                sys.at(j * dim_ + k, i) = c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
    return sys.kernel();
}

RatMatrix LieAlgebraTable::killing_form() const {
    std::vector<RatMatrix> ads;
    for (int i = 0; i < dim_; ++i) ads.push_back(ad(i));
    RatMatrix k(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            Rat t = (ads[static_cast<size_t>(i)] * ads[static_cast<size_t>(j)]).trace();
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

LieAlgebraTable LieAlgebraTable::subalgebra(const std::vector<std::vector<Rat>>& basis,
                                            std::vector<std::string> labels) const {
    int m = static_cast<int>(basis.size());
    LieAlgebraTable t(m, std::move(labels));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto br = bracket(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
            auto coords = coords_in_span(basis, br);
            if (!coords) throw std::invalid_argument("subalgebra: span is not bracket-closed");
            t.set_bracket(i, j, *coords);
        }
    return t;
}

LieAlgebraTable LieAlgebraTable::quotient(const std::vector<std::vector<Rat>>& center,
                                          const std::vector<std::vector<Rat>>& complement,
                                          std::vector<std::string> labels) const {
    int m = static_cast<int>(complement.size());
    if (m + static_cast<int>(center.size()) != dim_)
        throw std::invalid_argument("quotient: complement size mismatch");
    std::vector<std::vector<Rat>> full = complement;
    full.insert(full.end(), center.begin(), center.end());
    if (span_rank(full) != dim_) throw std::invalid_argument("quotient: complement + center is not a basis");
    LieAlgebraTable t(m, std::move(labels));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto br = bracket(complement[static_cast<size_t>(i)], complement[static_cast<size_t>(j)]);
            auto coords = coords_in_span(full, br);
            if (!coords) throw std::logic_error("quotient: bracket outside the span");
            std::vector<Rat> reduced(coords->begin(), coords->begin() + m);
            t.set_bracket(i, j, reduced);
        }
    return t;
}

std::string three_dim_class_str(ThreeDimClass c) {
    switch (c) {
        case ThreeDimClass::so3: return "so3";
        case ThreeDimClass::sl2R: return "sl2R";
        case ThreeDimClass::heisenberg: return "heisenberg";
        case ThreeDimClass::abelian: return "abelian";
        default: return "other";
    }
}

ThreeDimClass classify_3d(const LieAlgebraTable& table) {
    if (table.dim() != 3) throw std::invalid_argument("classify_3d: dim 3 expected");
    if (table.is_abelian()) return ThreeDimClass::abelian;
    RatMatrix k = table.killing_form();
    auto [pos, neg, zero] = k.signature();
    if (zero == 0) {
        if (neg == 3) return ThreeDimClass::so3;
        if (pos == 2 && neg == 1) return ThreeDimClass::sl2R;
        return ThreeDimClass::other;
    }
    auto derived = table.derived_basis();
    if (derived.size() == 1) {
        auto center = table.center_basis();
        if (!center.empty() && same_span(derived, center)) return ThreeDimClass::heisenberg;
        // derived may sit inside a larger center
        std::vector<std::vector<Rat>> both = center;
        both.insert(both.end(), derived.begin(), derived.end());
        if (span_rank(both) == span_rank(center)) return ThreeDimClass::heisenberg;
    }
    return ThreeDimClass::other;
}

} // namespace ahm6
