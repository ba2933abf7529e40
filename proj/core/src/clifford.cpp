#include "ahm6/clifford.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include "ahm6/isotropy.hpp"

namespace ahm6 {

CliffordElement CliffordElement::scalar(int dim, const Rat& c) {
    CliffordElement x(dim);
    x.add_term(0, c);
    return x;
}

CliffordElement CliffordElement::basis(int dim, Blade b, const Rat& c) {
    CliffordElement x(dim);
    x.add_term(b, c);
    return x;
}

void CliffordElement::add_term(Blade b, const Rat& c) {
    if (rat_is_zero(c)) return;
    if (b >> dim_) throw std::invalid_argument("CliffordElement: blade index exceeds dimension");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, c);
    } else {
        it->second += c;
        if (rat_is_zero(it->second)) terms_.erase(it);
    }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("CliffordElement: dimension mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}
CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("CliffordElement: dimension mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}
CliffordElement& CliffordElement::operator*=(const Rat& s) {
    if (rat_is_zero(s)) terms_.clear();
    else
        for (auto& [b, c] : terms_) c *= s;
    return *this;
}

std::string CliffordElement::str() const {
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
        if (b == 0) out += rat_str(a);
        else {
            if (a != 1) out += rat_str(a) + "*";
            out += blade_str(b);
        }
    }
    return out;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("clifford_mul: dimension mismatch");
    CliffordElement out(a.dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            int s = clifford_sign(ba, bb);
            out.add_term(ba ^ bb, rat_signed(s, ca * cb));
        }
    return out;
}

CliffordElement embed_form(const KForm& form) {
    CliffordElement out(form.dim());
    for (const auto& [b, c] : form.terms()) out.add_term(b, c);
    return out;
}

CliffordElement embed_3form(const KForm& form) {
    if (!form.is_zero() && form.grade() != 3) throw std::invalid_argument("embed_3form: 3-form expected");
    return embed_form(form);
}

std::optional<Rat> is_scalar(const CliffordElement& x) {
    for (const auto& [b, c] : x.terms())
        if (b != 0) return std::nullopt;
    return x.coeff(0);
}

namespace {

using Mat8 = std::array<std::array<int, 8>, 8>;

Mat8 mat_identity() {
    Mat8 m{};
    for (int i = 0; i < 8; ++i) m[i][i] = 1;
    return m;
}

Mat8 mat_mul(const Mat8& a, const Mat8& b) {
    Mat8 out{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 8; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

} // namespace

GammaRep GammaRep::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("gamma fixture: cannot open '" + path + "'");
    std::vector<int> values;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int v;
        while (ls >> v) values.push_back(v);
    }
    if (values.size() != 7 * 64)
        throw std::runtime_error("gamma fixture: expected 448 integers, got " + std::to_string(values.size()));

    GammaRep rep;
    size_t k = 0;
    for (int g = 0; g < 7; ++g)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                int v = values[k++];
                if (v < -1 || v > 1) throw std::runtime_error("gamma fixture: entries must be in {-1,0,1}");
                rep.gammas_[g][i][j] = v;
            }

    // defining relations: gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            Mat8 s = mat_mul(rep.gammas_[i], rep.gammas_[j]);
            Mat8 t = mat_mul(rep.gammas_[j], rep.gammas_[i]);
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c) {
                    int want = (i == j && r == c) ? -2 : 0;
                    if (s[r][c] + t[r][c] != want)
                        throw std::runtime_error("gamma fixture: anticommutation relations fail");
                }
        }

    rep.blade_mats_.resize(128);
    rep.blade_mats_[0] = mat_identity();
    for (Blade b = 1; b < 128; ++b) {
        int low = std::countr_zero(b);
        if (b == (Blade{1} << low)) rep.blade_mats_[b] = rep.gammas_[low];
        else rep.blade_mats_[b] = mat_mul(rep.gammas_[low], rep.blade_mats_[b & (b - 1)]);
    }
    return rep;
}

std::string gamma_fixture_path() {
    if (const char* env = std::getenv("AHM6_GAMMA_FIXTURE")) return env;
#ifdef AHM6_GAMMA_FIXTURE_DEFAULT
    return AHM6_GAMMA_FIXTURE_DEFAULT;
#else
    return "gamma7.txt";
#endif
}

const GammaRep& default_gamma_rep() {
    static std::mutex mu;
    static std::unique_ptr<GammaRep> rep;
    std::lock_guard<std::mutex> lock(mu);
    if (!rep) rep = std::make_unique<GammaRep>(GammaRep::load(gamma_fixture_path()));
    return *rep;
}

RatMatrix gamma_rep_of(const CliffordElement& x, const GammaRep& rep) {
    RatMatrix out(8, 8);
    for (const auto& [b, c] : x.terms()) {
        const auto& m = rep.blade_matrix(b);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (m[i][j]) out.at(i, j) += c * m[i][j];
    }
    return out;
}

std::set<Rat> lambda12_square_diagnostics(const std::array<Rat, 12>& a, const GammaRep& rep) {
    KForm t = Lambda12Params{a}.to_form();
    CliffordElement c = embed_3form(t);
    RatMatrix m = gamma_rep_of(clifford_mul(c, c), rep);
    std::set<Rat> out;
    for (int i = 0; i < 8; ++i) out.insert(m.at(i, i));
    return out;
}

std::optional<Rat> jacobi_scalar_check(const KForm& torsion,
                                       const std::vector<KForm>& generators,
                                       const std::vector<KForm>& r_forms) {
    if (generators.size() != r_forms.size())
        throw std::invalid_argument("jacobi_scalar_check: generator/coefficient count mismatch");
    CliffordElement t = embed_3form(torsion);
    CliffordElement total = clifford_mul(t, t);
    for (size_t k = 0; k < generators.size(); ++k)
        total += clifford_mul(embed_form(r_forms[k]), embed_form(generators[k]));
    return is_scalar(total);
}

bool scalar_completion_exists(const KForm& torsion, const KForm& generator, const GammaRep& rep) {
    // Unknowns: the 15 coefficients R_ij and the scalar value c. Equations:
    // gamma(T^2) + sum R_ij gamma(e_i e_j g) = c Id, entrywise over Q.
    CliffordElement t = embed_3form(torsion);
    RatMatrix t2 = gamma_rep_of(clifford_mul(t, t), rep);
    auto blades2 = enumerate_blades(torsion.dim(), 2);
    int nr = static_cast<int>(blades2.size());
    RatMatrix sys(64, nr + 1);
    std::vector<Rat> rhs(64, Rat(0));
    CliffordElement g = embed_form(generator);
    for (int k = 0; k < nr; ++k) {
        RatMatrix mk = gamma_rep_of(clifford_mul(CliffordElement::basis(torsion.dim(), blades2[k]), g), rep);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) sys.at(i * 8 + j, k) = mk.at(i, j);
    }
    for (int i = 0; i < 8; ++i) {
        sys.at(i * 8 + i, nr) = -1;
        for (int j = 0; j < 8; ++j) rhs[i * 8 + j] = -t2.at(i, j);
    }
    return sys.solve(rhs).has_value();
}

int spinor_kernel_dim(const KForm& torsion, const GammaRep& rep) {
    if (torsion.dim() != 6) throw std::invalid_argument("spinor_kernel_dim: dim 6 expected");
    return 8 - gamma_rep_of(embed_3form(torsion), rep).rank();
}

} // namespace ahm6
