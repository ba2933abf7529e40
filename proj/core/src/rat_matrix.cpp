#include "ahm6/rat_matrix.hpp"

#include <stdexcept>
#include <tuple>

namespace ahm6 {

namespace {

struct IntEchelon {
    std::vector<std::vector<Int>> m;
    std::vector<int> pivot_rows;  // row of k-th pivot
    std::vector<int> pivot_cols;  // column of k-th pivot
    int sign = 1;                 // row-swap parity
};

// Fraction-free (Bareiss) forward elimination. Entries stay integral and
// division by the previous pivot is exact at every step.
IntEchelon bareiss(std::vector<std::vector<Int>> m) {
    IntEchelon e;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) { std::swap(m[p], m[row]); e.sign = -e.sign; }
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        e.pivot_rows.push_back(row);
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

// Clears denominators row by row; the row multipliers do not change the
// kernel or the rank and are tracked for determinants.
std::pair<std::vector<std::vector<Int>>, Rat> to_integer_rows(const RatMatrix& a) {
    std::vector<std::vector<Int>> m(a.rows(), std::vector<Int>(a.cols()));
    Rat scale(1); // product of row multipliers
    for (int i = 0; i < a.rows(); ++i) {
        Int lcm = 1;
        for (int j = 0; j < a.cols(); ++j) {
            Int den = a.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < a.cols(); ++j) {
            Rat v = a.at(i, j) * Rat(lcm);
            m[i][j] = v.get_num();
        }
        scale *= Rat(lcm);
    }
    return {std::move(m), scale};
}

std::vector<Rat> primitive(std::vector<Rat> v) {
    Int lcm = 1;
    for (const auto& x : v) {
        Int den = x.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Int gcd = 0;
    for (auto& x : v) {
        x *= Rat(lcm);
        Int num = x.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd == 0) return v;
    int lead = 1;
    for (const auto& x : v)
        if (sgn(x) != 0) { lead = sgn(x); break; }
    for (auto& x : v) x /= Rat(lead > 0 ? gcd : -gcd);
    return v;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref_inplace(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (!rat_is_zero(m[i][col])) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        Rat inv = m[row][col];
        for (int j = col; j < cols; ++j) m[row][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || rat_is_zero(m[i][col])) continue;
            Rat f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rat>>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c ? static_cast<int>(cols[0].size()) : 0;
    RatMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r)
            throw std::invalid_argument("from_columns: ragged columns");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (rat_is_zero(a)) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rat t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!rat_is_zero(v)) return false;
    return true;
}

int RatMatrix::rank() const {
    auto [m, scale] = to_integer_rows(*this);
    (void)scale;
    return static_cast<int>(bareiss(std::move(m)).pivot_cols.size());
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    if (rows_ == 0) return Rat(1);
    auto [m, scale] = to_integer_rows(*this);
    auto e = bareiss(std::move(m));
    if (static_cast<int>(e.pivot_cols.size()) < rows_) return Rat(0);
    // Bareiss leaves det(M_int) as the last pivot entry.
    Rat d(e.m[rows_ - 1][e.pivot_cols[rows_ - 1]]);
    d *= Rat(e.sign);
    return d / scale;
}

std::vector<std::vector<Rat>> RatMatrix::kernel() const {
    auto [mi, scale] = to_integer_rows(*this);
    (void)scale;
    auto e = bareiss(std::move(mi));
    int np = static_cast<int>(e.pivot_cols.size());
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols_, Rat(0));
        x[f] = 1;
        for (int k = np - 1; k >= 0; --k) {
            int r = e.pivot_rows[k], c = e.pivot_cols[k];
            Rat s(0);
            for (int j = c + 1; j < cols_; ++j)
                if (e.m[r][j] != 0 && !rat_is_zero(x[j])) s += Rat(e.m[r][j]) * x[j];
            x[c] = -s / Rat(e.m[r][c]);
        }
        basis.push_back(primitive(std::move(x)));
    }
    return basis;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!rat_is_zero(at(i, j))) out[i] += at(i, j) * x[j];
    return out;
}

std::optional<std::pair<std::vector<Rat>, std::vector<std::vector<Rat>>>>
RatMatrix::solve_affine(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    std::vector<std::vector<Rat>> aug(rows_, std::vector<Rat>(cols_ + 1));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug[i][j] = at(i, j);
        aug[i][cols_] = b[i];
    }
    auto pivots = rref_inplace(aug);
    for (int c : pivots)
        if (c == cols_) return std::nullopt; // pivot in augmented column
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Rat> part(cols_, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) part[pivots[k]] = aug[k][cols_];

    std::vector<std::vector<Rat>> null_basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols_, Rat(0));
        x[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -aug[k][f];
        null_basis.push_back(std::move(x));
    }
    return std::make_pair(std::move(part), std::move(null_basis));
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
    auto sol = solve_affine(b);
    if (!sol) return std::nullopt;
    return sol->first;
}

std::tuple<int, int, int> RatMatrix::signature() const {
    if (rows_ != cols_) throw std::invalid_argument("signature of non-square matrix");
    int n = rows_;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = at(i, j);

    auto add_row_col = [&](int dst, int src) {
        for (int j = 0; j < n; ++j) m[dst][j] += m[src][j];
        for (int i = 0; i < n; ++i) m[i][dst] += m[i][src];
    };
    auto swap_row_col = [&](int a, int b) {
        std::swap(m[a], m[b]);
        for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
    };

    int pos = 0, neg = 0, zero = 0;
    for (int k = 0; k < n; ++k) {
        if (rat_is_zero(m[k][k])) {
            int l = -1;
            for (int i = k + 1; i < n; ++i)
                if (!rat_is_zero(m[i][i])) { l = i; break; }
            if (l >= 0) {
                swap_row_col(k, l);
            } else {
                for (int i = k + 1; i < n; ++i)
                    if (!rat_is_zero(m[k][i])) { l = i; break; }
                if (l < 0) { ++zero; continue; }
                add_row_col(k, l); // makes m[k][k] = 2 m[k][l] != 0
            }
        }
        Rat piv = m[k][k];
        (sgn(piv) > 0 ? pos : neg)++;
        for (int i = k + 1; i < n; ++i) {
            if (rat_is_zero(m[i][k])) continue;
            Rat f = m[i][k] / piv;
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
            for (int j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
        }
    }
    return {pos, neg, zero};
}

int span_rank(const std::vector<std::vector<Rat>>& vectors) {
    if (vectors.empty()) return 0;
    RatMatrix m(static_cast<int>(vectors.size()), static_cast<int>(vectors[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = vectors[i][j];
    return m.rank();
}

bool same_span(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
    int ra = span_rank(a), rb = span_rank(b);
    if (ra != rb) return false;
    std::vector<std::vector<Rat>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(both) == ra;
}

std::optional<std::vector<Rat>> coords_in_span(const std::vector<std::vector<Rat>>& basis,
                                               const std::vector<Rat>& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!rat_is_zero(x)) return std::nullopt;
        return std::vector<Rat>{};
    }
    RatMatrix m = RatMatrix::from_columns(basis);
    return m.solve(v);
}

} // namespace ahm6
