#pragma once

#include <optional>
#include <vector>

#include "ahm6/rational.hpp"

namespace ahm6 {

/// Dense matrix over Q. Rank, kernel and determinant go through
/// fraction-free (Bareiss) elimination on a denominator-cleared integer
/// copy, so there are no numerical rank decisions anywhere.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static RatMatrix identity(int n);
    static RatMatrix from_columns(const std::vector<std::vector<Rat>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    RatMatrix transposed() const;
    Rat trace() const;
    bool is_zero() const;

    int rank() const;
    Rat det() const;

    /// Basis of {x : Ax = 0}, kernel vectors scaled to primitive integer form.
    std::vector<std::vector<Rat>> kernel() const;

    /// One solution of Ax = b, if any.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    /// Solution set of Ax = b as (particular, kernel basis); nullopt if inconsistent.
    std::optional<std::pair<std::vector<Rat>, std::vector<std::vector<Rat>>>>
    solve_affine(const std::vector<Rat>& b) const;

    std::vector<Rat> apply(const std::vector<Rat>& x) const;

    /// Inertia (n_plus, n_minus, n_zero) of a symmetric matrix, by exact
    /// congruence diagonalization (Sylvester's law).
    std::tuple<int, int, int> signature() const;

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

/// Rank of the span of a family of coordinate vectors.
int span_rank(const std::vector<std::vector<Rat>>& vectors);

/// True if the two families span the same subspace.
bool same_span(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b);

/// Coordinates of v in the span of basis (nullopt if v is outside).
std::optional<std::vector<Rat>> coords_in_span(const std::vector<std::vector<Rat>>& basis,
                                               const std::vector<Rat>& v);

} // namespace ahm6
