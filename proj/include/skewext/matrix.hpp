#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewext/scalar.hpp"

namespace skewext {

using Vector = std::vector<Scalar>;

struct SparseEntry {
    std::size_t col;
    Scalar value;
};
/// Sorted by column, no stored zeros.
using SparseRow = std::vector<SparseEntry>;

Vector zero_vector(std::size_t n, Field f);
bool is_zero(const Vector& v);

/// Exact matrix stored as sparse rows. Differential matrices of resolutions
/// are overwhelmingly sparse, so every elimination routine works row-sparse.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f = {});

    static Matrix identity(std::size_t n, Field f = {});
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f = {});
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f = {});

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);

    const SparseRow& row(std::size_t i) const { return rows_[i]; }
    void set_row(std::size_t i, SparseRow r);
    Vector dense_row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);

    Vector apply(const Vector& x) const;
    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    std::string str() const;

private:
    std::vector<SparseRow> rows_;
    std::size_t cols_ = 0;
    Field field_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;  ///< strictly increasing
};

/// Reduced row-echelon form with leftmost-nonzero pivoting.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}, one vector per non-pivot column of rref(M).
std::vector<Vector> kernel_basis(const Matrix& m);

/// One particular solution of Mx = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Greedy completion: vectors of `ambient` (in input order) that extend the span
/// of `inside` to span(inside + ambient). Dependent vectors of `inside` are dropped.
std::vector<Vector> extend_to_basis(const std::vector<Vector>& inside,
                                    const std::vector<Vector>& ambient);

/// Echelon basis of a growing subspace of k^n.
class IncrementalBasis {
public:
    IncrementalBasis() = default;
    explicit IncrementalBasis(std::size_t dim, Field f = {});

    /// Adds v if independent of the current span; returns whether it was added.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    SparseRow reduce(SparseRow r) const;

    std::size_t dim_ = 0;
    Field field_;
    std::vector<SparseRow> pivot_rows_;
    std::vector<long> row_of_pivot_;
};

/// Precomputed elimination E*[M] = R for repeated right-hand sides.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const Matrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<Vector>& kernel() const { return kernel_; }

    std::optional<Vector> solve(const Vector& b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<std::size_t> pivots_;
    std::vector<SparseRow> transform_;     // one per pivot row
    std::vector<SparseRow> consistency_;   // rows of E annihilating im(M)
    std::vector<Vector> kernel_;
};

}  // namespace skewext
