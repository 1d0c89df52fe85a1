#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgfree/scalar.hpp"

namespace dgfree
{

struct SparseEntry
{
    std::size_t index;
    Scalar value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Strictly increasing indices, no stored zeros.
using SparseVector = std::vector<SparseEntry>;
using DenseVector = std::vector<Scalar>;

/// a + c*b.
SparseVector add_scaled(const SparseVector& a, const Scalar& c, const SparseVector& b);
SparseVector scaled(const SparseVector& a, const Scalar& c);
SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t dim, Field field);

/// Incremental row-echelon basis of a subspace of field^dim.
///
/// Every stored row has leading coefficient 1 at its pivot, the first nonzero index.
/// Pivots are chosen in index order, so the result is deterministic for a given
/// insertion sequence.
class SparseEchelon
{
public:
    SparseEchelon(Field field, std::size_t dim);

    [[nodiscard]] Field field() const noexcept { return field_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    [[nodiscard]] bool is_pivot(std::size_t index) const { return pivot_row_[index] >= 0; }
    [[nodiscard]] const std::vector<SparseVector>& rows() const noexcept { return rows_; }
    /// Pivot indices in increasing order.
    [[nodiscard]] std::vector<std::size_t> pivots() const;

    /// Adds v to the span. Returns true iff the rank went up.
    bool insert(SparseVector v);

    /// Reduces v until its leading index is not a pivot (zero if v lies in the span).
    [[nodiscard]] SparseVector reduce_leading(SparseVector v) const;

    /// Unique representative of v modulo the span: zero at every pivot index.
    [[nodiscard]] SparseVector normal_form(SparseVector v) const;

    /// Rewrites the rows into reduced row-echelon form, sorted by pivot.
    void make_reduced();

    /// Treating the rows as equations, the solution space in reduced echelon
    /// form (leading-first, pivot entries 1), sorted by leading index.
    [[nodiscard]] std::vector<SparseVector> kernel() const;

private:
    Field field_;
    std::size_t dim_;
    std::vector<long> pivot_row_;
    std::vector<SparseVector> rows_;
};

/// Sparse matrix over a single field, stored by columns. Absent entries are zero.
class Matrix
{
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    /// Rows of integers; convenient for tests and presets.
    static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
    static Matrix from_rows(Field field, const std::vector<DenseVector>& rows);

    [[nodiscard]] Field field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_.size(); }

    [[nodiscard]] Scalar at(std::size_t r, std::size_t c) const;
    /// Throws InputError if value belongs to a different field or indices are out of range.
    void set(std::size_t r, std::size_t c, const Scalar& value);
    /// Replaces a whole column; entries must be sorted, nonzero, in range and of this field.
    void set_column(std::size_t c, SparseVector column);
    [[nodiscard]] const SparseVector& column(std::size_t c) const { return cols_.at(c); }
    [[nodiscard]] std::vector<SparseVector> row_vectors() const;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t nonzero_count() const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] DenseVector apply(const DenseVector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    [[nodiscard]] std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::vector<SparseVector> cols_;
};

struct RankKernel
{
    std::size_t rank = 0;
    /// Reduced echelon basis of the null space (leading-first, pivot entries 1).
    std::vector<DenseVector> kernel_basis;
};

RankKernel rank_and_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some v with m*v = b (free variables set to zero), or nullopt if b is not in the column space.
std::optional<DenseVector> solve(const Matrix& m, const DenseVector& b);

} // namespace dgfree
