#include "dgfree/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "dgfree/errors.hpp"

namespace dgfree
{

SparseVector add_scaled(const SparseVector& a, const Scalar& c, const SparseVector& b)
{
    if (c.is_zero() || b.empty())
        return a;
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back({b[j].index, c * b[j].value});
            ++j;
        } else {
            Scalar s = a[i].value + c * b[j].value;
            if (!s.is_zero())
                out.push_back({a[i].index, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector scaled(const SparseVector& a, const Scalar& c)
{
    if (c.is_zero())
        return {};
    SparseVector out;
    out.reserve(a.size());
    for (const auto& e : a)
        out.push_back({e.index, e.value * c});
    return out;
}

SparseVector to_sparse(const DenseVector& v)
{
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.push_back({i, v[i]});
    return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t dim, Field field)
{
    DenseVector out(dim, field.zero());
    for (const auto& e : v) {
        if (e.index >= dim)
            throw InputError("sparse index out of range");
        out[e.index] = e.value;
    }
    return out;
}

// ---------------------------------------------------------------------------

SparseEchelon::SparseEchelon(Field field, std::size_t dim) : field_(field), dim_(dim), pivot_row_(dim, -1) {}

std::vector<std::size_t> SparseEchelon::pivots() const
{
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_)
        out.push_back(r.front().index);
    std::sort(out.begin(), out.end());
    return out;
}

SparseVector SparseEchelon::reduce_leading(SparseVector v) const
{
    while (!v.empty()) {
        const long r = pivot_row_[v.front().index];
        if (r < 0)
            break;
        v = add_scaled(v, -v.front().value, rows_[static_cast<std::size_t>(r)]);
    }
    return v;
}

SparseVector SparseEchelon::normal_form(SparseVector v) const
{
    std::size_t i = 0;
    while (i < v.size()) {
        const long r = pivot_row_[v[i].index];
        if (r < 0) {
            ++i;
            continue;
        }
        // Entries before position i are untouched: the row starts at v[i].index.
        v = add_scaled(v, -v[i].value, rows_[static_cast<std::size_t>(r)]);
    }
    return v;
}

bool SparseEchelon::insert(SparseVector v)
{
    for (const auto& e : v) {
        if (e.index >= dim_)
            throw InputError("vector index out of range in echelon insert");
        if (e.value.field() != field_)
            throw InputError("mixed fields in echelon insert");
    }
    v = reduce_leading(std::move(v));
    if (v.empty())
        return false;
    if (!v.front().value.is_one())
        v = scaled(v, v.front().value.inverse());
    pivot_row_[v.front().index] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

void SparseEchelon::make_reduced()
{
    std::vector<SparseVector> sorted = rows_;
    std::sort(sorted.begin(), sorted.end(),
              [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
    rows_ = std::move(sorted);
    for (std::size_t k = 0; k < rows_.size(); ++k)
        pivot_row_[rows_[k].front().index] = static_cast<long>(k);
    // Largest pivot first: the tail of each row only meets already reduced rows.
    for (std::size_t k = rows_.size(); k-- > 0;) {
        SparseEntry lead = rows_[k].front();
        SparseVector tail(rows_[k].begin() + 1, rows_[k].end());
        tail = normal_form(std::move(tail));
        tail.insert(tail.begin(), lead);
        rows_[k] = std::move(tail);
    }
}

std::vector<SparseVector> SparseEchelon::kernel() const
{
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().index > rows_[b].front().index; });

    SparseEchelon basis(field_, dim_);
    for (std::size_t f = 0; f < dim_; ++f) {
        if (is_pivot(f))
            continue;
        DenseVector x(dim_, field_.zero());
        x[f] = field_.one();
        for (std::size_t k : order) {
            const auto& row = rows_[k];
            const std::size_t p = row.front().index;
            if (p > f)
                continue;
            Scalar acc = field_.zero();
            for (std::size_t t = 1; t < row.size(); ++t)
                if (!x[row[t].index].is_zero())
                    acc += row[t].value * x[row[t].index];
            x[p] = -acc;
        }
        basis.insert(to_sparse(x));
    }
    basis.make_reduced();
    return basis.rows_;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.cols_[i].push_back({i, field.one()});
    return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows)
{
    std::vector<DenseVector> dense;
    dense.reserve(rows.size());
    for (const auto& r : rows) {
        DenseVector d;
        d.reserve(r.size());
        for (long long v : r)
            d.push_back(field.from_int(v));
        dense.push_back(std::move(d));
    }
    return from_rows(field, dense);
}

Matrix Matrix::from_rows(Field field, const std::vector<DenseVector>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (!rows[r][c].is_zero())
                m.set(r, c, rows[r][c]);
    }
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_.size())
        throw InputError("matrix index out of range");
    const auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    if (it != col.end() && it->index == r)
        return it->value;
    return field_.zero();
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value)
{
    if (r >= rows_ || c >= cols_.size())
        throw InputError("matrix index out of range");
    if (value.field() != field_)
        throw InputError("entry field " + value.field().name() + " does not match matrix field " + field_.name());
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    if (it != col.end() && it->index == r) {
        if (value.is_zero())
            col.erase(it);
        else
            it->value = value;
    } else if (!value.is_zero()) {
        col.insert(it, {r, value});
    }
}

void Matrix::set_column(std::size_t c, SparseVector column)
{
    if (c >= cols_.size())
        throw InputError("matrix column out of range");
    for (std::size_t k = 0; k < column.size(); ++k) {
        if (column[k].index >= rows_ || column[k].value.is_zero() || column[k].value.field() != field_ ||
            (k > 0 && column[k - 1].index >= column[k].index))
            throw InputError("malformed sparse column");
    }
    cols_[c] = std::move(column);
}

std::vector<SparseVector> Matrix::row_vectors() const
{
    std::vector<SparseVector> rows(rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (const auto& e : cols_[c])
            rows[e.index].push_back({c, e.value});
    return rows;
}

bool Matrix::is_zero() const
{
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::size_t Matrix::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& c : cols_)
        n += c.size();
    return n;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_.size(), rows_);
    t.cols_ = row_vectors();
    return t;
}

DenseVector Matrix::apply(const DenseVector& v) const
{
    if (v.size() != cols_.size())
        throw InputError("dimension mismatch in matrix-vector product");
    DenseVector out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (v[c].is_zero())
            continue;
        for (const auto& e : cols_[c])
            out[e.index] += e.value * v[c];
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.field_ != b.field_)
        throw InputError("mixed fields in matrix product");
    if (a.cols() != b.rows_)
        throw InputError("dimension mismatch in matrix product");
    Matrix out(a.field_, a.rows_, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        SparseVector acc;
        for (const auto& e : b.cols_[c])
            acc = add_scaled(acc, e.value, a.cols_[e.index]);
        out.cols_[c] = std::move(acc);
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols() != b.cols())
        throw InputError("shape or field mismatch in matrix sum");
    Matrix out(a.field_, a.rows_, a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        out.cols_[c] = add_scaled(a.cols_[c], a.field_.one(), b.cols_[c]);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols() != b.cols())
        throw InputError("shape or field mismatch in matrix difference");
    Matrix out(a.field_, a.rows_, a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        out.cols_[c] = add_scaled(a.cols_[c], -a.field_.one(), b.cols_[c]);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_.size(); ++c)
            os << (c ? ", " : "") << at(r, c);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

RankKernel rank_and_kernel(const Matrix& m)
{
    SparseEchelon ech(m.field(), m.cols());
    for (auto& row : m.row_vectors())
        ech.insert(std::move(row));
    RankKernel out;
    out.rank = ech.rank();
    for (const auto& v : ech.kernel())
        out.kernel_basis.push_back(to_dense(v, m.cols(), m.field()));
    return out;
}

std::size_t rank(const Matrix& m)
{
    // Eliminate along the shorter side.
    if (m.cols() <= m.rows()) {
        SparseEchelon ech(m.field(), m.rows());
        for (std::size_t c = 0; c < m.cols(); ++c)
            ech.insert(m.column(c));
        return ech.rank();
    }
    SparseEchelon ech(m.field(), m.cols());
    for (auto& row : m.row_vectors())
        ech.insert(std::move(row));
    return ech.rank();
}

std::optional<DenseVector> solve(const Matrix& m, const DenseVector& b)
{
    if (b.size() != m.rows())
        throw InputError("right-hand side length does not match matrix rows");
    for (const auto& s : b)
        if (s.field() != m.field())
            throw InputError("right-hand side field does not match matrix field");
    const std::size_t n = m.cols();
    SparseEchelon ech(m.field(), n + 1);
    auto rows = m.row_vectors();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!b[r].is_zero())
            rows[r].push_back({n, b[r]});
        ech.insert(std::move(rows[r]));
    }
    if (ech.is_pivot(n))
        return std::nullopt;
    std::vector<const SparseVector*> order;
    for (const auto& row : ech.rows())
        order.push_back(&row);
    std::sort(order.begin(), order.end(),
              [](const SparseVector* a, const SparseVector* b) { return a->front().index > b->front().index; });
    DenseVector x(n, m.field().zero());
    for (const SparseVector* row : order) {
        Scalar acc = m.field().zero();
        for (std::size_t t = 1; t < row->size(); ++t) {
            const auto& e = (*row)[t];
            if (e.index == n)
                acc += e.value;
            else
                acc -= e.value * x[e.index];
        }
        x[row->front().index] = acc;
    }
    return x;
}

} // namespace dgfree
