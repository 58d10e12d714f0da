#include "skewext/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewext {

namespace {

// r - c * p, both sorted
SparseRow subtract_multiple(const SparseRow& r, const Scalar& c, const SparseRow& p)
{
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].col < p[j].col)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].col < r[i].col) {
            out.push_back({p[j].col, -(c * p[j].value)});
            ++j;
        } else {
            Scalar v = r[i].value - c * p[j].value;
            if (!v.is_zero())
                out.push_back({r[i].col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

void scale(SparseRow& r, const Scalar& c)
{
    for (auto& e : r)
        e.value *= c;
}

// Eliminates every entry of r (from index `start`) whose column carries a pivot.
void reduce_against(SparseRow& r, std::size_t start, const std::vector<SparseRow>& pivot_rows,
                    const std::vector<long>& row_of_col)
{
    std::size_t i = start;
    while (i < r.size()) {
        long pr = row_of_col[r[i].col];
        if (pr < 0) {
            ++i;
            continue;
        }
        Scalar c = r[i].value;
        r = subtract_multiple(r, c, pivot_rows[static_cast<std::size_t>(pr)]);
    }
}

SparseRow to_sparse(const Vector& v)
{
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            r.push_back({i, v[i]});
    return r;
}

Field field_of(const std::vector<Vector>& vs)
{
    for (const auto& v : vs)
        for (const auto& s : v)
            if (s.characteristic() != 0)
                return s.field();
    return Field{};
}

struct Echelon {
    std::vector<SparseRow> rows;      // reduced, leading coefficient 1
    std::vector<std::size_t> pivots;  // parallel to rows, increasing
};

Echelon reduced_echelon(const std::vector<SparseRow>& input, std::size_t cols)
{
    std::vector<SparseRow> prows;
    std::vector<long> row_of_col(cols, -1);
    for (SparseRow r : input) {
        reduce_against(r, 0, prows, row_of_col);
        if (r.empty())
            continue;
        scale(r, r.front().value.inverse());
        row_of_col[r.front().col] = static_cast<long>(prows.size());
        prows.push_back(std::move(r));
    }
    std::vector<std::size_t> order(prows.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return prows[a].front().col > prows[b].front().col; });
    // back substitution from the rightmost pivot
    for (std::size_t idx : order)
        reduce_against(prows[idx], 1, prows, row_of_col);

    Echelon e;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        e.pivots.push_back(prows[*it].front().col);
        e.rows.push_back(std::move(prows[*it]));
    }
    return e;
}

Scalar dot(const SparseRow& r, const Vector& b, std::size_t offset)
{
    Scalar s = Scalar::zero(b.empty() ? Field{} : b.front().field());
    for (const auto& e : r)
        s += e.value * b[e.col - offset];
    return s;
}

}  // namespace

Vector zero_vector(std::size_t n, Field f)
{
    return Vector(n, Scalar::zero(f));
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f) : rows_(rows), cols_(cols), field_(f) {}

Matrix Matrix::identity(std::size_t n, Field f)
{
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f)
{
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        m.rows_[i] = to_sparse(rows[i]);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f)
{
    Matrix m(rows, cols.size(), f);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("Matrix::from_columns: ragged columns");
        for (std::size_t i = 0; i < rows; ++i)
            if (!cols[j][i].is_zero())
                m.rows_[i].push_back({j, cols[j][i]});
    }
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const
{
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j)
        return it->value;
    return Scalar::zero(field_);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v)
{
    if (j >= cols_)
        throw std::out_of_range("Matrix::set column");
    auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
        if (v.is_zero())
            r.erase(it);
        else
            it->value = v;
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v)
{
    if (!v.is_zero())
        set(i, j, at(i, j) + v);
}

void Matrix::set_row(std::size_t i, SparseRow r)
{
    rows_.at(i) = std::move(r);
}

Vector Matrix::dense_row(std::size_t i) const
{
    Vector v = zero_vector(cols_, field_);
    for (const auto& e : rows_.at(i))
        v[e.col] = e.value;
    return v;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v = zero_vector(rows(), field_);
    for (std::size_t i = 0; i < rows(); ++i)
        v[i] = at(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v)
{
    for (std::size_t i = 0; i < rows(); ++i)
        set(i, j, v.at(i));
}

Vector Matrix::apply(const Vector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vector y = zero_vector(rows(), field_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& e : rows_[i])
            y[i] += e.value * x[e.col];
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows())
        throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix out(rows(), o.cols(), field_);
    for (std::size_t i = 0; i < rows(); ++i) {
        Vector acc = zero_vector(o.cols(), field_);
        for (const auto& e : rows_[i])
            for (const auto& f : o.rows_[e.col])
                acc[f.col] += e.value * f.value;
        out.rows_[i] = to_sparse(acc);
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows(), field_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& e : rows_[i])
            t.rows_[e.col].push_back({i, e.value});
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.empty(); });
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto& x = a.rows_[i];
        const auto& y = b.rows_[i];
        if (x.size() != y.size())
            return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].col != y[k].col || !(x[k].value == y[k].value))
                return false;
    }
    return true;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

RrefResult rref(const Matrix& m)
{
    std::vector<SparseRow> in;
    in.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        in.push_back(m.row(i));
    Echelon e = reduced_echelon(in, m.cols());
    RrefResult res{Matrix(m.rows(), m.cols(), m.field()), e.pivots};
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        res.reduced.set_row(i, std::move(e.rows[i]));
    return res;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(m.cols(), m.field());
        v[f] = Scalar::one(m.field());
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            v[r.pivots[k]] = -r.reduced.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    return LinearSolver(m).solve(b);
}

std::vector<Vector> extend_to_basis(const std::vector<Vector>& inside, const std::vector<Vector>& ambient)
{
    std::size_t n = 0;
    if (!inside.empty())
        n = inside.front().size();
    else if (!ambient.empty())
        n = ambient.front().size();
    Field f = field_of(ambient);
    if (f.is_rational())
        f = field_of(inside);
    IncrementalBasis span(n, f);
    for (const auto& v : inside)
        span.insert(v);
    std::vector<Vector> out;
    for (const auto& v : ambient)
        if (span.insert(v))
            out.push_back(v);
    return out;
}

IncrementalBasis::IncrementalBasis(std::size_t dim, Field f) : dim_(dim), field_(f), row_of_pivot_(dim, -1) {}

SparseRow IncrementalBasis::reduce(SparseRow r) const
{
    reduce_against(r, 0, pivot_rows_, row_of_pivot_);
    return r;
}

bool IncrementalBasis::insert(const Vector& v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("IncrementalBasis: dimension mismatch");
    SparseRow r = reduce(to_sparse(v));
    if (r.empty())
        return false;
    scale(r, r.front().value.inverse());
    row_of_pivot_[r.front().col] = static_cast<long>(pivot_rows_.size());
    pivot_rows_.push_back(std::move(r));
    return true;
}

bool IncrementalBasis::contains(const Vector& v) const
{
    return reduce(to_sparse(v)).empty();
}

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()), field_(m.field())
{
    std::vector<SparseRow> aug;
    aug.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseRow r = m.row(i);
        r.push_back({cols_ + i, Scalar::one(field_)});
        aug.push_back(std::move(r));
    }
    Echelon e = reduced_echelon(aug, cols_ + rows_);
    std::vector<bool> is_pivot(cols_, false);
    std::vector<SparseRow> reduced_m;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        SparseRow left, right;
        for (const auto& x : e.rows[k]) {
            if (x.col < cols_)
                left.push_back(x);
            else
                right.push_back(x);
        }
        if (e.pivots[k] < cols_) {
            is_pivot[e.pivots[k]] = true;
            pivots_.push_back(e.pivots[k]);
            transform_.push_back(std::move(right));
            reduced_m.push_back(std::move(left));
        } else {
            consistency_.push_back(std::move(right));
        }
    }
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(cols_, field_);
        v[f] = Scalar::one(field_);
        for (std::size_t k = 0; k < pivots_.size(); ++k)
            for (const auto& x : reduced_m[k])
                if (x.col == f)
                    v[pivots_[k]] = -x.value;
        kernel_.push_back(std::move(v));
    }
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("LinearSolver::solve: dimension mismatch");
    for (const auto& c : consistency_)
        if (!dot(c, b, cols_).is_zero())
            return std::nullopt;
    Vector x = zero_vector(cols_, field_);
    for (std::size_t k = 0; k < pivots_.size(); ++k)
        x[pivots_[k]] = dot(transform_[k], b, cols_);
    return x;
}

}  // namespace skewext
