#include "skewext/free_complex.hpp"

#include <algorithm>

namespace skewext {

DegreeLayout::DegreeLayout(const GradedAlgebra& A, const std::vector<int>& degrees, int e) : e_(e)
{
    for (int d : degrees) {
        offsets_.push_back(size_);
        std::size_t b = A.dim(e - d);
        blocks_.push_back(b);
        size_ += b;
    }
}

AlgMatrix::AlgMatrix(std::vector<int> rows, std::vector<int> cols, int s)
    : row_degrees(std::move(rows)), col_degrees(std::move(cols)), shift(s), columns(col_degrees.size())
{
}

void AlgMatrix::set(std::size_t i, std::size_t j, AlgebraElement a)
{
    if (a.degree != entry_degree(i, j))
        throw std::invalid_argument("entry of wrong degree in module map");
    if (a.is_zero())
        columns[j].erase(i);
    else
        columns[j][i] = std::move(a);
}

const AlgebraElement* AlgMatrix::entry(std::size_t i, std::size_t j) const
{
    auto it = columns[j].find(i);
    return it == columns[j].end() ? nullptr : &it->second;
}

bool AlgMatrix::is_zero() const
{
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
}

namespace {

using RowAccumulator = std::vector<std::map<std::size_t, Scalar>>;

void accumulate(RowAccumulator& acc, std::size_t r, std::size_t c, const Scalar& v)
{
    auto [it, fresh] = acc[r].emplace(c, v);
    if (!fresh)
        it->second += v;
}

Matrix to_matrix(RowAccumulator& acc, std::size_t cols, Field f)
{
    Matrix m(acc.size(), cols, f);
    for (std::size_t r = 0; r < acc.size(); ++r) {
        SparseRow row;
        for (const auto& [c, v] : acc[r])
            if (!v.is_zero())
                row.push_back({c, v});
        m.set_row(r, std::move(row));
    }
    return m;
}

Vector column_vector(const GradedAlgebra& A, const AlgMatrix& M, std::size_t j)
{
    DegreeLayout L(A, M.row_degrees, M.col_degrees[j] - M.shift);
    Vector v = zero_vector(L.size(), A.field());
    for (const auto& [i, a] : M.columns[j])
        for (std::size_t k = 0; k < a.coords.size(); ++k)
            v[L.offset(i) + k] = a.coords[k];
    return v;
}

}  // namespace

Matrix degree_matrix(const GradedAlgebra& A, const AlgMatrix& M, int e)
{
    DegreeLayout src(A, M.col_degrees, e);
    DegreeLayout tgt(A, M.row_degrees, e - M.shift);
    RowAccumulator acc(tgt.size());
    for (std::size_t j = 0; j < M.cols(); ++j) {
        int du = e - M.col_degrees[j];
        for (std::size_t iu = 0; iu < src.block(j); ++iu) {
            std::size_t col = src.offset(j) + iu;
            for (const auto& [i, a] : M.columns[j])
                for (std::size_t k = 0; k < a.coords.size(); ++k) {
                    if (a.coords[k].is_zero())
                        continue;
                    for (const auto& pe : A.basis_product(du, iu, a.degree, k))
                        accumulate(acc, tgt.offset(i) + pe.col, col, a.coords[k] * pe.value);
                }
        }
    }
    return to_matrix(acc, src.size(), A.field());
}

Vector left_multiply(const GradedAlgebra& A, const AlgebraElement& a, const std::vector<int>& degrees,
                     const Vector& x, int e)
{
    DegreeLayout src(A, degrees, e);
    DegreeLayout tgt(A, degrees, e + a.degree);
    Vector out = zero_vector(tgt.size(), A.field());
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        int du = e - degrees[j];
        for (std::size_t iu = 0; iu < src.block(j); ++iu) {
            const Scalar& c = x[src.offset(j) + iu];
            if (c.is_zero())
                continue;
            // a * u: a on the left
            for (std::size_t k = 0; k < a.coords.size(); ++k) {
                if (a.coords[k].is_zero())
                    continue;
                for (const auto& pe : A.basis_product(a.degree, k, du, iu))
                    out[tgt.offset(j) + pe.col] += c * a.coords[k] * pe.value;
            }
        }
    }
    return out;
}

std::map<std::size_t, AlgebraElement> split(const GradedAlgebra& A, const std::vector<int>& degrees, const Vector& x,
                                            int e)
{
    DegreeLayout L(A, degrees, e);
    std::map<std::size_t, AlgebraElement> out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (L.block(i) == 0)
            continue;
        AlgebraElement a{e - degrees[i], Vector(x.begin() + static_cast<long>(L.offset(i)),
                                                x.begin() + static_cast<long>(L.offset(i) + L.block(i)))};
        if (!a.is_zero())
            out.emplace(i, std::move(a));
    }
    return out;
}

AlgMatrix compose(const GradedAlgebra& A, const AlgMatrix& N, const AlgMatrix& M)
{
    if (N.col_degrees != M.row_degrees)
        throw std::invalid_argument("compose: module maps are not composable");
    AlgMatrix R(N.row_degrees, M.col_degrees, M.shift + N.shift);
    std::vector<Vector> ncols;
    for (std::size_t i = 0; i < N.cols(); ++i)
        ncols.push_back(column_vector(A, N, i));
    for (std::size_t j = 0; j < M.cols(); ++j) {
        int e = M.col_degrees[j] - R.shift;
        if (e > A.max_degree())
            continue;  // outside the window
        Vector acc = zero_vector(DegreeLayout(A, R.row_degrees, e).size(), A.field());
        for (const auto& [i, a] : M.columns[j]) {
            Vector v = left_multiply(A, a, N.row_degrees, ncols[i], N.col_degrees[i] - N.shift);
            for (std::size_t k = 0; k < v.size(); ++k)
                acc[k] += v[k];
        }
        R.columns[j] = split(A, R.row_degrees, acc, e);
    }
    return R;
}

bool equal(const AlgMatrix& a, const AlgMatrix& b)
{
    if (a.row_degrees != b.row_degrees || a.col_degrees != b.col_degrees || a.shift != b.shift)
        return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.columns[j].size() != b.columns[j].size())
            return false;
        for (const auto& [i, x] : a.columns[j]) {
            const AlgebraElement* y = b.entry(i, j);
            if (!y || !(x.coords == y->coords))
                return false;
        }
    }
    return true;
}

AlgMatrix scale(const AlgMatrix& M, const Scalar& c)
{
    AlgMatrix R = M;
    for (auto& col : R.columns) {
        for (auto it = col.begin(); it != col.end();) {
            for (auto& x : it->second.coords)
                x *= c;
            it = it->second.is_zero() ? col.erase(it) : std::next(it);
        }
    }
    return R;
}

AlgMatrix map_entries(const AlgMatrix& M, const GradedMorphism& phi)
{
    AlgMatrix R(M.row_degrees, M.col_degrees, M.shift);
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (const auto& [i, a] : M.columns[j])
            R.set(i, j, phi.apply(a));
    return R;
}

FreeComplex::FreeComplex(AlgebraPtr A, int low, std::vector<std::vector<int>> generators,
                         std::vector<AlgMatrix> differentials, int max_degree)
    : A_(std::move(A)), low_(low), D_(max_degree), gens_(std::move(generators)), diffs_(std::move(differentials))
{
    if (gens_.empty())
        gens_.emplace_back();
    if (diffs_.size() + 1 != gens_.size())
        throw std::invalid_argument("complex needs one differential between consecutive positions");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
        if (diffs_[k].col_degrees != gens_[k + 1] || diffs_[k].row_degrees != gens_[k])
            throw std::invalid_argument("differential shape does not match generators at position " +
                                        std::to_string(low_ + static_cast<int>(k) + 1));
}

const std::vector<int>& FreeComplex::generators(int n) const
{
    static const std::vector<int> none;
    return has_position(n) ? gens_[static_cast<std::size_t>(n - low_)] : none;
}

AlgMatrix FreeComplex::differential(int n) const
{
    if (has_position(n) && has_position(n - 1))
        return diffs_[static_cast<std::size_t>(n - low_ - 1)];
    return AlgMatrix(generators(n - 1), generators(n));
}

Matrix FreeComplex::degree_map(int n, int e) const
{
    if (has_position(n) && has_position(n - 1))
        return degree_matrix(*A_, diffs_[static_cast<std::size_t>(n - low_ - 1)], e);
    return Matrix(layout(n - 1, e).size(), layout(n, e).size(), A_->field());
}

std::size_t FreeComplex::count(int n, int d) const
{
    const auto& g = generators(n);
    return static_cast<std::size_t>(std::count(g.begin(), g.end(), d));
}

std::optional<int> chain_map_defect(const ComplexMap& f)
{
    const FreeComplex& X = *f.source;
    const FreeComplex& Y = *f.target;
    const GradedAlgebra& A = *X.algebra();
    auto comp = [&](int p) {
        auto it = f.components.find(p);
        return it != f.components.end() ? it->second : AlgMatrix(Y.generators(p), X.generators(p));
    };
    int lo = std::min(X.low(), Y.low()), hi = std::max(X.top(), Y.top());
    for (int p = lo; p <= hi + 1; ++p) {
        AlgMatrix lhs = compose(A, Y.differential(p), comp(p));
        AlgMatrix rhs = compose(A, comp(p - 1), X.differential(p));
        if (!equal(lhs, rhs))
            return p;
    }
    return std::nullopt;
}

FreeComplex shift_complex(const FreeComplex& X, int i)
{
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    Scalar sign = Scalar(i % 2 == 0 ? 1 : -1, X.algebra()->field());
    for (int n = X.low(); n <= X.top(); ++n) {
        gens.push_back(X.generators(n));
        if (n > X.low())
            diffs.push_back(scale(X.differential(n), sign));
    }
    return FreeComplex(X.algebra(), X.low() - i, gens, diffs, X.max_degree());
}

FreeComplex internal_shift(const FreeComplex& X, int s)
{
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    auto shifted = [s](std::vector<int> v) {
        for (int& d : v)
            d -= s;
        return v;
    };
    for (int n = X.low(); n <= X.top(); ++n) {
        gens.push_back(shifted(X.generators(n)));
        if (n > X.low()) {
            AlgMatrix d = X.differential(n);
            d.row_degrees = shifted(d.row_degrees);
            d.col_degrees = shifted(d.col_degrees);
            diffs.push_back(std::move(d));
        }
    }
    return FreeComplex(X.algebra(), X.low(), gens, diffs, X.max_degree());
}

FreeComplex mapping_cone(const ComplexMap& f)
{
    if (auto p = chain_map_defect(f))
        throw NotAChainMap("map is not a chain map at position " + std::to_string(*p));
    const FreeComplex& X = *f.source;
    const FreeComplex& Y = *f.target;
    const Field fld = X.algebra()->field();
    int lo = std::min(X.low() + 1, Y.low()), hi = std::max(X.top() + 1, Y.top());
    auto cone_gens = [&](int j) {
        std::vector<int> g = X.generators(j - 1);
        const auto& y = Y.generators(j);
        g.insert(g.end(), y.begin(), y.end());
        return g;
    };
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    const Scalar minus = Scalar(-1, fld);
    for (int j = lo; j <= hi; ++j) {
        gens.push_back(cone_gens(j));
        if (j == lo)
            continue;
        AlgMatrix d(cone_gens(j - 1), cone_gens(j));
        std::size_t nx_src = X.generators(j - 1).size();
        std::size_t nx_tgt = X.generators(j - 2).size();
        AlgMatrix dx = scale(X.differential(j - 1), minus);
        auto fit = f.components.find(j - 1);
        for (std::size_t c = 0; c < nx_src; ++c) {
            for (const auto& [r, a] : dx.columns[c])
                d.set(r, c, a);
            if (fit != f.components.end())
                for (const auto& [r, a] : fit->second.columns[c])
                    d.set(nx_tgt + r, c, a);
        }
        AlgMatrix dy = Y.differential(j);
        for (std::size_t c = 0; c < dy.cols(); ++c)
            for (const auto& [r, a] : dy.columns[c])
                d.set(nx_tgt + r, nx_src + c, a);
        diffs.push_back(std::move(d));
    }
    FreeComplex C(X.algebra(), lo, gens, diffs, std::min(X.max_degree(), Y.max_degree()));
    if (auto p = dd_defect(C))
        throw std::logic_error("cone differential does not square to zero at position " + std::to_string(*p));
    return C;
}

FreeComplex twist_complex(const FreeComplex& X, const GradedMorphism& nu)
{
    MorphismPtr inv = nu.inverse();
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    for (int n = X.low(); n <= X.top(); ++n) {
        gens.push_back(X.generators(n));
        if (n > X.low())
            diffs.push_back(map_entries(X.differential(n), *inv));
    }
    return FreeComplex(X.algebra(), X.low(), gens, diffs, X.max_degree());
}

FreeComplex induce_up(const AlgebraPtr& B, const GradedMorphism& iota, const FreeComplex& X,
                      const GradedMorphism* sigma, int shift)
{
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    auto shifted = [shift](std::vector<int> v) {
        for (int& d : v)
            d += shift;
        return v;
    };
    for (int n = X.low(); n <= X.top(); ++n) {
        gens.push_back(shifted(X.generators(n)));
        if (n == X.low())
            continue;
        AlgMatrix d = X.differential(n);
        if (sigma)
            d = map_entries(d, *sigma);
        d = map_entries(d, iota);
        d.row_degrees = shifted(d.row_degrees);
        d.col_degrees = shifted(d.col_degrees);
        diffs.push_back(std::move(d));
    }
    return FreeComplex(B, X.low(), gens, diffs, B->max_degree());
}

FreeComplex truncate(const FreeComplex& X, int low, int top)
{
    low = std::max(low, X.low());
    top = std::min(top, X.top());
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    for (int n = low; n <= top; ++n) {
        gens.push_back(X.generators(n));
        if (n > low)
            diffs.push_back(X.differential(n));
    }
    return FreeComplex(X.algebra(), low, gens, diffs, X.max_degree());
}

std::optional<int> dd_defect(const FreeComplex& X)
{
    for (int n = X.low() + 2; n <= X.top(); ++n)
        if (!compose(*X.algebra(), X.differential(n - 1), X.differential(n)).is_zero())
            return n;
    return std::nullopt;
}

bool is_minimal(const FreeComplex& X)
{
    for (int n = X.low() + 1; n <= X.top(); ++n) {
        AlgMatrix d = X.differential(n);
        for (const auto& col : d.columns)
            for (const auto& [i, a] : col)
                if (a.degree == 0)
                    return false;
    }
    return true;
}

ExactnessReport verify_exactness(const FreeComplex& X, bool augmented, int D)
{
    ExactnessReport rep;
    std::map<std::pair<int, int>, std::size_t> ranks;
    auto rk = [&](int n, int e) {
        auto key = std::make_pair(n, e);
        auto it = ranks.find(key);
        if (it == ranks.end())
            it = ranks.emplace(key, rank(X.degree_map(n, e))).first;
        return it->second;
    };
    for (int n = X.low(); n < X.top(); ++n)
        for (int e = 0; e <= D; ++e) {
            long dim = static_cast<long>(X.layout(n, e).size());
            long h = dim - static_cast<long>(rk(n, e)) - static_cast<long>(rk(n + 1, e));
            rep.homology[{n, e}] = h;
            long want = (augmented && n == 0 && e == 0) ? 1 : 0;
            if (h != want)
                rep.exact = false;
        }
    return rep;
}

const LinearSolver& ComplexSolvers::at(int n, int e)
{
    auto key = std::make_pair(n, e);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, LinearSolver(X_->degree_map(n, e))).first;
    return it->second;
}

}  // namespace skewext
