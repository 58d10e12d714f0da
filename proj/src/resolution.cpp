#include "skewext/resolution.hpp"

#include <algorithm>

namespace skewext {

std::map<Bidegree, std::size_t> generator_table(const FreeComplex& X, int D)
{
    std::map<Bidegree, std::size_t> t;
    for (int n = X.low(); n <= X.top(); ++n)
        for (int d : X.generators(n))
            if (d <= D)
                ++t[{n, d}];
    return t;
}

std::map<Bidegree, std::size_t> Resolution::table() const
{
    return generator_table(complex, D);
}

Resolution minimal_resolution(const AlgebraPtr& A, int N, int D)
{
    if (N < 0 || D < 0)
        throw std::invalid_argument("truncation must be nonnegative");
    if (D > A->max_degree())
        throw TruncationError("resolution degree " + std::to_string(D) + " exceeds algebra truncation " +
                              std::to_string(A->max_degree()));
    const Field f = A->field();
    std::vector<std::vector<int>> gens{{0}};
    std::vector<AlgMatrix> diffs;
    for (int n = 1; n <= N; ++n) {
        const std::vector<int>& below = gens.back();
        AlgMatrix d(below, {});
        for (int e = 0; e <= D; ++e) {
            std::vector<Vector> kernel;
            if (n == 1) {
                if (e >= 1)
                    for (std::size_t k = 0; k < A->dim(e); ++k) {
                        Vector v = zero_vector(A->dim(e), f);
                        v[k] = Scalar::one(f);
                        kernel.push_back(std::move(v));
                    }
            } else {
                kernel = kernel_basis(degree_matrix(*A, diffs.back(), e));
            }
            if (kernel.empty())
                continue;
            Matrix img = degree_matrix(*A, d, e);
            std::vector<Vector> image;
            for (std::size_t c = 0; c < img.cols(); ++c)
                image.push_back(img.column(c));
            for (const Vector& v : extend_to_basis(image, kernel)) {
                d.col_degrees.push_back(e);
                d.columns.push_back(split(*A, below, v, e));
            }
        }
        gens.push_back(d.col_degrees);
        diffs.push_back(std::move(d));
    }
    Resolution R;
    R.complex = FreeComplex(A, 0, std::move(gens), std::move(diffs), D);
    R.N = N;
    R.D = D;
    return R;
}

std::vector<long> signed_generator_series(const FreeComplex& X, int D)
{
    std::vector<long> s(static_cast<std::size_t>(D) + 1, 0);
    for (int n = X.low(); n <= X.top(); ++n)
        for (int d : X.generators(n))
            if (d >= 0 && d <= D)
                s[static_cast<std::size_t>(d)] += (n % 2 == 0) ? 1 : -1;
    return s;
}

std::vector<long> series_product(const std::vector<long>& a, const std::vector<long>& b, int D)
{
    std::vector<long> c(static_cast<std::size_t>(D) + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(D); ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(D); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

bool euler_identity(const Resolution& R)
{
    int m = std::min(R.N, R.D);
    std::vector<long> h;
    for (int d = 0; d <= m; ++d)
        h.push_back(static_cast<long>(R.complex.algebra()->dim(d)));
    auto p = series_product(signed_generator_series(R.complex, m), h, m);
    for (int d = 0; d <= m; ++d)
        if (p[static_cast<std::size_t>(d)] != (d == 0 ? 1 : 0))
            return false;
    return true;
}

}  // namespace skewext
