#pragma once

#include <map>
#include <vector>

#include "skewext/bigraded.hpp"
#include "skewext/free_complex.hpp"

namespace skewext {

/// Minimal free resolution of the trivial module, positions 0..N, all
/// generators of degree <= D.
struct Resolution {
    FreeComplex complex;
    int N = 0;
    int D = 0;

    bool certified(int n, int d) const { return n >= 0 && n <= N && d >= 0 && d <= D; }
    /// (n, d) -> number of degree-d generators of V_n; zero entries omitted.
    std::map<Bidegree, std::size_t> table() const;
};

Resolution minimal_resolution(const AlgebraPtr& A, int N, int D);

std::map<Bidegree, std::size_t> generator_table(const FreeComplex& X, int D);

/// Coefficients of sum_n (-1)^n sum_{v in V_n} t^{deg v}, degrees 0..D.
std::vector<long> signed_generator_series(const FreeComplex& X, int D);
/// Product of two truncated series, degrees 0..D.
std::vector<long> series_product(const std::vector<long>& a, const std::vector<long>& b, int D);
/// sum_n (-1)^n H_{A (x) V_n}(t) == 1 mod t^{m+1}, m = min(N, D).
bool euler_identity(const Resolution& R);

}  // namespace skewext
