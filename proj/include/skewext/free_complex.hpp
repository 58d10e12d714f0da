#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewext/morphism.hpp"

namespace skewext {

/// Coordinates of (A (x) V)_e: generator j owns the block basis(e - deg v_j).
class DegreeLayout {
public:
    DegreeLayout(const GradedAlgebra& A, const std::vector<int>& degrees, int e);
    std::size_t size() const { return size_; }
    std::size_t offset(std::size_t j) const { return offsets_[j]; }
    std::size_t block(std::size_t j) const { return blocks_[j]; }
    int degree() const { return e_; }

private:
    int e_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> blocks_;
    std::size_t size_ = 0;
};

/// Map A (x) V -> A (x) W of free left modules. Column j lists d(1 (x) v_j) =
/// sum_i M_ij (x) w_i; entry (i, j) has degree col_degrees[j] - shift - row_degrees[i].
struct AlgMatrix {
    std::vector<int> row_degrees;
    std::vector<int> col_degrees;
    int shift = 0;
    std::vector<std::map<std::size_t, AlgebraElement>> columns;

    AlgMatrix() = default;
    AlgMatrix(std::vector<int> rows, std::vector<int> cols, int shift = 0);
    std::size_t rows() const { return row_degrees.size(); }
    std::size_t cols() const { return col_degrees.size(); }
    int entry_degree(std::size_t i, std::size_t j) const { return col_degrees[j] - shift - row_degrees[i]; }
    void set(std::size_t i, std::size_t j, AlgebraElement a);
    const AlgebraElement* entry(std::size_t i, std::size_t j) const;
    bool is_zero() const;
};

/// Matrix of M on (A (x) V)_e -> (A (x) W)_{e - shift}.
Matrix degree_matrix(const GradedAlgebra& A, const AlgMatrix& M, int e);
/// a * x for x in layout (degrees, e), result in layout (degrees, e + deg a).
Vector left_multiply(const GradedAlgebra& A, const AlgebraElement& a, const std::vector<int>& degrees,
                     const Vector& x, int e);
/// Column vector of an element of (A (x) W)_e, split back into entries.
std::map<std::size_t, AlgebraElement> split(const GradedAlgebra& A, const std::vector<int>& degrees,
                                            const Vector& x, int e);
/// N o M (M applied first).
AlgMatrix compose(const GradedAlgebra& A, const AlgMatrix& N, const AlgMatrix& M);
bool equal(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix scale(const AlgMatrix& M, const Scalar& c);
/// Entries pushed through an algebra map; degrees unchanged.
AlgMatrix map_entries(const AlgMatrix& M, const GradedMorphism& phi);

/// Cochain complex of free graded left modules, stored homologically:
/// position n holds A (x) V_n (cohomological index -n). Positions low..top.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(AlgebraPtr A, int low, std::vector<std::vector<int>> generators, std::vector<AlgMatrix> differentials,
                int max_degree);

    const AlgebraPtr& algebra() const { return A_; }
    int low() const { return low_; }
    int top() const { return low_ + static_cast<int>(gens_.size()) - 1; }
    int max_degree() const { return D_; }
    bool has_position(int n) const { return n >= low_ && n <= top(); }
    /// Generator degrees at position n (empty outside the stored range).
    const std::vector<int>& generators(int n) const;
    /// d : position n -> position n - 1 (zero map when n - 1 is not stored).
    AlgMatrix differential(int n) const;
    Matrix degree_map(int n, int e) const;
    DegreeLayout layout(int n, int e) const { return DegreeLayout(*A_, generators(n), e); }
    /// Number of generators of degree d at position n.
    std::size_t count(int n, int d) const;

private:
    AlgebraPtr A_;
    int low_ = 0;
    int D_ = 0;
    std::vector<std::vector<int>> gens_;
    std::vector<AlgMatrix> diffs_;  // diffs_[k] : position low + k + 1 -> low + k
};

/// Component-wise map between complexes over the same algebra, same positions.
struct ComplexMap {
    const FreeComplex* source = nullptr;
    const FreeComplex* target = nullptr;
    std::map<int, AlgMatrix> components;
};

class NotAChainMap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<int> chain_map_defect(const ComplexMap& f);
/// X[i]^m = X^{m+i}, i.e. position n of X sits at position n - i; the
/// differential is multiplied by (-1)^i.
FreeComplex shift_complex(const FreeComplex& X, int i);
/// X(s): a generator in degree g moves to degree g - s.
FreeComplex internal_shift(const FreeComplex& X, int s);
/// Cone position j = X_{j-1} (+) Y_j, differential [[-d_X, 0], [f, d_Y]].
FreeComplex mapping_cone(const ComplexMap& f);
/// ^nu X as a plain free complex: entries replaced by nu^{-1}-images.
FreeComplex twist_complex(const FreeComplex& X, const GradedMorphism& nu);
/// B (x)_A X, or B^sigma(-shift) (x)_A X when sigma is given.
FreeComplex induce_up(const AlgebraPtr& B, const GradedMorphism& iota, const FreeComplex& X,
                      const GradedMorphism* sigma = nullptr, int shift = 0);
FreeComplex truncate(const FreeComplex& X, int low, int top);

/// First position where d o d != 0, if any.
std::optional<int> dd_defect(const FreeComplex& X);
/// No differential entry of degree 0.
bool is_minimal(const FreeComplex& X);

struct ExactnessReport {
    std::map<std::pair<int, int>, long> homology;  ///< (position, degree) -> dim ker - dim im
    bool exact = true;  ///< zero everywhere except (0,0) = 1 when augmented
};
/// Homology at positions low..top-1, internal degrees 0..D.
ExactnessReport verify_exactness(const FreeComplex& X, bool augmented, int D);

/// Cached solvers for the differential of a complex.
class ComplexSolvers {
public:
    explicit ComplexSolvers(const FreeComplex& X) : X_(&X) {}
    const LinearSolver& at(int n, int e);
    const FreeComplex& complex() const { return *X_; }

private:
    const FreeComplex* X_;
    std::map<std::pair<int, int>, LinearSolver> cache_;
};

}  // namespace skewext
