#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skewext/groebner.hpp"
#include "skewext/matrix.hpp"
#include "skewext/presentation.hpp"

namespace skewext {

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Homogeneous element of a graded algebra in normal-word coordinates.
struct AlgebraElement {
    int degree = 0;
    Vector coords;  ///< over GradedAlgebra::basis(degree)

    bool is_zero() const { return skewext::is_zero(coords); }
};

/// The quotient k<gens>/(rels) truncated at internal degree D. Normal words,
/// the Hilbert function and the multiplication table of normal words through
/// total degree D are all computed at construction; afterwards every query is
/// read-only.
class GradedAlgebra {
public:
    GradedAlgebra(Presentation p, int max_degree);
    GradedAlgebra(Presentation p, MonomialOrder ord, int max_degree);

    const Presentation& presentation() const { return pres_; }
    const MonomialOrder& order() const { return ord_; }
    const GroebnerBasis& groebner() const { return gb_; }
    Field field() const { return pres_.field(); }
    int max_degree() const { return max_degree_; }
    std::size_t num_generators() const { return pres_.num_generators(); }

    /// dim A_d; zero for negative d.
    std::size_t dim(int d) const;
    const std::vector<Word>& basis(int d) const;
    std::optional<std::size_t> index_of(const Word& w) const;
    std::vector<std::size_t> hilbert() const;

    struct NormalForm {
        NCPoly value;
        bool certified;  ///< false when some term exceeds the certified degree
    };
    NormalForm normal_form(const NCPoly& f) const;

    AlgebraElement zero(int d) const;
    AlgebraElement one() const;
    AlgebraElement generator(std::size_t g) const;
    /// Coordinates of a homogeneous polynomial of degree d.
    AlgebraElement element(const NCPoly& f, int d) const;
    NCPoly to_poly(const AlgebraElement& a) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    /// Product of basis words as a sparse row over basis(da + db).
    const SparseRow& basis_product(int da, std::size_t i, int db, std::size_t j) const;

private:
    void build();
    void check_degree(int d) const;

    Presentation pres_;
    MonomialOrder ord_;
    int max_degree_;
    GroebnerBasis gb_;
    std::vector<std::vector<Word>> basis_;
    std::map<Word, std::size_t> index_;
    // products_[da][db][i * dim(db) + j]
    std::vector<std::vector<std::vector<SparseRow>>> products_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

}  // namespace skewext
