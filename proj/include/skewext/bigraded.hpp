#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewext/matrix.hpp"

namespace skewext {

/// (cohomological n, internal t); the Ext piece E^n_{-t} is keyed by t >= 0.
struct Bidegree {
    int n = 0;
    int t = 0;
    auto operator<=>(const Bidegree&) const = default;
    Bidegree operator+(const Bidegree& o) const { return {n + o.n, t + o.t}; }
};

std::string to_string(const Bidegree& b);

struct BiElement {
    Bidegree degree;
    Vector coords;
    bool is_zero() const { return skewext::is_zero(coords); }
};

/// Finite-window bigraded algebra with explicit basis and product table.
/// Products are known for pairs whose total bidegree lies inside the window
/// (n <= max_n, t <= max_t).
class BigradedAlgebra {
public:
    BigradedAlgebra() = default;
    BigradedAlgebra(Field f, int max_n, int max_t);

    Field field() const { return field_; }
    int max_n() const { return max_n_; }
    int max_t() const { return max_t_; }
    bool in_window(const Bidegree& b) const { return b.n >= 0 && b.t >= 0 && b.n <= max_n_ && b.t <= max_t_; }

    void set_dim(const Bidegree& b, std::size_t d);
    std::size_t dim(const Bidegree& b) const;
    /// Bidegrees with nonzero dimension, sorted.
    std::vector<Bidegree> support() const;
    std::size_t total_dim() const;

    bool has_product(const Bidegree& a, const Bidegree& b) const { return in_window(a + b); }
    void set_product(const Bidegree& a, std::size_t i, const Bidegree& b, std::size_t j, Vector v);
    /// Coordinates of e_a,i * e_b,j over the basis of a + b.
    const Vector& product(const Bidegree& a, std::size_t i, const Bidegree& b, std::size_t j) const;
    BiElement multiply(const BiElement& x, const BiElement& y) const;

    BiElement basis_element(const Bidegree& b, std::size_t k) const;
    BiElement zero(const Bidegree& b) const;
    BiElement unit() const { return basis_element({0, 0}, 0); }

    BigradedAlgebra opposite() const;
    /// Same dimensions and identical product tables.
    bool operator==(const BigradedAlgebra& o) const;

    /// First basis pair whose products violate associativity, if any.
    std::optional<std::string> associativity_counterexample() const;
    bool unit_laws_hold() const;

    static std::string label(const Bidegree& b, std::size_t k);
    std::string element_str(const BiElement& x) const;

private:
    using Key = std::pair<Bidegree, Bidegree>;
    Field field_;
    int max_n_ = 0;
    int max_t_ = 0;
    std::map<Bidegree, std::size_t> dims_;
    std::map<Key, std::vector<Vector>> products_;
};

using BigradedPtr = std::shared_ptr<const BigradedAlgebra>;

/// Bidegree-preserving linear map; blocks[b] has rows = target dim, cols = source dim.
struct BigradedMap {
    std::map<Bidegree, Matrix> blocks;
    BiElement apply(const BiElement& x) const;
    const Matrix& block(const Bidegree& b) const;
};

BigradedMap compose(const BigradedMap& outer, const BigradedMap& inner);

}  // namespace skewext
