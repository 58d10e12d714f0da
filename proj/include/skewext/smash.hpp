#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "skewext/bigraded.hpp"
#include "skewext/morphism.hpp"

namespace skewext {

/// Basis element of a tensor product: (bidegree, index) of each factor.
struct TensorKey {
    Bidegree left;
    std::size_t i = 0;
    Bidegree right;
    std::size_t j = 0;
    auto operator<=>(const TensorKey&) const = default;
    Bidegree degree() const { return left + right; }
};

using TensorElement = std::map<TensorKey, Scalar>;

void add_to(TensorElement& acc, const TensorKey& k, const Scalar& c);
bool tensor_equal(const TensorElement& a, const TensorElement& b);
std::string tensor_str(const TensorElement& x, const std::string& left_prefix = "",
                       const std::string& right_prefix = "");

enum class SmashStatus { unchecked, normal, certified, failed };
std::string to_string(SmashStatus s);

/// X #_R Y with R : Y (x) X -> X (x) Y given on basis pairs. The key of
/// `values` is (y, x) stored as TensorKey{y-part, x-part}.
struct SmashTwist {
    BigradedPtr X;
    BigradedPtr Y;
    std::map<TensorKey, TensorElement> values;
    SmashStatus status = SmashStatus::unchecked;
    std::string counterexample;

    const TensorElement& R(const TensorKey& yx) const;
    /// Basis of (X (x) Y) in bidegree c, in a fixed order.
    std::vector<TensorKey> basis(const Bidegree& c) const;
    bool in_window(const Bidegree& c) const { return X->in_window(c) && Y->in_window(c); }
};

TensorElement smash_multiply(const SmashTwist& T, const TensorKey& a, const TensorKey& b);
TensorElement smash_multiply(const SmashTwist& T, const TensorElement& a, const TensorElement& b);

/// Checks normality, then the unit law and associativity on all basis triples
/// whose total bidegree has n <= N and t <= D. Updates status/counterexample.
SmashStatus certify_smash(SmashTwist& T, int N, int D);

/// The smash product as a bigraded algebra on the basis of SmashTwist::basis.
BigradedAlgebra smash_algebra(const SmashTwist& T);

class NotAFactorization : public std::runtime_error {
public:
    NotAFactorization(const Bidegree& b, const std::string& why);
    const Bidegree& bidegree() const { return b_; }

private:
    Bidegree b_;
};

/// Matrix of x (x) y -> f_X(x) f_Y(y) on (X (x) Y)_c -> C_c.
Matrix combined_multiplication(const BigradedAlgebra& C, const BigradedAlgebra& X, const BigradedMap& fX,
                               const BigradedAlgebra& Y, const BigradedMap& fY, const std::vector<TensorKey>& basis,
                               const Bidegree& c);

/// The R with C = X #_R Y through f_X, f_Y, computed wherever C's products
/// are known.
SmashTwist twist_from_factorization(const BigradedAlgebra& C, BigradedPtr X, const BigradedMap& fX, BigradedPtr Y,
                                    const BigradedMap& fY);

/// Degree-concentrated bigraded view of a graded algebra (n = 0, t = degree).
BigradedAlgebra from_graded(const GradedAlgebra& A);

/// R(z^i (x) a) = sigma^i(a) (x) z^i on X = A, Y = k[z] (as bigraded in n = 0).
SmashTwist skew_twist(const SkewExtension& S, const BigradedPtr& A, const BigradedPtr& kz);

/// Compares the skew twist's product table with normal-form multiplication in
/// B under a (x) z^i <-> a z^i. Returns a counterexample on mismatch.
std::optional<std::string> check_skew_twist_against_extension(const SmashTwist& T, const SkewExtension& S);

}  // namespace skewext
