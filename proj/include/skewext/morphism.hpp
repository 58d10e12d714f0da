#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewext/graded_algebra.hpp"

namespace skewext {

class RelationNotPreserved : public std::runtime_error {
public:
    RelationNotPreserved(const std::string& relation, const std::string& image);
    const std::string& relation() const { return relation_; }

private:
    std::string relation_;
};

class NotInvertible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GradedMorphism;
using MorphismPtr = std::shared_ptr<const GradedMorphism>;

/// Graded algebra map determined by generator images. Instances are only
/// produced by check_morphism, so every one is certified through degree
/// min(D_source, D_target).
class GradedMorphism {
public:
    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<NCPoly>& images() const { return images_; }
    bool is_automorphism() const { return automorphism_; }
    int max_degree() const { return max_degree_; }

    /// Matrix of the map A_d -> A'_d in normal-word coordinates.
    const Matrix& degree_matrix(int d) const;
    AlgebraElement apply(const AlgebraElement& a) const;
    NCPoly apply(const NCPoly& f) const;  ///< free-algebra substitution, not reduced

    /// Generator images of the inverse (automorphisms only).
    const std::vector<NCPoly>& inverse_images() const;
    MorphismPtr inverse() const;

    /// Equality tested on generator images (normal forms).
    bool equals(const GradedMorphism& o) const;

private:
    friend MorphismPtr check_morphism(AlgebraPtr, AlgebraPtr, std::vector<NCPoly>, bool);
    GradedMorphism() = default;

    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<NCPoly> images_;
    bool automorphism_ = false;
    int max_degree_ = 0;
    std::vector<Matrix> matrices_;
    std::vector<NCPoly> inverse_images_;
};

/// Validates generator images (homogeneity, relations mapped to zero, and
/// degree-wise invertibility when `automorphism`).
MorphismPtr check_morphism(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images,
                           bool automorphism = false);
MorphismPtr identity_morphism(const AlgebraPtr& a);
/// outer o inner
MorphismPtr compose(const GradedMorphism& outer, const GradedMorphism& inner);
MorphismPtr power(const GradedMorphism& sigma, unsigned n);

/// Presentation of A[z; sigma]: generators of A plus z of degree l, relations
/// of A plus z*g - sigma(g)*z for every generator g.
Presentation skew_extension(const Presentation& a, const std::vector<NCPoly>& sigma, int z_degree,
                            const std::string& z_name = "z");

/// B = A[z; sigma] together with k[z] and the structure maps
/// iota_A : A -> B, iota_z : k[z] -> B, pi_A : B -> A, pi_z : B -> k[z].
struct SkewExtension {
    AlgebraPtr base;        // A
    AlgebraPtr extension;   // B
    AlgebraPtr polynomial;  // k[z]
    MorphismPtr sigma;
    MorphismPtr iota_A, iota_z, pi_A, pi_z;
    int z_degree = 1;
    std::size_t z_index = 0;  ///< index of z among the generators of B
};

SkewExtension make_skew_extension(const AlgebraPtr& base, const MorphismPtr& sigma, int z_degree,
                                  const std::string& z_name = "z");
/// Same, with the monomial order of B chosen explicitly.
SkewExtension make_skew_extension(const AlgebraPtr& base, const MorphismPtr& sigma, int z_degree,
                                  const std::string& z_name, const MonomialOrder& extension_order);

}  // namespace skewext
