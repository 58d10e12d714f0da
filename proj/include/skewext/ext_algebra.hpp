#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "skewext/bigraded.hpp"
#include "skewext/lift.hpp"
#include "skewext/smash.hpp"

namespace skewext {

/// Class in E^n_{-t}: coordinates over the degree-t generators of V_n.
using ExtClass = BiElement;

struct ExtOptions {
    bool products = true;
    std::optional<std::uint64_t> perturbation_seed;
};

/// Ext-algebra read off a minimal resolution, truncated to n <= N, t <= D.
/// The basis of E^n_{-t} is dual to the generators of V_n of degree t, in
/// resolution order.
class ExtAlgebra {
public:
    ExtAlgebra(const FreeComplex& resolution, int N, int D, ExtOptions opt = {});

    const FreeComplex& resolution() const { return *P_; }
    const BigradedAlgebra& table() const { return *E_; }
    BigradedPtr table_ptr() const { return E_; }
    int N() const { return N_; }
    int D() const { return D_; }
    bool has_products() const { return products_; }

    /// Index in V_n of the k-th basis element of bidegree b.
    std::size_t generator_of(const Bidegree& b, std::size_t k) const;
    /// (bidegree, ordinal) of generator v of V_n.
    std::pair<Bidegree, std::size_t> basis_of(int n, std::size_t v) const;

    /// Chain-map lift of a class (sign (-1)^n per step).
    ChainMapLift lift_cocycle(const ExtClass& f, std::optional<std::uint64_t> seed = std::nullopt) const;
    /// g * f = "g after f".
    ExtClass yoneda_multiply(const ExtClass& g, const ExtClass& f) const;
    ExtClass multiply(const ExtClass& g, const ExtClass& f) const { return E_->multiply(g, f); }

    ComplexSolvers& solvers() const { return *solvers_; }

private:
    const FreeComplex* P_;
    int N_, D_;
    bool products_;
    std::map<Bidegree, std::vector<std::size_t>> gens_;
    std::shared_ptr<BigradedAlgebra> E_;
    std::shared_ptr<ComplexSolvers> solvers_;
};

/// Dimensions only.
BigradedAlgebra ext_table(const FreeComplex& resolution, int N, int D);

/// E(phi) : E(A') -> E(A) for phi : A -> A', from a lift P_A -> Q_A'. Block
/// (n, t) has rows over E(A)_(n,t) and columns over E(A')_(n,t).
BigradedMap ext_functor_map(const GradedMorphism& phi, const ExtAlgebra& EA, const ExtAlgebra& EA2,
                            std::optional<std::uint64_t> seed = std::nullopt);

/// The basis class of E^1(k[z]) at (1, l).
ExtClass xi_class(const ExtAlgebra& Ez, int l);

/// tau on E(A) from a lift of ^{sigma^{-1}}P -> P with base 1 -> 1.
BigradedMap compute_tau(const ExtAlgebra& EA, const GradedMorphism& sigma,
                        std::optional<std::uint64_t> seed = std::nullopt);

/// R_E : E(A) (x) E(k[z]) -> E(k[z]) (x) E(A), R_E(f (x) g) = (-1)^i g (x) tau(f).
SmashTwist build_RE(const BigradedMap& tau, const BigradedPtr& EA, const BigradedPtr& Ez, int l);

}  // namespace skewext
