#pragma once

#include <optional>

#include "skewext/resolution.hpp"

namespace skewext {

/// rho_z : B^sigma(-l) (x)_A P -> B (x)_A P, right multiplication by z.
struct RhoZ {
    FreeComplex twisted;  // B^sigma(-l) (x)_A P
    FreeComplex plain;    // B (x)_A P
    std::map<int, AlgMatrix> components;
    ComplexMap map() const { return {&twisted, &plain, components}; }
};

RhoZ build_rho_z(const SkewExtension& S, const FreeComplex& P);

/// Cone(rho_z) truncated to positions 0..N. At position j the first
/// |V_{j-1}| generators are the z-part (V_{j-1} shifted by l, same order),
/// the remaining |V_j| the A-part.
struct ConeResolution {
    SkewExtension ext;
    Resolution base;
    FreeComplex cone;
    int N = 0;
    int D = 0;

    std::size_t z_count(int j) const { return base.complex.generators(j - 1).size(); }
    std::size_t z_index(int /*j*/, std::size_t k) const { return k; }
    std::size_t a_index(int j, std::size_t k) const { return z_count(j) + k; }
    bool is_z_part(int j, std::size_t idx) const { return idx < z_count(j); }
};

ConeResolution build_cone_resolution(const SkewExtension& S, int N, int D);
ConeResolution build_cone_resolution(const SkewExtension& S, const Resolution& P);

struct CrossValidation {
    std::map<Bidegree, std::size_t> cone_table;
    std::map<Bidegree, std::size_t> direct_table;
    std::optional<Bidegree> mismatch;
    bool direct_exact = false;
    bool match() const { return !mismatch; }
};

/// Compares generator tables of the cone with a minimal resolution of B
/// computed from its own presentation.
CrossValidation cross_validate(const ConeResolution& C);

}  // namespace skewext
