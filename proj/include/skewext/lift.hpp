#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewext/free_complex.hpp"

namespace skewext {

/// Lift L_k : source position k + offset -> target position k, lowering
/// internal degree by `shift`, with
///   d_T L_k(v) = sign * sum_i phi(M_iv) L_{k-1}(w_i).
struct LiftProblem {
    const FreeComplex* source = nullptr;
    const FreeComplex* target = nullptr;
    const GradedMorphism* phi = nullptr;  ///< source algebra -> target algebra; null means identity
    int offset = 0;
    int shift = 0;
    int sign = 1;
    /// L_0 on the generators of source position `offset`, each in layout (T_0, deg v - shift).
    std::vector<Vector> base;
    int max_position = 0;  ///< last k to solve
    int max_degree = 0;    ///< only source generators of degree <= max_degree
    std::optional<std::uint64_t> perturbation_seed;  ///< add random kernel vectors to each solve
};

class LiftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChainMapLift {
    int offset = 0;
    int shift = 0;
    /// components[k][v]: L_k(v) in layout (T_k, deg v - shift); empty when not computed.
    std::vector<std::vector<std::optional<Vector>>> components;
    std::vector<std::vector<int>> target_generators;
    AlgebraPtr target_algebra;

    bool has(int k, std::size_t v) const;
    const Vector& at(int k, std::size_t v) const;
    /// Scalar coefficients of L_k(v) on the target generators of degree deg v - shift.
    Vector readout(int k, std::size_t v, int source_degree) const;
};

ChainMapLift lift_chain_map(const LiftProblem& P, ComplexSolvers& target_solvers);

/// The chain-map contract checked directly against the stored components.
bool check_lift(const LiftProblem& P, const ChainMapLift& L);

}  // namespace skewext
