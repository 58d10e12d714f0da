#include "skewext/lift.hpp"

#include <random>

namespace skewext {

bool ChainMapLift::has(int k, std::size_t v) const
{
    auto kk = static_cast<std::size_t>(k);
    return k >= 0 && kk < components.size() && v < components[kk].size() && components[kk][v].has_value();
}

const Vector& ChainMapLift::at(int k, std::size_t v) const
{
    if (!has(k, v))
        throw LiftError("lift component (" + std::to_string(k) + "," + std::to_string(v) + ") not computed");
    return *components[static_cast<std::size_t>(k)][v];
}

Vector ChainMapLift::readout(int k, std::size_t v, int source_degree) const
{
    const auto& tg = target_generators[static_cast<std::size_t>(k)];
    const Vector& x = at(k, v);
    int e = source_degree - shift;
    DegreeLayout L(*target_algebra, tg, e);
    Vector out;
    for (std::size_t w = 0; w < tg.size(); ++w)
        if (tg[w] == e)
            out.push_back(x[L.offset(w)]);
    return out;
}

namespace {

AlgebraElement map_entry(const LiftProblem& P, const AlgebraElement& a)
{
    return P.phi ? P.phi->apply(a) : a;
}

// sign * sum_i phi(M_iv) L_{k-1}(w_i)
Vector lift_rhs(const LiftProblem& P, const ChainMapLift& L, int k, std::size_t v, const AlgMatrix& M)
{
    const GradedAlgebra& T = *P.target->algebra();
    const auto& tg = P.target->generators(k - 1);
    int e = M.col_degrees[v] - P.shift;
    Vector acc = zero_vector(DegreeLayout(T, tg, e).size(), T.field());
    for (const auto& [i, a] : M.columns[v]) {
        int ew = M.row_degrees[i] - P.shift;
        if (ew < 0)
            continue;
        Vector part = left_multiply(T, map_entry(P, a), tg, L.at(k - 1, i), ew);
        for (std::size_t q = 0; q < part.size(); ++q)
            acc[q] += part[q];
    }
    if (P.sign < 0)
        for (auto& c : acc)
            c = -c;
    return acc;
}

}  // namespace

ChainMapLift lift_chain_map(const LiftProblem& P, ComplexSolvers& solvers)
{
    const FreeComplex& S = *P.source;
    const FreeComplex& T = *P.target;
    const Field f = T.algebra()->field();
    ChainMapLift L;
    L.offset = P.offset;
    L.shift = P.shift;
    L.target_algebra = T.algebra();
    std::mt19937_64 rng(P.perturbation_seed.value_or(0));
    std::uniform_int_distribution<long> coef(-3, 3);

    const auto& g0 = S.generators(P.offset);
    if (P.base.size() != g0.size())
        throw std::invalid_argument("lift base needs one value per source generator");
    int last = std::min(P.max_position, std::min(T.top(), S.top() - P.offset));
    for (int k = 0; k <= last; ++k) {
        const auto& gs = S.generators(k + P.offset);
        L.target_generators.push_back(T.generators(k));
        std::vector<std::optional<Vector>> comp(gs.size());
        AlgMatrix M = S.differential(k + P.offset);
        for (std::size_t v = 0; v < gs.size(); ++v) {
            int e = gs[v] - P.shift;
            if (gs[v] > P.max_degree || e > T.max_degree())
                continue;
            if (e < 0) {
                comp[v] = Vector();
                continue;
            }
            if (k == 0) {
                comp[v] = P.base[v];
                continue;
            }
            Vector rhs = lift_rhs(P, L, k, v, M);
            const LinearSolver& solver = solvers.at(k, e);
            auto x = solver.solve(rhs);
            if (!x)
                throw LiftError("lift not solvable at position " + std::to_string(k) + ", degree " +
                                std::to_string(e));
            if (P.perturbation_seed)
                for (const Vector& kv : solver.kernel()) {
                    Scalar c(coef(rng), f);
                    for (std::size_t q = 0; q < kv.size(); ++q)
                        (*x)[q] += c * kv[q];
                }
            comp[v] = std::move(*x);
        }
        L.components.push_back(std::move(comp));
    }
    return L;
}

bool check_lift(const LiftProblem& P, const ChainMapLift& L)
{
    const FreeComplex& S = *P.source;
    const FreeComplex& T = *P.target;
    for (int k = 1; k < static_cast<int>(L.components.size()); ++k) {
        AlgMatrix M = S.differential(k + P.offset);
        for (std::size_t v = 0; v < L.components[static_cast<std::size_t>(k)].size(); ++v) {
            if (!L.has(k, v))
                continue;
            int e = M.col_degrees[v] - P.shift;
            if (e < 0)
                continue;
            Vector lhs = T.degree_map(k, e).apply(L.at(k, v));
            if (!(lhs == lift_rhs(P, L, k, v, M)))
                return false;
        }
    }
    return true;
}

}  // namespace skewext
