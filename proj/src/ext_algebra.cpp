#include "skewext/ext_algebra.hpp"

namespace skewext {

ExtAlgebra::ExtAlgebra(const FreeComplex& resolution, int N, int D, ExtOptions opt)
    : P_(&resolution), N_(N), D_(D), products_(opt.products)
{
    const Field f = resolution.algebra()->field();
    E_ = std::make_shared<BigradedAlgebra>(f, N, D);
    solvers_ = std::make_shared<ComplexSolvers>(resolution);
    for (int n = 0; n <= N; ++n) {
        const auto& g = resolution.generators(n);
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g[v] >= 0 && g[v] <= D)
                gens_[{n, g[v]}].push_back(v);
    }
    for (const auto& [b, list] : gens_)
        E_->set_dim(b, list.size());
    if (!products_)
        return;
    for (const auto& [fb, flist] : gens_) {
        for (std::size_t i = 0; i < flist.size(); ++i) {
            ChainMapLift L = lift_cocycle(E_->basis_element(fb, i), opt.perturbation_seed);
            for (const auto& [gb, glist] : gens_) {
                Bidegree c = gb + fb;
                if (!E_->in_window(c))
                    continue;
                auto it = gens_.find(c);
                std::size_t dc = it == gens_.end() ? 0 : it->second.size();
                for (std::size_t j = 0; j < glist.size(); ++j) {
                    Vector prod = zero_vector(dc, f);
                    for (std::size_t q = 0; q < dc; ++q) {
                        std::size_t v = it->second[q];
                        Vector r = L.readout(gb.n, v, c.t);
                        // r is over the degree-s generators of V_m, i.e. the basis of gb
                        prod[q] = r[j];
                    }
                    if (dc > 0)
                        E_->set_product(gb, j, fb, i, std::move(prod));
                }
            }
        }
    }
}

std::size_t ExtAlgebra::generator_of(const Bidegree& b, std::size_t k) const
{
    return gens_.at(b).at(k);
}

std::pair<Bidegree, std::size_t> ExtAlgebra::basis_of(int n, std::size_t v) const
{
    int t = P_->generators(n).at(v);
    const auto& list = gens_.at({n, t});
    for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k] == v)
            return {{n, t}, k};
    throw std::out_of_range("generator outside Ext window");
}

ChainMapLift ExtAlgebra::lift_cocycle(const ExtClass& f, std::optional<std::uint64_t> seed) const
{
    const Field fld = P_->algebra()->field();
    LiftProblem lp;
    lp.source = P_;
    lp.target = P_;
    lp.offset = f.degree.n;
    lp.shift = f.degree.t;
    lp.sign = f.degree.n % 2 == 0 ? 1 : -1;
    lp.max_position = N_ - f.degree.n;
    lp.max_degree = D_;
    lp.perturbation_seed = seed;
    const auto& g = P_->generators(f.degree.n);
    auto it = gens_.find(f.degree);
    for (std::size_t v = 0; v < g.size(); ++v) {
        int e = g[v] - f.degree.t;
        if (g[v] > D_ || e > P_->max_degree()) {
            lp.base.emplace_back();
            continue;
        }
        DegreeLayout L(*P_->algebra(), P_->generators(0), e);
        Vector x = zero_vector(L.size(), fld);
        if (e == 0 && it != gens_.end())
            for (std::size_t k = 0; k < it->second.size(); ++k)
                if (it->second[k] == v)
                    x[0] = f.coords[k];
        lp.base.push_back(std::move(x));
    }
    return lift_chain_map(lp, *solvers_);
}

ExtClass ExtAlgebra::yoneda_multiply(const ExtClass& g, const ExtClass& f) const
{
    Bidegree c = g.degree + f.degree;
    if (!E_->in_window(c))
        throw TruncationError("product lands outside the Ext window at " + to_string(c));
    ChainMapLift L = lift_cocycle(f);
    ExtClass out = E_->zero(c);
    auto it = gens_.find(c);
    if (it == gens_.end())
        return out;
    for (std::size_t q = 0; q < it->second.size(); ++q) {
        Vector r = L.readout(g.degree.n, it->second[q], c.t);
        Scalar s = Scalar::zero(E_->field());
        for (std::size_t j = 0; j < g.coords.size(); ++j)
            s += g.coords[j] * r[j];
        out.coords[q] = s;
    }
    return out;
}

BigradedAlgebra ext_table(const FreeComplex& resolution, int N, int D)
{
    return ExtAlgebra(resolution, N, D, {false, std::nullopt}).table();
}

namespace {

// Block (n, t): entry [v][w] = coefficient of w in the readout of L_n(v).
BigradedMap readout_map(const ExtAlgebra& S, const ExtAlgebra& T, const ChainMapLift& L)
{
    BigradedMap m;
    const Field f = S.table().field();
    const int N = std::min(S.N(), T.N()), D = std::min(S.D(), T.D());
    for (int n = 0; n <= N; ++n)
        for (int t = 0; t <= D; ++t) {
            Bidegree b{n, t};
            std::size_t rows = S.table().dim(b), cols = T.table().dim(b);
            if (rows == 0 && cols == 0)
                continue;
            Matrix M(rows, cols, f);
            for (std::size_t r = 0; r < rows; ++r) {
                Vector x = L.readout(n, S.generator_of(b, r), t);
                for (std::size_t c = 0; c < cols; ++c)
                    M.set(r, c, x[c]);
            }
            m.blocks.emplace(b, std::move(M));
        }
    return m;
}

Vector unit_base(const FreeComplex& T)
{
    DegreeLayout L(*T.algebra(), T.generators(0), 0);
    Vector x = zero_vector(L.size(), T.algebra()->field());
    x[0] = Scalar::one(T.algebra()->field());
    return x;
}

}  // namespace

BigradedMap ext_functor_map(const GradedMorphism& phi, const ExtAlgebra& EA, const ExtAlgebra& EA2,
                            std::optional<std::uint64_t> seed)
{
    if (phi.source().get() != EA.resolution().algebra().get() || phi.target().get() != EA2.resolution().algebra().get())
        throw std::invalid_argument("ext_functor_map: resolutions do not match the morphism");
    LiftProblem lp;
    lp.source = &EA.resolution();
    lp.target = &EA2.resolution();
    lp.phi = &phi;
    lp.max_position = std::min(EA.N(), EA2.N());
    lp.max_degree = std::min(EA.D(), EA2.D());
    lp.perturbation_seed = seed;
    lp.base.push_back(unit_base(EA2.resolution()));
    ChainMapLift L = lift_chain_map(lp, EA2.solvers());
    return readout_map(EA, EA2, L);
}

ExtClass xi_class(const ExtAlgebra& Ez, int l)
{
    return Ez.table().basis_element({1, l}, 0);
}

BigradedMap compute_tau(const ExtAlgebra& EA, const GradedMorphism& sigma, std::optional<std::uint64_t> seed)
{
    const FreeComplex& P = EA.resolution();
    // entries sigma(M): the twist by sigma^{-1}
    FreeComplex twisted = twist_complex(P, *sigma.inverse());
    LiftProblem lp;
    lp.source = &twisted;
    lp.target = &P;
    lp.max_position = EA.N();
    lp.max_degree = EA.D();
    lp.perturbation_seed = seed;
    lp.base.push_back(unit_base(P));
    ChainMapLift L = lift_chain_map(lp, EA.solvers());
    return readout_map(EA, EA, L);
}

SmashTwist build_RE(const BigradedMap& tau, const BigradedPtr& EA, const BigradedPtr& Ez, int l)
{
    SmashTwist T;
    T.X = Ez;
    T.Y = EA;
    const Field fld = EA->field();
    const Bidegree o{0, 0}, xi{1, l};
    for (const auto& fb : EA->support()) {
        for (std::size_t i = 0; i < EA->dim(fb); ++i) {
            if (EA->in_window(fb))
                T.values[{fb, i, o, 0}] = TensorElement{{{o, 0, fb, i}, Scalar::one(fld)}};
            if (!EA->in_window(fb + xi) || Ez->dim(xi) == 0)
                continue;
            Vector tf = tau.block(fb).column(i);
            Scalar sign(fb.n % 2 == 0 ? 1 : -1, fld);
            TensorElement r;
            for (std::size_t k = 0; k < tf.size(); ++k)
                add_to(r, {xi, 0, fb, k}, sign * tf[k]);
            T.values[{fb, i, xi, 0}] = std::move(r);
        }
    }
    return T;
}

}  // namespace skewext
