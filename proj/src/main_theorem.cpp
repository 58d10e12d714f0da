#include "skewext/main_theorem.hpp"

#include <sstream>

namespace skewext {

std::optional<std::size_t> SkewStudy::z_copy(int n, std::size_t v) const
{
    int t = cone.base.complex.generators(n).at(v);
    if (n + 1 > N || t + l > D)
        return std::nullopt;
    return EB->basis_of(n + 1, cone.z_index(n + 1, v)).second;
}

std::optional<std::size_t> SkewStudy::a_copy(int n, std::size_t v) const
{
    int t = cone.base.complex.generators(n).at(v);
    if (n > N || t > D)
        return std::nullopt;
    return EB->basis_of(n, cone.a_index(n, v)).second;
}

std::unique_ptr<SkewStudy> build_study(const SkewExtension& S, int N, int D)
{
    auto st = std::make_unique<SkewStudy>();
    st->ext = S;
    st->N = N;
    st->D = D;
    st->l = S.z_degree;
    st->cone = build_cone_resolution(S, N, D);
    st->Pz = minimal_resolution(S.polynomial, N, D);
    st->EA = std::make_unique<ExtAlgebra>(st->cone.base.complex, N, D);
    st->Ez = std::make_unique<ExtAlgebra>(st->Pz.complex, N, D);
    st->EB = std::make_unique<ExtAlgebra>(st->cone.cone, N, D);
    st->pi_A = ext_functor_map(*S.pi_A, *st->EB, *st->EA);
    st->pi_z = ext_functor_map(*S.pi_z, *st->EB, *st->Ez);
    st->iota_A = ext_functor_map(*S.iota_A, *st->EA, *st->EB);
    st->iota_z = ext_functor_map(*S.iota_z, *st->Ez, *st->EB);
    st->tau = compute_tau(*st->EA, *S.sigma);
    return st;
}

bool MainTheoremReport::all_passed() const
{
    if (inconclusive)
        return false;
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    for (const auto& c : extras)
        if (!c.passed)
            return false;
    return true;
}

bool twists_equal(const SmashTwist& a, const SmashTwist& b)
{
    if (a.values.size() != b.values.size())
        return false;
    for (const auto& [k, v] : a.values) {
        auto it = b.values.find(k);
        if (it == b.values.end() || !tensor_equal(v, it->second))
            return false;
    }
    return true;
}

namespace {

bool maps_equal(const BigradedMap& a, const BigradedMap& b)
{
    if (a.blocks.size() != b.blocks.size())
        return false;
    for (const auto& [k, m] : a.blocks) {
        auto it = b.blocks.find(k);
        if (it == b.blocks.end() || !(it->second == m))
            return false;
    }
    return true;
}

std::optional<std::string> identity_defect(const BigradedMap& m, const BigradedAlgebra& E)
{
    for (const auto& b : E.support()) {
        if (!E.in_window(b))
            continue;
        auto it = m.blocks.find(b);
        if (it == m.blocks.end() || !(it->second == Matrix::identity(E.dim(b), E.field())))
            return "at " + to_string(b);
    }
    return std::nullopt;
}

BiElement image(const BigradedMap& m, const Bidegree& b, std::size_t k)
{
    return {b, m.block(b).column(k)};
}

// m(x (x) y) = fX(x) fY(y) in C
BiElement smash_image(const BigradedAlgebra& C, const BigradedMap& fX, const BigradedMap& fY, const TensorElement& x,
                      const Bidegree& c)
{
    BiElement acc = C.zero(c);
    for (const auto& [k, s] : x) {
        auto p = C.multiply(image(fX, k.left, k.i), image(fY, k.right, k.j));
        for (std::size_t q = 0; q < p.coords.size(); ++q)
            acc.coords[q] += s * p.coords[q];
    }
    return acc;
}

TensorElement apply_twist(const SmashTwist& R, const TensorElement& x)
{
    TensorElement out;
    for (const auto& [k, c] : x)
        for (const auto& [k2, c2] : R.R(k))
            add_to(out, k2, c * c2);
    return out;
}

}  // namespace

MainTheoremReport verify_main_theorem(const SkewStudy& st, std::optional<std::uint64_t> seed)
{
    MainTheoremReport rep;
    const int N = st.N, D = st.D, l = st.l;
    if (N < 2 || D < l + 1) {
        rep.inconclusive = true;
        rep.inconclusive_reason = "window (" + std::to_string(N) + "," + std::to_string(D) +
                                  ") too small: need N >= 2 and D >= l + 1";
        return rep;
    }
    const BigradedAlgebra& EA = st.EA->table();
    const BigradedAlgebra& Ez = st.Ez->table();
    const BigradedAlgebra& EB = st.EB->table();
    const Field f = EA.field();
    const FreeComplex& P = st.cone.base.complex;
    const Bidegree xi_deg{1, l};
    const BiElement xi_B = image(st.pi_z, xi_deg, 0);

    // (i)
    {
        CheckResult c{"E(pi_A), E(pi_z) injective", true, ""};
        auto inj = [&](const BigradedMap& m, const BigradedAlgebra& E, const char* nm) {
            for (const auto& b : E.support())
                if (rank(m.block(b)) != E.dim(b)) {
                    c.passed = false;
                    c.detail = std::string(nm) + " not injective at " + to_string(b);
                    return;
                }
        };
        inj(st.pi_A, EA, "E(pi_A)");
        if (c.passed)
            inj(st.pi_z, Ez, "E(pi_z)");
        rep.checks.push_back(c);
    }
    // (ii)
    {
        CheckResult c{"E(pi_A)(f) = f on the A-part", true, ""};
        for (const auto& b : EA.support()) {
            for (std::size_t i = 0; i < EA.dim(b) && c.passed; ++i) {
                std::size_t v = st.EA->generator_of(b, i);
                BiElement want = EB.basis_element(b, *st.a_copy(b.n, v));
                if (!(image(st.pi_A, b, i).coords == want.coords)) {
                    c.passed = false;
                    c.detail = "mismatch on " + BigradedAlgebra::label(b, i);
                }
            }
        }
        rep.checks.push_back(c);
    }
    // (iii), (iv)
    {
        CheckResult c3{"xi * f = (-1)^i f on the z-part", true, ""};
        CheckResult c4{"f * xi = tau(f) on the z-part", true, ""};
        for (const auto& b : EA.support()) {
            Bidegree zb = b + xi_deg;
            if (!EB.in_window(zb))
                continue;
            for (std::size_t i = 0; i < EA.dim(b); ++i) {
                BiElement fB = image(st.pi_A, b, i);
                BiElement want3 = EB.zero(zb);
                std::size_t v = st.EA->generator_of(b, i);
                want3.coords[*st.z_copy(b.n, v)] = Scalar(b.n % 2 == 0 ? 1 : -1, f);
                if (c3.passed && !(EB.multiply(xi_B, fB).coords == want3.coords)) {
                    c3.passed = false;
                    c3.detail = "fails on " + BigradedAlgebra::label(b, i) + ": got " +
                                EB.element_str(EB.multiply(xi_B, fB));
                }
                BiElement want4 = EB.zero(zb);
                Vector tf = st.tau.block(b).column(i);
                for (std::size_t k = 0; k < tf.size(); ++k)
                    want4.coords[*st.z_copy(b.n, st.EA->generator_of(b, k))] += tf[k];
                if (c4.passed && !(EB.multiply(fB, xi_B).coords == want4.coords)) {
                    c4.passed = false;
                    c4.detail = "fails on " + BigradedAlgebra::label(b, i) + ": got " +
                                EB.element_str(EB.multiply(fB, xi_B));
                }
            }
        }
        rep.checks.push_back(c3);
        rep.checks.push_back(c4);
    }
    // (v)
    auto EAp = st.EA->table_ptr();
    auto Ezp = st.Ez->table_ptr();
    {
        CheckResult c{"m_1, m_2 bijective", true, ""};
        try {
            SmashTwist probe1;
            probe1.X = Ezp;
            probe1.Y = EAp;
            SmashTwist probe2;
            probe2.X = EAp;
            probe2.Y = Ezp;
            for (int n = 0; n <= N && c.passed; ++n)
                for (int t = 0; t <= D && c.passed; ++t) {
                    Bidegree b{n, t};
                    Matrix m1 = combined_multiplication(EB, Ez, st.pi_z, EA, st.pi_A, probe1.basis(b), b);
                    Matrix m2 = combined_multiplication(EB, EA, st.pi_A, Ez, st.pi_z, probe2.basis(b), b);
                    for (const Matrix* m : {&m1, &m2})
                        if (m->rows() != m->cols() || rank(*m) != m->cols()) {
                            c.passed = false;
                            c.detail = std::string(m == &m1 ? "m_1" : "m_2") + " not bijective at " + to_string(b);
                        }
                }
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        rep.checks.push_back(c);
    }
    // (vi)
    rep.RE = build_RE(st.tau, EAp, Ezp, l);
    {
        CheckResult c{"E(B) product table = E(k[z]) #_{R_E} E(A)", true, ""};
        certify_smash(rep.RE, N, D);
        if (rep.RE.status != SmashStatus::certified) {
            c.passed = false;
            c.detail = "R_E smash product not certified: " + rep.RE.counterexample;
        }
        auto table_matches = [&](const BigradedAlgebra& C) -> std::optional<std::string> {
            std::vector<TensorKey> all;
            for (int n = 0; n <= N; ++n)
                for (int t = 0; t <= D; ++t)
                    for (const auto& k : rep.RE.basis({n, t}))
                        all.push_back(k);
            const Scalar one = Scalar::one(f);
            for (const auto& p : all)
                for (const auto& q : all) {
                    Bidegree c2 = p.degree() + q.degree();
                    if (!C.in_window(c2))
                        continue;
                    auto lhs = smash_image(C, st.pi_z, st.pi_A, smash_multiply(rep.RE, p, q), c2);
                    auto rhs = C.multiply(smash_image(C, st.pi_z, st.pi_A, {{p, one}}, p.degree()),
                                          smash_image(C, st.pi_z, st.pi_A, {{q, one}}, q.degree()));
                    if (!(lhs.coords == rhs.coords))
                        return tensor_str({{p, one}}) + " * " + tensor_str({{q, one}});
                }
            return std::nullopt;
        };
        if (c.passed) {
            if (auto bad = table_matches(EB)) {
                BigradedAlgebra op = EB.opposite();
                if (auto bad2 = table_matches(op)) {
                    c.passed = false;
                    c.detail = "mismatch on " + *bad;
                } else {
                    rep.orientation = "opposite";
                }
            } else {
                rep.orientation = "direct";
            }
        }
        rep.checks.push_back(c);
    }

    // extras
    auto extra = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.extras.push_back({name, ok, ok ? "" : detail});
    };
    {
        auto ex = verify_exactness(st.cone.cone, true, D);
        bool dd = !dd_defect(st.cone.cone);
        bool mn = is_minimal(st.cone.cone);
        extra("cone is a minimal resolution of k", ex.exact && dd && mn,
              std::string(ex.exact ? "" : "not exact; ") + (dd ? "" : "d o d != 0; ") + (mn ? "" : "not minimal"));
    }
    {
        auto cv = cross_validate(st.cone);
        extra("cone table = direct resolution of B", cv.match() && cv.direct_exact,
              cv.mismatch ? "mismatch at " + to_string(*cv.mismatch) : "direct resolution not exact");
    }
    try {
        const BigradedAlgebra& C = rep.orientation == "opposite" ? EB.opposite() : EB;
        SmashTwist Rf = twist_from_factorization(C, Ezp, st.pi_z, EAp, st.pi_A);
        extra("factorization twist = R_E formula", twists_equal(Rf, rep.RE), "twists differ");
        SmashTwist R2 = twist_from_factorization(C, EAp, st.pi_A, Ezp, st.pi_z);
        certify_smash(R2, N, D);
        bool inverse = R2.status == SmashStatus::certified;
        std::string why = inverse ? "" : "inverse twist not certified: " + R2.counterexample;
        for (const auto& [k, v] : rep.RE.values) {
            if (!inverse)
                break;
            if (!tensor_equal(apply_twist(R2, v), {{k, Scalar::one(f)}}))
                inverse = false, why = "R_E^{-1} R_E != id";
        }
        for (const auto& [k, v] : R2.values) {
            if (!inverse)
                break;
            if (!tensor_equal(apply_twist(rep.RE, v), {{k, Scalar::one(f)}}))
                inverse = false, why = "R_E R_E^{-1} != id";
        }
        extra("E(A) #_{R_E^{-1}} E(k[z]) with inverse twist", inverse, why);
    } catch (const std::exception& e) {
        extra("factorization twist = R_E formula", false, e.what());
    }
    {
        bool ok = true;
        std::string why;
        for (const auto& a : EA.support())
            for (const auto& b : EA.support()) {
                if (!ok || !EA.has_product(a, b))
                    continue;
                for (std::size_t i = 0; i < EA.dim(a) && ok; ++i)
                    for (std::size_t j = 0; j < EA.dim(b) && ok; ++j) {
                        auto lhs = st.tau.apply(EA.multiply(EA.basis_element(a, i), EA.basis_element(b, j)));
                        auto rhs = EA.multiply(st.tau.apply(EA.basis_element(a, i)), st.tau.apply(EA.basis_element(b, j)));
                        if (!(lhs.coords == rhs.coords))
                            ok = false, why = BigradedAlgebra::label(a, i) + " " + BigradedAlgebra::label(b, j);
                    }
            }
        for (const auto& b : EA.support())
            if (rank(st.tau.block(b)) != EA.dim(b))
                ok = false, why = "not invertible at " + to_string(b);
        extra("tau is a bigraded algebra automorphism", ok, why);
    }
    {
        BigradedMap tinv = compute_tau(*st.EA, *st.ext.sigma->inverse());
        auto d = identity_defect(compose(tinv, st.tau), EA);
        extra("tau for sigma^{-1} inverts tau", !d, d.value_or(""));
    }
    {
        ExtAlgebra EB2(st.cone.cone, N, D, {true, seed});
        ExtAlgebra EA2(P, N, D, {true, seed ? std::optional<std::uint64_t>(*seed + 1) : std::nullopt});
        bool tables = EB2.table() == EB && EA2.table() == EA;
        bool tau2 = maps_equal(compute_tau(*st.EA, *st.ext.sigma, seed), st.tau);
        bool pi2 = maps_equal(ext_functor_map(*st.ext.pi_A, *st.EB, *st.EA, seed), st.pi_A);
        extra("independent lifts give identical results", tables && tau2 && pi2,
              std::string(tables ? "" : "products differ; ") + (tau2 ? "" : "tau differs; ") +
                  (pi2 ? "" : "E(pi_A) differs"));
    }
    {
        auto d1 = identity_defect(compose(st.iota_A, st.pi_A), EA);
        auto d2 = identity_defect(compose(st.iota_z, st.pi_z), Ez);
        extra("E(iota_A) E(pi_A) = id and E(iota_z) E(pi_z) = id", !d1 && !d2,
              d1 ? "E(A) " + *d1 : "E(k[z]) " + d2.value_or(""));
    }
    {
        auto GA = std::make_shared<BigradedAlgebra>(from_graded(*st.ext.base));
        auto Gz = std::make_shared<BigradedAlgebra>(from_graded(*st.ext.polynomial));
        SmashTwist T = skew_twist(st.ext, GA, Gz);
        certify_smash(T, 0, st.ext.base->max_degree());
        auto bad = T.status == SmashStatus::certified ? check_skew_twist_against_extension(T, st.ext)
                                                      : std::optional<std::string>(T.counterexample);
        extra("A #_R k[z] = A[z; sigma]", !bad, bad.value_or(""));
    }
    {
        auto bad = EB.associativity_counterexample();
        extra("E(B) associative with unit", !bad && EB.unit_laws_hold(), bad.value_or("unit law"));
    }
    return rep;
}

}  // namespace skewext
