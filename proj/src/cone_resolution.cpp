#include "skewext/cone_resolution.hpp"

namespace skewext {

RhoZ build_rho_z(const SkewExtension& S, const FreeComplex& P)
{
    RhoZ r;
    r.twisted = induce_up(S.extension, *S.iota_A, P, S.sigma.get(), S.z_degree);
    r.plain = induce_up(S.extension, *S.iota_A, P);
    AlgebraElement z = S.extension->generator(S.z_index);
    for (int n = P.low(); n <= P.top(); ++n) {
        AlgMatrix m(r.plain.generators(n), r.twisted.generators(n));
        for (std::size_t k = 0; k < m.cols(); ++k)
            m.set(k, k, z);
        r.components.emplace(n, std::move(m));
    }
    return r;
}

ConeResolution build_cone_resolution(const SkewExtension& S, int N, int D)
{
    return build_cone_resolution(S, minimal_resolution(S.base, N, D));
}

ConeResolution build_cone_resolution(const SkewExtension& S, const Resolution& P)
{
    ConeResolution C;
    C.ext = S;
    C.base = P;
    C.N = P.N;
    C.D = P.D;
    RhoZ rho = build_rho_z(S, P.complex);
    C.cone = truncate(mapping_cone(rho.map()), 0, P.N);
    return C;
}

CrossValidation cross_validate(const ConeResolution& C)
{
    CrossValidation v;
    v.cone_table = generator_table(C.cone, C.D);
    Resolution direct = minimal_resolution(C.ext.extension, C.N, C.D);
    v.direct_table = direct.table();
    v.direct_exact = verify_exactness(direct.complex, true, C.D).exact;
    for (int n = 0; n <= C.N; ++n)
        for (int d = 0; d <= C.D; ++d) {
            Bidegree b{n, d};
            auto get = [&](const std::map<Bidegree, std::size_t>& t) {
                auto it = t.find(b);
                return it == t.end() ? std::size_t{0} : it->second;
            };
            if (get(v.cone_table) != get(v.direct_table)) {
                v.mismatch = b;
                return v;
            }
        }
    return v;
}

}  // namespace skewext
