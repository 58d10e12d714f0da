#include <doctest.h>

#include "helpers.hpp"

using namespace skewext;
using th::q;

namespace {

using Table = std::map<Bidegree, std::size_t>;

struct Case {
    std::string pres, aut;
    int l, N, D;
};

std::vector<Case> suite()
{
    return {{th::kx, "x -> 2*x\n", 1, 4, 6},         {th::kx, "x -> x\n", 1, 4, 6},
            {th::qplane(3), "x -> 2*x\ny -> 5*y\n", 1, 4, 5}, {th::qplane(3), "x -> x\ny -> y\n", 1, 4, 5},
            {th::x3, "x -> 3*x\n", 1, 4, 8},          {th::x3, "x -> x\n", 1, 4, 8},
            {th::qplane(-1), "x -> -1*x\ny -> 2*y\n", 2, 3, 5}, {th::x2, "x -> -1*x\n", 3, 4, 7}};
}

}  // namespace

TEST_SUITE("cone")
{
    TEST_CASE("rho_z is a chain map and the cone resolves k over B")
    {
        for (const auto& c : suite()) {
            CAPTURE(c.pres);
            CAPTURE(c.aut);
            auto S = th::skew(c.pres, c.aut, c.l, c.D);
            Resolution P = minimal_resolution(S.base, c.N, c.D);
            RhoZ rho = build_rho_z(S, P.complex);
            CHECK_FALSE(chain_map_defect(rho.map()));
            ConeResolution C = build_cone_resolution(S, P);
            CHECK_FALSE(dd_defect(C.cone));
            CHECK(is_minimal(C.cone));
            CHECK(verify_exactness(C.cone, true, c.D).exact);
            for (int j = 1; j <= c.N; ++j) {
                CHECK(C.cone.generators(j).size() == C.z_count(j) + P.complex.generators(j).size());
                for (std::size_t k = 0; k < C.z_count(j); ++k) {
                    CHECK(C.is_z_part(j, C.z_index(j, k)));
                    CHECK(C.cone.generators(j)[k] == P.complex.generators(j - 1)[k] + c.l);
                }
                for (std::size_t k = 0; k < P.complex.generators(j).size(); ++k)
                    CHECK_FALSE(C.is_z_part(j, C.a_index(j, k)));
            }
            auto X = cross_validate(C);
            CHECK(X.match());
            CHECK(X.direct_exact);
        }
    }

    TEST_CASE("frozen cone tables")
    {
        auto C = build_cone_resolution(th::skew(th::qplane(3), "x -> 2*x\ny -> 5*y\n", 1, 5), 4, 5);
        CHECK(generator_table(C.cone, 5) == Table{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}});
        auto C3 = build_cone_resolution(th::skew(th::x3, "x -> 3*x\n", 1, 8), 4, 8);
        CHECK(generator_table(C3.cone, 8) == Table{{{0, 0}, 1},
                                                   {{1, 1}, 2},
                                                   {{2, 2}, 1},
                                                   {{2, 3}, 1},
                                                   {{3, 4}, 2},
                                                   {{4, 5}, 1},
                                                   {{4, 6}, 1}});
        auto Cx = build_cone_resolution(th::skew(th::kx, "x -> 2*x\n", 2, 6), 3, 6);
        CHECK(generator_table(Cx.cone, 6) == Table{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}});
    }

    TEST_CASE("negative: a corrupted cone differential breaks exactness")
    {
        auto C = build_cone_resolution(th::skew(th::kx, "x -> 2*x\n", 1, 5), 3, 5);
        std::vector<std::vector<int>> gens;
        std::vector<AlgMatrix> diffs;
        for (int n = 0; n <= C.cone.top(); ++n)
            gens.push_back(C.cone.generators(n));
        for (int n = 1; n <= C.cone.top(); ++n) {
            AlgMatrix d = C.cone.differential(n);
            if (n == 2)
                d.columns[0].clear();
            diffs.push_back(d);
        }
        FreeComplex broken(C.cone.algebra(), 0, gens, diffs, 5);
        CHECK_FALSE(verify_exactness(broken, true, 5).exact);
    }
}
