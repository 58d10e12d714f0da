#include <doctest.h>

#include "helpers.hpp"

using namespace skewext;
using th::q;

namespace {

using Table = std::map<Bidegree, std::size_t>;

// 0 <- A <- A(-1) <- ... with every differential x, positions 0..len
FreeComplex x_chain(const AlgebraPtr& A, int len, int step = 1)
{
    std::vector<std::vector<int>> gens;
    std::vector<AlgMatrix> diffs;
    for (int n = 0; n <= len; ++n)
        gens.push_back({n * step});
    for (int n = 1; n <= len; ++n) {
        AlgMatrix d({(n - 1) * step}, {n * step});
        d.set(0, 0, A->element(power(NCPoly::generator(0), static_cast<unsigned>(step)), step));
        diffs.push_back(d);
    }
    return FreeComplex(A, 0, gens, diffs, A->max_degree());
}

}  // namespace

TEST_SUITE("complexes")
{
    TEST_CASE("Koszul complex of k[x] is exact")
    {
        auto A = th::algebra(th::kx, 6);
        FreeComplex K = x_chain(A, 1);
        CHECK_FALSE(dd_defect(K));
        CHECK(is_minimal(K));
        auto rep = verify_exactness(K, true, 6);
        CHECK(rep.exact);
        CHECK(rep.homology.at({0, 0}) == 1);
        CHECK(K.degree_map(1, 3).rows() == 1);
        CHECK(K.count(1, 1) == 1);
        CHECK(K.count(1, 2) == 0);
    }

    TEST_CASE("negative: squaring differential is detected")
    {
        auto A = th::algebra(th::kx, 6);
        FreeComplex K = x_chain(A, 2);
        CHECK(dd_defect(K) == 2);
        CHECK_THROWS(mapping_cone(ComplexMap{&K, &K, {}}));
    }

    TEST_CASE("the periodic resolution of k[x]/(x^2) and a broken copy")
    {
        auto A = th::algebra(th::x2, 6);
        FreeComplex K = x_chain(A, 5);
        CHECK_FALSE(dd_defect(K));
        CHECK(verify_exactness(K, true, 6).exact);
        // drop the entry of d_3
        std::vector<std::vector<int>> gens;
        std::vector<AlgMatrix> diffs;
        for (int n = 0; n <= 5; ++n)
            gens.push_back(K.generators(n));
        for (int n = 1; n <= 5; ++n)
            diffs.push_back(n == 3 ? AlgMatrix(K.generators(2), K.generators(3)) : K.differential(n));
        FreeComplex broken(A, 0, gens, diffs, 6);
        CHECK_FALSE(dd_defect(broken));
        auto rep = verify_exactness(broken, true, 6);
        CHECK_FALSE(rep.exact);
        CHECK(rep.homology.at({2, 3}) == 1);
        CHECK(rep.homology.at({3, 3}) == 1);
    }

    TEST_CASE("shifts")
    {
        auto A = th::algebra(th::kx, 4);
        FreeComplex K = x_chain(A, 1);
        FreeComplex S = shift_complex(K, 1);
        CHECK(S.low() == -1);
        CHECK(S.top() == 0);
        CHECK(S.differential(0).entry(0, 0)->coords == Vector{q(-1)});
        FreeComplex S2 = shift_complex(K, 2);
        CHECK(S2.differential(-1).entry(0, 0)->coords == Vector{q(1)});
        FreeComplex I = internal_shift(K, -2);
        CHECK(I.generators(1) == std::vector<int>{3});
        CHECK_FALSE(dd_defect(I));
    }

    TEST_CASE("cone of the identity is acyclic")
    {
        auto A = th::algebra(th::qplane(2), 5);
        Resolution P = minimal_resolution(A, 3, 5);
        ComplexMap id{&P.complex, &P.complex, {}};
        for (int n = 0; n <= P.complex.top(); ++n) {
            const auto& g = P.complex.generators(n);
            AlgMatrix m(g, g);
            for (std::size_t i = 0; i < g.size(); ++i)
                m.set(i, i, A->one());
            id.components[n] = m;
        }
        CHECK_FALSE(chain_map_defect(id));
        FreeComplex C = mapping_cone(id);
        CHECK_FALSE(dd_defect(C));
        CHECK(C.generators(1).size() == 1 + 2);
        auto rep = verify_exactness(truncate(C, 0, 3), false, 5);
        for (const auto& [k, v] : rep.homology)
            if (k.first >= 1)
                CHECK(v == 0);
    }

    TEST_CASE("negative: a non-chain map is rejected")
    {
        auto A = th::algebra(th::kx, 4);
        FreeComplex K = x_chain(A, 1);
        ComplexMap f{&K, &K, {}};
        AlgMatrix m0({0}, {0}), m1({1}, {1});
        m0.set(0, 0, A->one());
        m1.set(0, 0, A->element(parse_expression("2", A->presentation()), 0));
        f.components[0] = m0;
        f.components[1] = m1;
        CHECK(chain_map_defect(f));
        CHECK_THROWS_AS(mapping_cone(f), NotAChainMap);
    }

    TEST_CASE("twist and induction")
    {
        auto A = th::algebra(th::kx, 5);
        auto s = th::automorphism(A, "x -> 3*x\n");
        FreeComplex K = x_chain(A, 1);
        FreeComplex T = twist_complex(K, *s);
        // entries become sigma^{-1}(x) = x/3
        CHECK(T.differential(1).entry(0, 0)->coords == Vector{q(1, 3)});
        auto S = th::skew(th::kx, "x -> 3*x\n", 1, 5);
        FreeComplex U = induce_up(S.extension, *S.iota_A, K, S.sigma.get(), 1);
        CHECK(U.generators(1) == std::vector<int>{2});
        CHECK_FALSE(dd_defect(U));
        AlgMatrix d1 = U.differential(1);
        const AlgebraElement* e = d1.entry(0, 0);
        REQUIRE(e);
        CHECK(S.extension->to_poly(*e) == S.extension->normal_form(parse_expression("3*x", S.extension->presentation())).value);
    }

    TEST_CASE("AlgMatrix composition and degree checks")
    {
        auto A = th::algebra(th::qplane(2), 4);
        AlgMatrix M({0}, {1, 1});
        M.set(0, 0, A->generator(0));
        M.set(0, 1, A->generator(1));
        CHECK_THROWS(M.set(0, 0, A->one()));
        AlgMatrix N({1, 1}, {2});
        N.set(0, 0, A->generator(1));
        N.set(1, 0, A->element(parse_expression("-2*x", A->presentation()), 1));
        AlgMatrix MN = compose(*A, M, N);
        // y*x - 2 x*y = 0 in the quantum plane with p = 2
        CHECK(MN.is_zero());
        CHECK(equal(scale(M, q(1)), M));
        CHECK_FALSE(equal(scale(M, q(2)), M));
        CHECK(degree_matrix(*A, M, 2).rows() == 3);
        CHECK(degree_matrix(*A, M, 2).cols() == 4);
    }

    TEST_CASE("minimal resolutions: frozen generator tables")
    {
        CHECK(minimal_resolution(th::algebra(th::kx, 6), 4, 6).table() == Table{{{0, 0}, 1}, {{1, 1}, 1}});
        CHECK(minimal_resolution(th::algebra(th::qplane(3), 6), 4, 6).table() ==
              Table{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
        CHECK(minimal_resolution(th::algebra(th::x3, 8), 5, 8).table() ==
              Table{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{4, 6}, 1}, {{5, 7}, 1}});
        CHECK(minimal_resolution(th::algebra(th::x2, 5), 5, 5).table() ==
              Table{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}, {{4, 4}, 1}, {{5, 5}, 1}});
        CHECK(minimal_resolution(th::algebra(th::free2, 5), 4, 5).table() == Table{{{0, 0}, 1}, {{1, 1}, 2}});
        // exterior algebra: Ext is polynomial on two classes
        CHECK(minimal_resolution(th::algebra("field Q\ngens x:1 y:1\nrels x^2, y^2, x*y + y*x\n", 4), 3, 4)
                  .table() == Table{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 3}, {{3, 3}, 4}});
        // k<x,y>/(xy)
        CHECK(minimal_resolution(th::algebra("field Q\ngens x:1 y:1\nrel x*y\n", 5), 3, 5).table() ==
              Table{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
    }

    TEST_CASE("resolution invariants")
    {
        for (std::string t : {th::qplane(-1), std::string(th::x3), std::string(th::free2),
                              std::string("field F3\ngens a:1 b:2\nrels a*b - b*a, a^3\n")}) {
            auto A = th::algebra(t, 6);
            Resolution R = minimal_resolution(A, 4, 6);
            CHECK_FALSE(dd_defect(R.complex));
            CHECK(is_minimal(R.complex));
            CHECK(verify_exactness(R.complex, true, 6).exact);
            CHECK(euler_identity(R));
        }
        CHECK_THROWS_AS(minimal_resolution(th::algebra(th::kx, 4), 2, 5), TruncationError);
    }

    TEST_CASE("series helpers")
    {
        CHECK(series_product({1, -1}, {1, 1, 1, 1}, 3) == std::vector<long>{1, 0, 0, 0});
        auto R = minimal_resolution(th::algebra(th::qplane(2), 4), 3, 4);
        CHECK(signed_generator_series(R.complex, 4) == std::vector<long>{1, -2, 1, 0, 0});
    }
}
