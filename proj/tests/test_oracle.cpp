#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace skewext;
using th::q;

namespace {

std::map<std::pair<int, int>, long> as_tor(const std::map<Bidegree, std::size_t>& t)
{
    std::map<std::pair<int, int>, long> out;
    for (const auto& [b, v] : t)
        if (v)
            out[{b.n, b.t}] = static_cast<long>(v);
    return out;
}

std::map<std::pair<int, int>, long> ext_dims(const BigradedAlgebra& E)
{
    std::map<std::pair<int, int>, long> out;
    for (const auto& b : E.support())
        out[{b.n, b.t}] = static_cast<long>(E.dim(b));
    return out;
}

// frozen expectations derived by hand
using T = std::map<std::pair<int, int>, long>;

}  // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("oracle reproduces hand-derived tables")
    {
        CHECK(oracle::tor_table(oracle::truncated_poly(0, 5), 5) == T{{{0, 0}, 1}, {{1, 1}, 1}});
        CHECK(oracle::tor_table(oracle::truncated_poly(3, 8), 4) ==
              T{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{4, 6}, 1}});
        CHECK(oracle::tor_table(oracle::truncated_poly(2, 4), 4) ==
              T{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}, {{4, 4}, 1}});
        CHECK(oracle::tor_table(oracle::skew_plane(3, 0, 1, 4), 4) == T{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
    }

    TEST_CASE("resolutions of A agree with the bar complex")
    {
        struct C {
            std::string pres;
            oracle::Algebra o;
            int N, D;
        };
        std::vector<C> cases{{th::kx, oracle::truncated_poly(0, 6), 4, 6},
                             {th::x2, oracle::truncated_poly(2, 6), 5, 6},
                             {th::x3, oracle::truncated_poly(3, 8), 5, 8},
                             {th::qplane(2), oracle::skew_plane(2, 0, 1, 5), 4, 5},
                             {th::qplane(-1), oracle::skew_plane(-1, 0, 1, 5), 4, 5},
                             {"field Q\ngens x:1\nrel x^4\n", oracle::truncated_poly(4, 8), 4, 8}};
        for (auto& c : cases) {
            CAPTURE(c.pres);
            auto R = minimal_resolution(th::algebra(c.pres, c.D), c.N, c.D);
            CHECK(as_tor(R.table()) == oracle::tor_table(c.o, c.N));
        }
    }

    TEST_CASE("cone resolutions of B agree with the bar complex of B")
    {
        struct C {
            std::string pres, aut;
            int l;
            mpq_class c;
            int m, N, D;
        };
        std::vector<C> cases{{th::kx, "x -> 2*x\n", 1, 2, 0, 3, 5},
                             {th::kx, "x -> -1*x\n", 2, -1, 0, 3, 6},
                             {th::x3, "x -> 3*x\n", 1, 3, 3, 4, 7},
                             {th::x3, "x -> x\n", 1, 1, 3, 4, 7},
                             {th::x2, "x -> -1*x\n", 3, -1, 2, 4, 7}};
        for (auto& c : cases) {
            CAPTURE(c.pres);
            CAPTURE(c.aut);
            auto S = th::skew(c.pres, c.aut, c.l, c.D);
            auto C = build_cone_resolution(S, c.N, c.D);
            // B = k<x, z>/(x^m, z x - c x z) with z of degree l
            auto o = oracle::skew_plane(c.c, c.m, c.l, c.D);
            CHECK(as_tor(generator_table(C.cone, c.D)) == oracle::tor_table(o, c.N));
            auto st = build_study(S, c.N, c.D);
            CHECK(ext_dims(st->EB->table()) == oracle::tor_table(o, c.N));
        }
    }

    TEST_CASE("frozen: quantum plane E(B) and E(A)")
    {
        for (long p : {2L, 3L, -1L}) {
            CAPTURE(p);
            auto S = th::skew(th::kx, "x -> " + std::to_string(p) + "*x\n", 1, 3);
            auto st = build_study(S, 3, 3);
            CHECK(ext_dims(st->EB->table()) == T{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
            CHECK(st->tau.block({1, 1}) == Matrix::from_rows({{q(p)}}, 1));
            const auto& E = st->EB->table();
            auto v = E.basis_element({1, 1}, *st->z_copy(0, 0));
            auto u = E.basis_element({1, 1}, *st->a_copy(1, 0));
            CHECK(E.multiply(u, u).is_zero());
            CHECK(E.multiply(v, v).is_zero());
            Scalar uv = E.multiply(u, v).coords[0], vu = E.multiply(v, u).coords[0];
            CHECK_FALSE(uv.is_zero());
            CHECK((uv + q(p) * vu).is_zero());
        }
    }

    TEST_CASE("frozen: k[x]/(x^3) with sigma = 3x")
    {
        auto st = build_study(th::skew(th::x3, "x -> 3*x\n", 1, 8), 4, 8);
        CHECK(ext_dims(st->EB->table()) ==
              T{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 2}, {{4, 5}, 1}, {{4, 6}, 1}});
        // tau scales E^n by 3^t
        CHECK(st->tau.block({1, 1}).at(0, 0) == q(3));
        CHECK(st->tau.block({2, 3}).at(0, 0) == q(27));
        CHECK(st->tau.block({3, 4}).at(0, 0) == q(81));
    }
}
