#include <doctest.h>

#include "helpers.hpp"

using namespace skewext;
using th::q;

namespace {

std::vector<std::size_t> hilb(const std::string& t, int D)
{
    return th::algebra(t, D)->hilbert();
}

using H = std::vector<std::size_t>;

}  // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("Hilbert functions of small algebras")
    {
        CHECK(hilb(th::kx, 5) == H{1, 1, 1, 1, 1, 1});
        CHECK(hilb(th::x3, 5) == H{1, 1, 1, 0, 0, 0});
        CHECK(hilb(th::free2, 4) == H{1, 2, 4, 8, 16});
        CHECK(hilb(th::qplane(2), 5) == H{1, 2, 3, 4, 5, 6});
        CHECK(hilb("field Q\ngens x:1 y:1\nrels x*y - y*x, x^2\n", 4) == H{1, 2, 2, 2, 2});
        CHECK(hilb("field Q\ngens a:1 b:2\nrel a*b - b*a\n", 6) == H{1, 1, 2, 2, 3, 3, 4});
        // exterior algebra on two generators
        CHECK(hilb("field Q\ngens x:1 y:1\nrels x^2, y^2, x*y + y*x\n", 4) == H{1, 2, 1, 0, 0});
    }

    TEST_CASE("Groebner basis needing an overlap")
    {
        // x^2 - y x: overlap xxx produces y x x - x y x ... truncated basis grows
        auto A = th::algebra("field Q\ngens x:1 y:1\nrel x*x - y*x\n", 5);
        const auto& gb = A->groebner();
        CHECK(gb.elements.size() >= 1);
        for (const auto& o : overlaps(gb.elements, gb.leading)) {
            if (static_cast<int>(o.word.size()) <= 5)
                CHECK(reduce(o.spoly, gb.elements, gb.leading, A->order()).is_zero());
        }
        auto poly = th::algebra(th::qplane(2), 6);
        CHECK(poly->groebner().globally_complete);
        CHECK(th::algebra(th::x3, 6)->groebner().globally_complete);
    }

    TEST_CASE("count_normal_words agrees with the basis")
    {
        auto A = th::algebra(th::qplane(-1), 6);
        auto c = count_normal_words(A->groebner().leading, A->presentation().degrees(), 6);
        CHECK(c == A->hilbert());
    }

    TEST_CASE("normal forms in the quantum plane")
    {
        auto A = th::algebra(th::qplane(3), 4);
        const auto& p = A->presentation();
        NCPoly yx = parse_expression("y*x", p);
        // x is largest, so x y is rewritten to 1/3 y x
        CHECK(A->normal_form(yx).value == yx);
        CHECK(A->normal_form(parse_expression("x*y", p)).value == parse_expression("1/3 y*x", p));
        CHECK(A->normal_form(parse_expression("x*y*y", p)).value == parse_expression("1/9 y*y*x", p));
        CHECK(A->normal_form(yx).certified);
    }

    TEST_CASE("multiplication is associative on basis words")
    {
        for (std::string t : {th::qplane(2), std::string(th::x3), std::string("field Q\ngens x:1 y:1\nrel x*x - y*x\n"),
                              std::string("field F3\ngens a:1 b:2\nrels a*b - 2*b*a, a^3\n")}) {
            auto A = th::algebra(t, 5);
            for (int d1 = 0; d1 <= 2; ++d1)
                for (int d2 = 0; d1 + d2 <= 4; ++d2)
                    for (int d3 = 0; d1 + d2 + d3 <= 5; ++d3)
                        for (std::size_t i = 0; i < A->dim(d1); ++i)
                            for (std::size_t j = 0; j < A->dim(d2); ++j)
                                for (std::size_t k = 0; k < A->dim(d3); ++k) {
                                    AlgebraElement a = th::algebra(t, 5)->zero(0);
                                    auto e = [&](int d, std::size_t n) {
                                        AlgebraElement x = A->zero(d);
                                        x.coords[n] = Scalar::one(A->field());
                                        return x;
                                    };
                                    auto l = A->multiply(A->multiply(e(d1, i), e(d2, j)), e(d3, k));
                                    auto r = A->multiply(e(d1, i), A->multiply(e(d2, j), e(d3, k)));
                                    CHECK(l.coords == r.coords);
                                    (void)a;
                                }
        }
    }

    TEST_CASE("truncation errors")
    {
        auto A = th::algebra(th::kx, 3);
        CHECK_THROWS_AS(A->zero(4), TruncationError);
        CHECK(A->dim(-1) == 0);
        CHECK_THROWS_AS(A->multiply(A->generator(0), A->element(parse_expression("x^3", A->presentation()), 3)),
                        TruncationError);
    }

    TEST_CASE("morphisms")
    {
        auto A = th::algebra(th::qplane(3), 4);
        auto s = th::automorphism(A, "x -> 2*x\ny -> 5*y\n");
        CHECK(s->is_automorphism());
        CHECK(s->degree_matrix(2).at(0, 0) == q(4));
        auto inv = s->inverse();
        CHECK(compose(*s, *inv)->equals(*identity_morphism(A)));
        CHECK(power(*s, 2)->degree_matrix(1).at(0, 0) == q(4));
        CHECK(power(*s, 0)->equals(*identity_morphism(A)));
        CHECK_THROWS_AS(th::automorphism(A, "x -> y\ny -> x\n"), RelationNotPreserved);
        try {
            th::automorphism(A, "x -> y\ny -> x\n");
        } catch (const RelationNotPreserved& e) {
            CHECK_FALSE(e.relation().empty());
        }
        auto K = th::algebra(th::kx, 4);
        CHECK_THROWS_AS(th::automorphism(K, "x -> 0*x\n"), NotInvertible);
        // a non-invertible endomorphism is fine as a plain morphism
        auto zero = check_morphism(K, K, {NCPoly()}, false);
        CHECK(zero->degree_matrix(2).is_zero());
        CHECK_THROWS_AS(zero->degree_matrix(5), TruncationError);
    }

    TEST_CASE("skew extension structure maps")
    {
        auto S = th::skew(th::qplane(3), "x -> 2*x\ny -> 5*y\n", 1, 4);
        CHECK(S.extension->hilbert() == H{1, 3, 6, 10, 15});
        CHECK(S.polynomial->hilbert() == H{1, 1, 1, 1, 1});
        const auto& pb = S.extension->presentation();
        // z x = 2 x z in B
        CHECK(S.extension->normal_form(parse_expression("z*x", pb)).value == parse_expression("2*x*z", pb));
        // pi_A kills z, pi_z kills A
        CHECK(S.pi_A->apply(S.extension->generator(S.z_index)).is_zero());
        CHECK(S.pi_z->apply(S.extension->generator(0)).is_zero());
        auto comp = compose(*S.pi_A, *S.iota_A);
        CHECK(comp->equals(*identity_morphism(S.base)));
        CHECK(compose(*S.pi_z, *S.iota_z)->equals(*identity_morphism(S.polynomial)));
        auto S2 = th::skew(th::x3, "x -> 3*x\n", 2, 6);
        CHECK(S2.extension->hilbert() == H{1, 1, 2, 1, 2, 1, 2});
    }
}
