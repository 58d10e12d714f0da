#include "skewext/corollaries.hpp"

#include <algorithm>

namespace skewext {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

bool is_finite_certified(const FreeComplex& resolution, const GradedAlgebra& A, int N, int D)
{
    auto empty_at = [&](int n) {
        for (int d : resolution.generators(n))
            if (d <= D)
                return false;
        return true;
    };
    if (!empty_at(N))
        return false;
    if (!A.groebner().globally_complete)
        return false;
    const int M = 2 * D;
    auto h = count_normal_words(A.groebner().leading, A.presentation().degrees(), M);
    std::vector<long> hl(h.begin(), h.end());
    std::vector<long> p(static_cast<std::size_t>(M) + 1, 0);
    for (int n = 0; n <= N; ++n)
        for (int d : resolution.generators(n))
            if (d <= D)
                p[static_cast<std::size_t>(d)] += n % 2 == 0 ? 1 : -1;
    auto prod = series_product(p, hl, M);
    for (int d = 0; d <= M; ++d)
        if (prod[static_cast<std::size_t>(d)] != (d == 0 ? 1 : 0))
            return false;
    return true;
}

Scalar frobenius_pairing(const BigradedAlgebra& E, const Bidegree& top, const BiElement& x, const BiElement& y)
{
    if (!(x.degree + y.degree == top))
        return Scalar::zero(E.field());
    return E.multiply(x, y).coords.at(0);
}

FrobeniusResult frobenius_check(const BigradedAlgebra& E)
{
    FrobeniusResult r;
    auto sup = E.support();
    if (sup.empty()) {
        r.detail = "empty algebra";
        return r;
    }
    int ntop = sup.back().n;
    for (const auto& b : sup)
        ntop = std::max(ntop, b.n);
    std::vector<Bidegree> tops;
    for (const auto& b : sup)
        if (b.n == ntop)
            tops.push_back(b);
    if (tops.size() != 1 || E.dim(tops[0]) != 1) {
        r.verdict = Verdict::no;
        r.detail = "top cohomological degree " + std::to_string(ntop) + " is not one-dimensional";
        return r;
    }
    const Bidegree top = tops[0];
    r.top = top;
    for (const auto& a : sup) {
        Bidegree b{top.n - a.n, top.t - a.t};
        if (!E.has_product(a, b)) {
            r.verdict = Verdict::inconclusive;
            r.detail = "pairing at " + to_string(a) + " outside window";
            return r;
        }
        if (E.dim(b) != E.dim(a)) {
            r.verdict = Verdict::no;
            r.detail = "dim " + to_string(a) + " != dim " + to_string(b);
            return r;
        }
        Matrix M(E.dim(a), E.dim(b), E.field());
        for (std::size_t i = 0; i < E.dim(a); ++i)
            for (std::size_t j = 0; j < E.dim(b); ++j)
                M.set(i, j, E.product(a, i, b, j).at(0));
        if (rank(M) != E.dim(a)) {
            r.verdict = Verdict::no;
            r.detail = "pairing " + to_string(a) + " x " + to_string(b) + " is degenerate";
            return r;
        }
    }
    r.verdict = Verdict::yes;
    r.detail = "top " + to_string(top);
    return r;
}

KpResult kp_check(const BigradedAlgebra& E, int p)
{
    KpResult r;
    const Field f = E.field();
    std::map<Bidegree, std::vector<Vector>> span;
    std::vector<Bidegree> gens;
    auto sup = E.support();
    for (const auto& b : sup)
        if (b.n >= 1 && b.n <= p)
            gens.push_back(b);
    for (int n = 0; n <= E.max_n(); ++n)
        for (const auto& c : sup) {
            if (c.n != n)
                continue;
            std::vector<Vector>& S = span[c];
            if (n <= p) {
                for (std::size_t k = 0; k < E.dim(c); ++k)
                    S.push_back(E.basis_element(c, k).coords);
                continue;
            }
            IncrementalBasis basis(E.dim(c), f);
            for (const auto& g : gens) {
                Bidegree rest{c.n - g.n, c.t - g.t};
                auto it = span.find(rest);
                if (it == span.end())
                    continue;
                for (std::size_t i = 0; i < E.dim(g); ++i)
                    for (const auto& s : it->second) {
                        Vector v = E.multiply(E.basis_element(g, i), {rest, s}).coords;
                        if (basis.insert(v))
                            S.push_back(v);
                    }
            }
            if (S.size() != E.dim(c)) {
                r.verdict = Verdict::no;
                r.witness = c;
                r.detail = "E" + to_string(c) + " not reached by E^1..E^" + std::to_string(p);
                return r;
            }
        }
    r.verdict = Verdict::yes;
    r.detail = "generated within window (" + std::to_string(E.max_n()) + "," + std::to_string(E.max_t()) + ")";
    return r;
}

CheckResult transferred_form_check(const SkewStudy& st, const SmashTwist& RE)
{
    CheckResult c{"transferred Frobenius form", false, ""};
    const BigradedAlgebra& EA = st.EA->table();
    const BigradedAlgebra& Ez = st.Ez->table();
    auto fa = frobenius_check(EA);
    auto fz = frobenius_check(Ez);
    if (fa.verdict != Verdict::yes || fz.verdict != Verdict::yes) {
        c.detail = "factors are not Frobenius";
        return c;
    }
    const Bidegree ta = *fa.top, tz = *fz.top;
    const Bidegree top = ta + tz;
    if (!EA.in_window(top)) {
        c.detail = "top " + to_string(top) + " outside window";
        return c;
    }
    const Field f = EA.field();
    const Scalar one = Scalar::one(f);
    auto form = [&](const TensorKey& a, const TensorKey& b) {
        BiElement g1 = Ez.basis_element(a.left, a.i), g2 = Ez.basis_element(b.left, b.i);
        BiElement f1 = EA.basis_element(a.right, a.j), f2 = EA.basis_element(b.right, b.j);
        Scalar gz = frobenius_pairing(Ez, tz, g1, g2);
        if (gz.is_zero())
            return Scalar::zero(f);
        if (b.left.n == 0)
            return gz * frobenius_pairing(EA, ta, f1, f2);
        Scalar sign(a.right.n % 2 == 0 ? 1 : -1, f);
        return sign * gz * frobenius_pairing(EA, ta, st.tau.apply(f1), f2);
    };
    auto form_on = [&](const TensorElement& x, const TensorElement& y) {
        Scalar s = Scalar::zero(f);
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y)
                s += ca * cb * form(a, b);
        return s;
    };
    std::vector<TensorKey> all;
    for (int n = 0; n <= top.n; ++n)
        for (int t = 0; t <= top.t; ++t)
            for (const auto& k : RE.basis({n, t}))
                all.push_back(k);
    Matrix G(all.size(), all.size(), f);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            G.set(i, j, form(all[i], all[j]));
    if (rank(G) != all.size()) {
        c.detail = "form is degenerate";
        return c;
    }
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!EA.in_window(a.degree() + b.degree()))
                continue;
            TensorElement ab = smash_multiply(RE, a, b);
            for (const auto& x : all) {
                if (!EA.in_window(b.degree() + x.degree()))
                    continue;
                if (!(form_on(ab, {{x, one}}) == form_on({{a, one}}, smash_multiply(RE, b, x)))) {
                    c.detail = "not associative on " + tensor_str({{a, one}}) + ", " + tensor_str({{b, one}}) + ", " +
                               tensor_str({{x, one}});
                    return c;
                }
            }
        }
    c.passed = true;
    return c;
}

}  // namespace skewext
