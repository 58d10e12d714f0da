// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "random_pres.hpp"

using namespace skewext;
using th::q;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Member {
    std::string name, pres, aut;
    int l, N, D;
};

// (a) k[x] scaled, (b) quantum plane diagonal, (c) x^3 scaled, (d) identity for each
std::vector<Member> suite()
{
    return {{"(a) k[x], x -> 2x", th::kx, "x -> 2*x\n", 1, 4, 6},
            {"(b) quantum plane p=3, diag(2,5)", th::qplane(3), "x -> 2*x\ny -> 5*y\n", 1, 4, 6},
            {"(c) k[x]/(x^3), x -> 3x", th::x3, "x -> 3*x\n", 1, 4, 8},
            {"(d) k[x], id", th::kx, "x -> x\n", 1, 4, 6},
            {"(d) quantum plane p=3, id", th::qplane(3), "x -> x\ny -> y\n", 1, 4, 6},
            {"(d) k[x]/(x^3), id", th::x3, "x -> x\n", 1, 4, 8}};
}

struct Studied {
    Member m;
    std::unique_ptr<SkewStudy> st;
    MainTheoremReport rep;
};

std::vector<Studied>& studies()
{
    static std::vector<Studied> all = [] {
        std::vector<Studied> v;
        for (const auto& m : suite()) {
            auto st = build_study(th::skew(m.pres, m.aut, m.l, m.D), m.N, m.D);
            auto rep = verify_main_theorem(*st);
            v.push_back({m, std::move(st), std::move(rep)});
        }
        return v;
    }();
    return all;
}

bool identity_on(const BigradedMap& m, const BigradedAlgebra& E)
{
    for (const auto& b : E.support()) {
        auto it = m.blocks.find(b);
        if (it == m.blocks.end() || !(it->second == Matrix::identity(E.dim(b), E.field())))
            return false;
    }
    return true;
}

std::string criterion1(bool& ok)
{
    std::ostringstream why;
    auto t0 = Clock::now();
    for (long p : {2L, 3L, -1L}) {
        auto S = th::skew(th::kx, "x -> " + std::to_string(p) + "*x\n", 1, 3);
        auto st = build_study(S, 3, 3);
        const auto& E = st->EB->table();
        bool dims = E.support() == std::vector<Bidegree>{{0, 0}, {1, 1}, {2, 2}} && E.dim({0, 0}) == 1 &&
                    E.dim({1, 1}) == 2 && E.dim({2, 2}) == 1;
        if (!dims) {
            why << "p=" << p << ": dimensions; ";
            ok = false;
            continue;
        }
        auto u = E.basis_element({1, 1}, *st->a_copy(1, 0));
        auto v = E.basis_element({1, 1}, *st->z_copy(0, 0));
        Scalar uv = E.multiply(u, v).coords[0], vu = E.multiply(v, u).coords[0];
        bool table = E.multiply(u, u).is_zero() && E.multiply(v, v).is_zero() && !uv.is_zero() &&
                     ((vu + q(p) * uv).is_zero() || (uv + q(p) * vu).is_zero());
        bool tau = st->tau.block({1, 1}) == Matrix::from_rows({{q(p)}}, 1);
        auto rep = verify_main_theorem(*st);
        const TensorElement& r = rep.RE.R({{1, 1}, 0, {1, 1}, 0});
        bool re = tensor_equal(r, TensorElement{{{{1, 1}, 0, {1, 1}, 0}, q(-p)}});
        if (!(table && tau && re && rep.all_passed())) {
            ok = false;
            why << "p=" << p << (table ? "" : " table") << (tau ? "" : " tau") << (re ? "" : " R_E") << "; ";
        } else {
            why << "p=" << p << " " << rep.orientation << "; ";
        }
    }
    double s = seconds_since(t0);
    if (s >= 5.0)
        ok = false;
    why << s << " s";
    return why.str();
}

std::string criterion2(bool& ok)
{
    auto t0 = Clock::now();
    std::ostringstream why;
    for (const auto& x : studies()) {
        bool six = !x.rep.inconclusive && x.rep.checks.size() == 6;
        for (const auto& c : x.rep.checks)
            six = six && c.passed;
        if (!six) {
            ok = false;
            why << x.m.name << " failed; ";
        }
    }
    double s = seconds_since(t0);
    if (s >= 60.0)
        ok = false;
    why << studies().size() << " members, " << s << " s";
    return why.str();
}

std::string criterion3(bool& ok)
{
    std::ostringstream why;
    for (const auto& x : studies()) {
        auto cv = cross_validate(x.st->cone);
        if (!cv.match() || !cv.direct_exact || cv.cone_table != cv.direct_table) {
            ok = false;
            why << x.m.name << " mismatch; ";
        }
    }
    why << studies().size() << " members";
    return why.str();
}

std::string criterion4(bool& ok)
{
    std::mt19937_64 rng(20240611);
    int good = 0;
    std::ostringstream why;
    for (int trial = 0; trial < 20; ++trial) {
        auto rc = th::random_presentation(rng);
        int D = rc.D;
        auto A = std::make_shared<GradedAlgebra>(rc.pres, D);
        Resolution R = minimal_resolution(A, D, D);
        bool pass = !dd_defect(R.complex) && is_minimal(R.complex) && verify_exactness(R.complex, true, D).exact &&
                    euler_identity(R);
        std::vector<int> perm(rc.pres.num_generators());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = static_cast<int>(perm.size() - 1 - i);
        auto A2 = std::make_shared<GradedAlgebra>(rc.pres, MonomialOrder(rc.pres.degrees(), perm), D);
        pass = pass && minimal_resolution(A2, D, D).table() == R.table();
        if (pass)
            ++good;
        else
            why << "trial " << trial << " failed; ";
    }
    if (good != 20)
        ok = false;
    why << good << "/20";
    return why.str();
}

std::string criterion5(bool& ok)
{
    std::ostringstream why;
    for (const auto& x : studies()) {
        for (std::uint64_t seed : {11ULL, 222ULL}) {
            ExtAlgebra EB(x.st->cone.cone, x.m.N, x.m.D, ExtOptions{true, seed});
            ExtAlgebra EA(x.st->cone.base.complex, x.m.N, x.m.D, ExtOptions{true, seed});
            if (!(EB.table() == x.st->EB->table()) || !(EA.table() == x.st->EA->table())) {
                ok = false;
                why << x.m.name << " seed " << seed << "; ";
            }
        }
    }
    // an algebra whose lift solves have nonzero kernels, so perturbed lifts
    // really differ as chain maps
    auto W = th::algebra("field Q\ngens a:1 c:1 b:3\nrel a*c\n", 5);
    Resolution R = minimal_resolution(W, 3, 5);
    ExtAlgebra E0(R.complex, 3, 5);
    ExtAlgebra E1(R.complex, 3, 5, ExtOptions{true, 31});
    ChainMapLift L0 = E0.lift_cocycle(E0.table().unit());
    ChainMapLift L1 = E0.lift_cocycle(E0.table().unit(), 31);
    bool differs = false;
    for (std::size_t k = 0; k < L1.components.size(); ++k)
        for (std::size_t v = 0; v < L1.components[k].size(); ++v)
            if (L1.has(static_cast<int>(k), v) && L0.has(static_cast<int>(k), v) &&
                !(L1.at(static_cast<int>(k), v) == L0.at(static_cast<int>(k), v)))
                differs = true;
    if (!differs || !(E0.table() == E1.table())) {
        ok = false;
        why << "k<a,c,b>/(ac): " << (differs ? "tables differ" : "perturbation had no effect") << "; ";
    }
    why << "2 seeds x " << studies().size() << " members, plus k<a,c,b>/(ac) with distinct lifts";
    return why.str();
}

std::string criterion6(bool& ok)
{
    std::ostringstream why;
    for (auto& x : studies()) {
        SmashTwist RE = x.rep.RE;
        bool cert = certify_smash(RE, x.m.N, x.m.D) == SmashStatus::certified;
        const BigradedAlgebra EB =
            x.rep.orientation == "opposite" ? x.st->EB->table().opposite() : x.st->EB->table();
        SmashTwist Rf = twist_from_factorization(EB, x.st->Ez->table_ptr(), x.st->pi_z, x.st->EA->table_ptr(),
                                                 x.st->pi_A);
        bool round = certify_smash(Rf, x.m.N, x.m.D) == SmashStatus::certified && twists_equal(Rf, RE);
        if (!cert || !round) {
            ok = false;
            why << x.m.name << (cert ? "" : " not certified") << (round ? "" : " round trip") << "; ";
        }
    }
    why << studies().size() << " members";
    return why.str();
}

std::string criterion7(bool& ok)
{
    std::ostringstream why;
    for (auto& x : studies()) {
        const auto& EA = x.st->EA->table();
        const auto& EB = x.st->EB->table();
        bool koszul = x.m.pres != th::x3;
        bool pass;
        if (x.m.name.rfind("(a)", 0) == 0 || x.m.name.rfind("(b)", 0) == 0)
            pass = frobenius_check(EA).verdict == Verdict::yes && frobenius_check(EB).verdict == Verdict::yes;
        else
            pass = true;
        if (koszul)
            pass = pass && kp_check(EA, 1).verdict == Verdict::yes && kp_check(EB, 1).verdict == Verdict::yes;
        else
            pass = pass && kp_check(EA, 1).verdict == Verdict::no && kp_check(EA, 2).verdict == Verdict::yes &&
                   kp_check(EB, 1).verdict == Verdict::no && kp_check(EB, 2).verdict == Verdict::yes;
        if (!pass) {
            ok = false;
            why << x.m.name << "; ";
        }
    }
    why << "Frobenius on (a),(b); K_1 on Koszul members, K_2 not K_1 on x^3";
    return why.str();
}

std::string criterion8(bool& ok)
{
    std::ostringstream why;
    for (auto& x : studies()) {
        bool a = identity_on(compose(x.st->iota_A, x.st->pi_A), x.st->EA->table());
        bool z = identity_on(compose(x.st->iota_z, x.st->pi_z), x.st->Ez->table());
        if (!a || !z) {
            ok = false;
            why << x.m.name << (a ? "" : " iota_A pi_A") << (z ? "" : " iota_z pi_z") << "; ";
        }
    }
    why << studies().size() << " members";
    return why.str();
}

}  // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<std::string(bool&)>>> crit{
        {"quantum plane, p in {2, 3, -1}", criterion1},
        {"main theorem on (a)-(d)", criterion2},
        {"cone vs direct resolution", criterion3},
        {"random presentations", criterion4},
        {"perturbed lifts", criterion5},
        {"smash certification and round trip", criterion6},
        {"Frobenius and K_p", criterion7},
        {"functoriality", criterion8}};
    bool all = true;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        bool ok = true;
        std::string detail;
        try {
            detail = crit[i].second(ok);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        all = all && ok;
        std::printf("criterion %zu: %s  %s [%s]\n", i + 1, ok ? "PASS" : "FAIL", crit[i].first.c_str(), detail.c_str());
    }
    return all ? 0 : 1;
}
