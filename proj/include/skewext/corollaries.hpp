#pragma once

#include <optional>
#include <string>

#include "skewext/main_theorem.hpp"

namespace skewext {

/// V_n = 0 on a tail of the window, the Groebner basis is complete in every
/// degree, and P(t) H_A(t) == 1 through degree 2D with H_A counted from
/// normal words.
bool is_finite_certified(const FreeComplex& resolution, const GradedAlgebra& A, int N, int D);

enum class Verdict { yes, no, inconclusive };
std::string to_string(Verdict v);

struct FrobeniusResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Bidegree> top;
    std::string detail;
};

/// Perfect-pairing test into the one-dimensional top bidegree.
FrobeniusResult frobenius_check(const BigradedAlgebra& E);

struct KpResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Bidegree> witness;  ///< first bidegree not reached
    std::string detail;
};

/// Is E generated by E^1..E^p within its window?
KpResult kp_check(const BigradedAlgebra& E, int p);

/// Top coefficient of x*y, or zero off the top.
Scalar frobenius_pairing(const BigradedAlgebra& E, const Bidegree& top, const BiElement& x, const BiElement& y);

/// The form <g1 # f1, g2 # f2> built from the forms of E(k[z]) and E(A) and tau;
/// checks nondegeneracy and associativity against the R_E smash product.
CheckResult transferred_form_check(const SkewStudy& st, const SmashTwist& RE);

}  // namespace skewext
