#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewext/cone_resolution.hpp"
#include "skewext/ext_algebra.hpp"

namespace skewext {

/// All objects attached to B = A[z; sigma] within a window (N, D).
struct SkewStudy {
    SkewExtension ext;
    ConeResolution cone;
    Resolution Pz;
    std::unique_ptr<ExtAlgebra> EA, Ez, EB;
    BigradedMap pi_A;    // E(pi_A) : E(A) -> E(B)
    BigradedMap pi_z;    // E(pi_z) : E(k[z]) -> E(B)
    BigradedMap iota_A;  // E(iota_A) : E(B) -> E(A)
    BigradedMap iota_z;  // E(iota_z) : E(B) -> E(k[z])
    BigradedMap tau;
    int N = 0, D = 0, l = 1;

    /// E(B) basis ordinal of the z-copy of generator v of V_n (lives at (n+1, t+l)).
    std::optional<std::size_t> z_copy(int n, std::size_t v) const;
    /// E(B) basis ordinal of the A-part copy of generator v of V_n.
    std::optional<std::size_t> a_copy(int n, std::size_t v) const;
};

std::unique_ptr<SkewStudy> build_study(const SkewExtension& S, int N, int D);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct MainTheoremReport {
    bool inconclusive = false;
    std::string inconclusive_reason;
    std::vector<CheckResult> checks;  ///< the six sub-checks, in order
    std::vector<CheckResult> extras;
    std::string orientation;          ///< "direct" or "opposite"
    SmashTwist RE;
    bool all_passed() const;
};

MainTheoremReport verify_main_theorem(const SkewStudy& st, std::optional<std::uint64_t> seed = 12345);

/// Same domain and values on every basis pair.
bool twists_equal(const SmashTwist& a, const SmashTwist& b);

}  // namespace skewext
