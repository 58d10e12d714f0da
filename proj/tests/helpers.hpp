#pragma once

#include <memory>
#include <string>

#include "skewext/corollaries.hpp"

namespace th {

using namespace skewext;

inline AlgebraPtr algebra(const std::string& text, int D)
{
    return std::make_shared<GradedAlgebra>(parse_presentation(text), D);
}

inline MorphismPtr automorphism(const AlgebraPtr& A, const std::string& text)
{
    return check_morphism(A, A, parse_automorphism(text, A->presentation()), true);
}

inline SkewExtension skew(const std::string& pres, const std::string& aut, int l, int D)
{
    auto A = algebra(pres, D);
    return make_skew_extension(A, automorphism(A, aut), l);
}

inline Scalar q(long n, long d = 1)
{
    return Scalar(mpq_class(n, d), Field::rationals());
}

inline const char* kx = "field Q\ngens x:1\nrels (none)\n";
inline const char* x2 = "field Q\ngens x:1\nrel x^2\n";
inline const char* x3 = "field Q\ngens x:1\nrel x^3\n";
inline const char* free2 = "field Q\ngens x:1 y:1\nrels (none)\n";

inline std::string qplane(long p)
{
    std::string c = p < 0 ? " + " + std::to_string(-p) : " - " + std::to_string(p);
    return "field Q\ngens x:1 y:1\nrel y*x" + c + "*x*y\n";
}

}  // namespace th
