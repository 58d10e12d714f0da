#include "report.hpp"

#include <sstream>

namespace skewext::cli {

std::string dims_text(const BigradedAlgebra& E)
{
    std::ostringstream os;
    for (int n = 0; n <= E.max_n(); ++n) {
        os << "n=" << n << ":";
        bool any = false;
        for (const auto& b : E.support()) {
            if (b.n != n)
                continue;
            os << (any ? ", " : " ") << E.dim(b) << " @ t=" << b.t;
            any = true;
        }
        if (!any)
            os << " 0";
        os << "\n";
    }
    return os.str();
}

static std::string value_str(const BigradedAlgebra& E, const BiElement& x)
{
    return E.element_str(x);
}

std::string products_text(const BigradedAlgebra& E)
{
    std::ostringstream os;
    for (const auto& a : E.support())
        for (const auto& b : E.support()) {
            if (!E.has_product(a, b) || a.n == 0 || b.n == 0)
                continue;
            for (std::size_t i = 0; i < E.dim(a); ++i)
                for (std::size_t j = 0; j < E.dim(b); ++j) {
                    auto x = E.multiply(E.basis_element(a, i), E.basis_element(b, j));
                    os << BigradedAlgebra::label(a, i) << " * " << BigradedAlgebra::label(b, j) << " = "
                       << value_str(E, x) << "\n";
                }
        }
    return os.str();
}

json dims_json(const BigradedAlgebra& E)
{
    json out = json::array();
    for (const auto& b : E.support())
        out.push_back({{"n", b.n}, {"t", b.t}, {"dim", E.dim(b)}});
    return out;
}

json products_json(const BigradedAlgebra& E)
{
    json out = json::array();
    for (const auto& a : E.support())
        for (const auto& b : E.support()) {
            if (!E.has_product(a, b))
                continue;
            for (std::size_t i = 0; i < E.dim(a); ++i)
                for (std::size_t j = 0; j < E.dim(b); ++j) {
                    auto x = E.multiply(E.basis_element(a, i), E.basis_element(b, j));
                    json terms = json::object();
                    for (std::size_t k = 0; k < x.coords.size(); ++k)
                        if (!x.coords[k].is_zero())
                            terms[BigradedAlgebra::label(x.degree, k)] = x.coords[k].str();
                    out.push_back({{"left", BigradedAlgebra::label(a, i)},
                                   {"right", BigradedAlgebra::label(b, j)},
                                   {"value", terms}});
                }
        }
    return out;
}

json map_json(const BigradedMap& m)
{
    json out = json::array();
    for (const auto& [b, M] : m.blocks) {
        json rows = json::array();
        for (std::size_t r = 0; r < M.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < M.cols(); ++c)
                row.push_back(M.at(r, c).str());
            rows.push_back(row);
        }
        out.push_back({{"n", b.n}, {"t", b.t}, {"matrix", rows}});
    }
    return out;
}

std::string map_text(const BigradedMap& m, const std::string& name)
{
    std::ostringstream os;
    for (const auto& [b, M] : m.blocks) {
        if (M.rows() == 0 && M.cols() == 0)
            continue;
        os << name << " at " << to_string(b) << ":";
        for (std::size_t r = 0; r < M.rows(); ++r) {
            os << (r ? " |" : "");
            for (std::size_t c = 0; c < M.cols(); ++c)
                os << " " << M.at(r, c).str();
        }
        os << "\n";
    }
    return os.str();
}

json twist_json(const SmashTwist& T)
{
    json out = json::array();
    for (const auto& [k, v] : T.values) {
        json terms = json::object();
        for (const auto& [t, c] : v)
            terms[BigradedAlgebra::label(t.left, t.i) + "(x)" + BigradedAlgebra::label(t.right, t.j)] = c.str();
        out.push_back({{"f", BigradedAlgebra::label(k.left, k.i)}, {"g", BigradedAlgebra::label(k.right, k.j)}, {"value", terms}});
    }
    return out;
}

std::string twist_text(const SmashTwist& T)
{
    std::ostringstream os;
    for (const auto& [k, v] : T.values) {
        if (k.left.n == 0 || k.right.n == 0)
            continue;
        os << "R_E(" << BigradedAlgebra::label(k.left, k.i) << " (x) z:" << BigradedAlgebra::label(k.right, k.j)
           << ") = " << tensor_str(v, "z:", "") << "\n";
    }
    return os.str();
}

json checks_json(const std::vector<CheckResult>& checks)
{
    json out = json::array();
    for (const auto& c : checks) {
        json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            j["counterexample"] = c.detail;
        out.push_back(j);
    }
    return out;
}

std::string checks_text(const std::vector<CheckResult>& checks)
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace skewext::cli
