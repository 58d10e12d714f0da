#include "skewext/presentation.hpp"

#include <algorithm>
#include <set>

namespace skewext {

Presentation::Presentation(Field field, std::vector<Generator> gens, std::vector<NCPoly> rels)
    : field_(field), gens_(std::move(gens)), rels_(std::move(rels))
{
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.degree < 1)
            throw PresentationError("generator '" + g.name + "' has nonpositive degree " +
                                    std::to_string(g.degree));
        if (!seen.insert(g.name).second)
            throw PresentationError("duplicate generator '" + g.name + "'");
    }
    auto degs = degrees();
    for (auto& r : rels_) {
        // re-tag coefficients with the presentation field
        NCPoly tagged;
        for (const auto& [w, c] : r.terms()) {
            for (int g : w)
                if (g < 0 || static_cast<std::size_t>(g) >= gens_.size())
                    throw PresentationError("relation uses an unknown generator index");
            tagged.add_term(w, Scalar(c.value(), field_));
        }
        r = std::move(tagged);
    }
    rels_.erase(std::remove_if(rels_.begin(), rels_.end(), [](const NCPoly& r) { return r.is_zero(); }),
                rels_.end());
    for (const auto& r : rels_) {
        int d = r.homogeneous_degree(degs);
        if (d < 0)
            throw PresentationError("inhomogeneous relation: " + r.str(names()));
        if (d < 2)
            throw PresentationError("relation of degree " + std::to_string(d) +
                                    " (remove the generator instead): " + r.str(names()));
    }
}

std::vector<int> Presentation::degrees() const
{
    std::vector<int> d;
    for (const auto& g : gens_)
        d.push_back(g.degree);
    return d;
}

std::vector<std::string> Presentation::names() const
{
    std::vector<std::string> n;
    for (const auto& g : gens_)
        n.push_back(g.name);
    return n;
}

std::optional<int> Presentation::generator_index(const std::string& name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

int Presentation::max_relation_degree() const
{
    int m = 0;
    auto degs = degrees();
    for (const auto& r : rels_)
        m = std::max(m, r.homogeneous_degree(degs));
    return m;
}

MonomialOrder Presentation::order_from_names(const std::vector<std::string>& names) const
{
    std::vector<int> prec;
    for (const auto& n : names) {
        auto g = generator_index(n);
        if (!g)
            throw PresentationError("unknown generator '" + n + "' in precedence list");
        prec.push_back(*g);
    }
    return MonomialOrder(degrees(), prec);
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column)
{
}

}  // namespace skewext
