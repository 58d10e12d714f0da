#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewext/scalar.hpp"
#include "skewext/word.hpp"

namespace skewext {

struct Generator {
    std::string name;
    int degree = 1;

    bool operator==(const Generator&) const = default;
};

/// Connected graded algebra k<generators>/(relations) with homogeneous relations
/// of degree at least 2.
class Presentation {
public:
    Presentation() = default;
    Presentation(Field field, std::vector<Generator> gens, std::vector<NCPoly> rels);

    Field field() const { return field_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<NCPoly>& relations() const { return rels_; }
    std::size_t num_generators() const { return gens_.size(); }

    std::vector<int> degrees() const;
    std::vector<std::string> names() const;
    std::optional<int> generator_index(const std::string& name) const;
    int max_relation_degree() const;

    MonomialOrder default_order() const { return MonomialOrder(degrees()); }
    /// Order from a list of generator names, largest first.
    MonomialOrder order_from_names(const std::vector<std::string>& names) const;

    bool operator==(const Presentation&) const = default;

private:
    Field field_;
    std::vector<Generator> gens_;
    std::vector<NCPoly> rels_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class PresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Presentation parse_presentation(const std::string& text);
std::string to_text(const Presentation& p);

/// Parses one polynomial expression over the presentation's generators.
NCPoly parse_expression(const std::string& text, const Presentation& p, int line = 1);

/// Parses `name -> expression` lines, one per generator. Returns images indexed
/// by generator; each image must be homogeneous of its generator's degree.
std::vector<NCPoly> parse_automorphism(const std::string& text, const Presentation& p);
std::string automorphism_to_text(const std::vector<NCPoly>& images, const Presentation& p);

}  // namespace skewext
