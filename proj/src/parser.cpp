#include <algorithm>
#include <cctype>
#include <sstream>

#include "skewext/presentation.hpp"

namespace skewext {

namespace {

std::string strip_comment(const std::string& line)
{
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool is_name_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Recursive descent over one expression:
//   expr  := [+|-] term {(+|-) term}
//   term  := power {[*] power}
//   power := atom [^ INT]
//   atom  := INT [/ INT] | NAME | ( expr )
class ExpressionParser {
public:
    ExpressionParser(const std::string& text, const Presentation& p, int line, int column_offset)
        : s_(text), p_(p), line_(line), offset_(column_offset)
    {
    }

    NCPoly parse()
    {
        NCPoly r = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail(std::string("unexpected character '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, line_, static_cast<int>(pos_) + offset_ + 1);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || is_name_start(c) || c == '(';
    }

    NCPoly expr()
    {
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        NCPoly r = term();
        if (negate)
            r = -r;
        while (true) {
            if (peek('+')) {
                ++pos_;
                r += term();
            } else if (peek('-')) {
                ++pos_;
                r -= term();
            } else {
                break;
            }
        }
        return r;
    }

    NCPoly term()
    {
        NCPoly r = power_();
        while (true) {
            if (peek('*')) {
                ++pos_;
                r = r * power_();
            } else if (starts_atom()) {
                r = r * power_();
            } else {
                break;
            }
        }
        return r;
    }

    NCPoly power_()
    {
        NCPoly base = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent after '^'");
            unsigned long n = std::stoul(s_.substr(start, pos_ - start));
            return power(base, static_cast<unsigned>(n));
        }
        return base;
    }

    mpz_class integer()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    NCPoly atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly r = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpq_class v(integer());
            if (peek('/')) {
                ++pos_;
                mpz_class den = integer();
                if (den == 0)
                    fail("zero denominator");
                v /= mpq_class(den);
            }
            try {
                return NCPoly::constant(Scalar(v, p_.field()));
            } catch (const std::domain_error& e) {
                fail(e.what());
            }
        }
        if (is_name_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && is_name_char(s_[pos_]))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto g = p_.generator_index(name);
            if (!g) {
                pos_ = start;
                fail("unknown generator '" + name + "'");
            }
            return NCPoly::generator(*g) * Scalar::one(p_.field());
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    const Presentation& p_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
};

Field parse_field(const std::string& spec, int line, int column)
{
    if (spec == "Q")
        return Field::rationals();
    std::string digits;
    if (spec.size() > 3 && spec.rfind("F<", 0) == 0 && spec.back() == '>')
        digits = spec.substr(2, spec.size() - 3);
    else if (spec.size() > 1 && spec[0] == 'F')
        digits = spec.substr(1);
    bool ok = !digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); });
    if (!ok || digits.size() > 9)
        throw ParseError("field must be Q or F<p>, got '" + spec + "'", line, column);
    auto p = static_cast<std::uint32_t>(std::stoul(digits));
    if (!is_prime(p))
        throw ParseError("field characteristic " + digits + " is not prime", line, column);
    return Field::prime(p);
}

}  // namespace

NCPoly parse_expression(const std::string& text, const Presentation& p, int line)
{
    return ExpressionParser(text, p, line, 0).parse();
}

Presentation parse_presentation(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::optional<Field> field;
    std::optional<std::vector<Generator>> gens;
    std::vector<std::pair<int, std::string>> rel_lines;  // (line, text) with column offsets kept
    std::vector<int> rel_offsets;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        std::string body = trim(line);
        if (body.empty())
            continue;
        std::size_t lead = line.find_first_not_of(" \t");
        std::size_t sp = body.find_first_of(" \t");
        std::string key = body.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : body.substr(sp + 1);
        int rest_offset = static_cast<int>(lead + (sp == std::string::npos ? body.size() : sp + 1));

        if (key == "field") {
            if (field)
                throw ParseError("duplicate field line", lineno, 1);
            field = parse_field(trim(rest), lineno, rest_offset + 1);
        } else if (key == "gens") {
            if (!field)
                throw ParseError("'field' line must precede 'gens'", lineno, 1);
            if (gens)
                throw ParseError("duplicate gens line", lineno, 1);
            gens.emplace();
            std::istringstream g(rest);
            std::string tok;
            while (g >> tok) {
                int col = rest_offset + static_cast<int>(rest.find(tok)) + 1;
                auto colon = tok.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
                    throw ParseError("generator must be written name:degree, got '" + tok + "'", lineno, col);
                std::string name = tok.substr(0, colon);
                std::string deg = tok.substr(colon + 1);
                if (!is_name_start(name[0]) ||
                    !std::all_of(name.begin(), name.end(), [](char c) { return is_name_char(c); }))
                    throw ParseError("invalid generator name '" + name + "'", lineno, col);
                int d = 0;
                try {
                    std::size_t used = 0;
                    d = std::stoi(deg, &used);
                    if (used != deg.size())
                        throw std::invalid_argument(deg);
                } catch (const std::exception&) {
                    throw ParseError("invalid degree '" + deg + "'", lineno, col);
                }
                if (d < 1)
                    throw ParseError("generator '" + name + "' must have positive degree", lineno, col);
                for (const auto& e : *gens)
                    if (e.name == name)
                        throw ParseError("duplicate generator '" + name + "'", lineno, col);
                gens->push_back({name, d});
            }
        } else if (key == "rel" || key == "rels") {
            if (!gens)
                throw ParseError("'gens' line must precede relations", lineno, 1);
            std::string r = trim(rest);
            if (key == "rels") {
                if (r == "(none)" || r.empty())
                    continue;
                // comma separated list
                std::size_t start = 0;
                while (start <= r.size()) {
                    std::size_t comma = r.find(',', start);
                    std::string piece = r.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                    rel_lines.emplace_back(lineno, piece);
                    rel_offsets.push_back(rest_offset + static_cast<int>(start));
                    if (comma == std::string::npos)
                        break;
                    start = comma + 1;
                }
            } else {
                if (r.empty())
                    throw ParseError("empty relation", lineno, rest_offset + 1);
                rel_lines.emplace_back(lineno, rest);
                rel_offsets.push_back(rest_offset);
            }
        } else {
            throw ParseError("unknown directive '" + key + "'", lineno, static_cast<int>(lead) + 1);
        }
    }
    if (!field)
        throw ParseError("missing 'field' line", lineno, 1);
    if (!gens)
        throw ParseError("missing 'gens' line", lineno, 1);

    Presentation bare(*field, *gens, {});
    auto degs = bare.degrees();
    std::vector<NCPoly> rels;
    for (std::size_t i = 0; i < rel_lines.size(); ++i) {
        const auto& [ln, txt] = rel_lines[i];
        NCPoly r = ExpressionParser(txt, bare, ln, rel_offsets[i]).parse();
        if (r.is_zero())
            continue;
        int d = r.homogeneous_degree(degs);
        if (d < 0)
            throw ParseError("inhomogeneous relation", ln, rel_offsets[i] + 1);
        if (d < 2)
            throw ParseError("relations must have degree at least 2 (degree " + std::to_string(d) + ")", ln,
                             rel_offsets[i] + 1);
        rels.push_back(std::move(r));
    }
    return Presentation(*field, *gens, std::move(rels));
}

std::string to_text(const Presentation& p)
{
    std::ostringstream os;
    os << "field " << p.field().name() << '\n';
    os << "gens";
    for (const auto& g : p.generators())
        os << ' ' << g.name << ':' << g.degree;
    os << '\n';
    if (p.relations().empty())
        os << "rels (none)\n";
    for (const auto& r : p.relations())
        os << "rel " << r.str(p.names()) << '\n';
    return os.str();
}

std::vector<NCPoly> parse_automorphism(const std::string& text, const Presentation& p)
{
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::optional<NCPoly>> images(p.num_generators());
    auto degs = p.degrees();
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (trim(line).empty())
            continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw ParseError("expected 'name -> expression'", lineno, 1);
        std::string name = trim(line.substr(0, arrow));
        auto g = p.generator_index(name);
        if (!g)
            throw ParseError("unknown generator '" + name + "'", lineno, 1);
        auto& slot = images[static_cast<std::size_t>(*g)];
        if (slot)
            throw ParseError("generator '" + name + "' assigned twice", lineno, 1);
        int offset = static_cast<int>(arrow + 2);
        NCPoly img = ExpressionParser(line.substr(arrow + 2), p, lineno, offset).parse();
        int d = img.homogeneous_degree(degs);
        if (!img.is_zero() && d != p.generators()[static_cast<std::size_t>(*g)].degree)
            throw ParseError("image of '" + name + "' must be homogeneous of degree " +
                                 std::to_string(p.generators()[static_cast<std::size_t>(*g)].degree),
                             lineno, offset + 1);
        slot = std::move(img);
    }
    std::vector<NCPoly> out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i])
            throw ParseError("no image given for generator '" + p.generators()[i].name + "'", lineno, 1);
        out.push_back(std::move(*images[i]));
    }
    return out;
}

std::string automorphism_to_text(const std::vector<NCPoly>& images, const Presentation& p)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < images.size(); ++i)
        os << p.generators()[i].name << " -> " << images[i].str(p.names()) << '\n';
    return os.str();
}

}  // namespace skewext
