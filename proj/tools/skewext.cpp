#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

using namespace skewext;
using skewext::cli::json;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string automorphism;
    std::string output;
    int N = 4;
    int D = 6;
    int l = 1;
    int p = 1;
    std::string format = "text";
    std::string field;
    std::string seed_order;
    bool products = false;
    bool allow_truncation = false;
};

enum Exit { ok = 0, input_error = 1, truncated = 2, failed = 3 };

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Field parse_field(const std::string& s)
{
    if (s == "Q")
        return Field::rationals();
    std::string digits = s;
    if (!digits.empty() && digits[0] == 'F')
        digits = digits.substr(1);
    if (digits.size() > 2 && digits.front() == '<' && digits.back() == '>')
        digits = digits.substr(1, digits.size() - 2);
    try {
        std::size_t pos = 0;
        long p = std::stol(digits, &pos);
        if (pos == digits.size() && p > 1)
            return Field::prime(static_cast<std::uint64_t>(p));
    } catch (const std::logic_error&) {
    }
    throw std::invalid_argument("unknown field '" + s + "' (use Q or Fp)");
}

struct Inputs {
    AlgebraPtr A;
    MorphismPtr sigma;
};

Inputs load(const RunConfig& cfg, bool need_auto)
{
    Presentation p = parse_presentation(read_file(cfg.input));
    if (!cfg.field.empty())
        p = Presentation(parse_field(cfg.field), p.generators(), p.relations());
    int D = cfg.command == "skew" ? std::max(cfg.D, p.max_relation_degree()) : cfg.D;
    Inputs in;
    if (cfg.seed_order.empty()) {
        in.A = std::make_shared<GradedAlgebra>(p, D);
    } else {
        std::vector<std::string> names;
        std::string s = cfg.seed_order;
        for (char& c : s)
            if (c == ',')
                c = ' ';
        std::istringstream is(s);
        for (std::string w; is >> w;)
            names.push_back(w);
        in.A = std::make_shared<GradedAlgebra>(p, p.order_from_names(names), D);
    }
    if (need_auto && cfg.automorphism.empty())
        throw std::invalid_argument("--auto FILE is required for this command");
    if (!cfg.automorphism.empty())
        in.sigma = check_morphism(in.A, in.A, parse_automorphism(read_file(cfg.automorphism), p), true);
    return in;
}

json envelope(const RunConfig& cfg, const Field& f)
{
    return {{"command", cfg.command}, {"truncation", {{"N", cfg.N}, {"D", cfg.D}}}, {"field", f.name()}};
}

void emit(const RunConfig& cfg, const json& j, const std::string& text)
{
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_ext(const RunConfig& cfg)
{
    Inputs in = load(cfg, false);
    Resolution R = minimal_resolution(in.A, cfg.N, cfg.D);
    ExtAlgebra E(R.complex, cfg.N, cfg.D, {cfg.products, std::nullopt});
    bool finite = is_finite_certified(R.complex, *in.A, cfg.N, cfg.D);
    bool exact = verify_exactness(R.complex, true, cfg.D).exact;
    json j = envelope(cfg, in.A->field());
    j["certified"] = {{"finite", finite},
                      {"groebner_complete", in.A->groebner().globally_complete},
                      {"resolution_exact", exact},
                      {"euler_identity", euler_identity(R)}};
    j["data"] = {{"dimensions", cli::dims_json(E.table())}};
    std::ostringstream os;
    os << "E(A) over " << in.A->field().name() << ", window (N,D) = (" << cfg.N << "," << cfg.D << ")\n";
    os << cli::dims_text(E.table());
    if (cfg.products) {
        j["data"]["products"] = cli::products_json(E.table());
        os << "products:\n" << cli::products_text(E.table());
    }
    if (!finite)
        os << "warning: Ext may continue beyond the window (not finite-certified)\n";
    emit(cfg, j, os.str());
    return finite || cfg.allow_truncation ? ok : truncated;
}

int cmd_skew(const RunConfig& cfg)
{
    Inputs in = load(cfg, true);
    Presentation B = skew_extension(in.A->presentation(), in.sigma->images(), cfg.l);
    std::string text = to_text(B);
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        out << text;
    }
    json j = envelope(cfg, in.A->field());
    j["certified"] = {{"automorphism", true}};
    j["data"] = {{"presentation", text}};
    emit(cfg, j, text);
    return ok;
}

int cmd_verify(const RunConfig& cfg)
{
    Inputs in = load(cfg, true);
    SkewExtension S = make_skew_extension(in.A, in.sigma, cfg.l);
    auto st = build_study(S, cfg.N, cfg.D);
    MainTheoremReport rep = verify_main_theorem(*st);
    json j = envelope(cfg, in.A->field());
    std::ostringstream os;
    os << "B = A[z; sigma], deg z = " << cfg.l << ", window (N,D) = (" << cfg.N << "," << cfg.D << ")\n";
    if (rep.inconclusive) {
        j["certified"] = {{"inconclusive", true}};
        j["data"] = {{"reason", rep.inconclusive_reason}};
        os << "inconclusive: " << rep.inconclusive_reason << "\n";
        emit(cfg, j, os.str());
        return truncated;
    }
    bool pass = rep.all_passed();
    j["certified"] = {{"main_theorem", pass}, {"orientation", rep.orientation}};
    j["data"] = {{"checks", cli::checks_json(rep.checks)},
                 {"extras", cli::checks_json(rep.extras)},
                 {"tau", cli::map_json(st->tau)},
                 {"R_E", cli::twist_json(rep.RE)},
                 {"E_A", cli::dims_json(st->EA->table())},
                 {"E_B", cli::dims_json(st->EB->table())}};
    os << "E(A):\n" << cli::dims_text(st->EA->table()) << "E(B):\n" << cli::dims_text(st->EB->table());
    os << cli::checks_text(rep.checks) << cli::checks_text(rep.extras);
    os << cli::map_text(st->tau, "tau");
    os << cli::twist_text(rep.RE);
    os << "orientation: " << (rep.orientation.empty() ? "none" : rep.orientation) << "\n";
    os << (pass ? "main theorem verified\n" : "main theorem check FAILED\n");
    emit(cfg, j, os.str());
    return pass ? ok : failed;
}

// E(A), or E(B) when an automorphism is given.
struct Target {
    std::unique_ptr<Resolution> R;
    std::unique_ptr<ConeResolution> C;
    std::unique_ptr<ExtAlgebra> E;
    AlgebraPtr algebra;
    const FreeComplex* complex = nullptr;
};

Target ext_target(const RunConfig& cfg, const Inputs& in)
{
    Target t;
    if (in.sigma) {
        SkewExtension S = make_skew_extension(in.A, in.sigma, cfg.l);
        t.C = std::make_unique<ConeResolution>(build_cone_resolution(S, cfg.N, cfg.D));
        t.algebra = S.extension;
        t.complex = &t.C->cone;
    } else {
        t.R = std::make_unique<Resolution>(minimal_resolution(in.A, cfg.N, cfg.D));
        t.algebra = in.A;
        t.complex = &t.R->complex;
    }
    t.E = std::make_unique<ExtAlgebra>(*t.complex, cfg.N, cfg.D);
    return t;
}

int cmd_frobenius(const RunConfig& cfg)
{
    Inputs in = load(cfg, false);
    Target t = ext_target(cfg, in);
    bool finite = is_finite_certified(*t.complex, *t.algebra, cfg.N, cfg.D);
    json j = envelope(cfg, in.A->field());
    j["certified"] = {{"finite", finite}};
    std::string window = " (window " + std::to_string(cfg.N) + "," + std::to_string(cfg.D) + ")";
    if (!finite) {
        j["data"] = {{"verdict", "not-finite-certified"}};
        emit(cfg, j, "Frobenius: not-finite-certified" + window + "\n");
        return truncated;
    }
    auto r = frobenius_check(t.E->table());
    std::string v = to_string(r.verdict);
    j["data"] = {{"verdict", v}, {"detail", r.detail}};
    if (r.top)
        j["data"]["top"] = {{"n", r.top->n}, {"t", r.top->t}};
    emit(cfg, j, "Frobenius: " + v + window + (r.detail.empty() ? "" : "; " + r.detail) + "\n");
    if (r.verdict == Verdict::yes)
        return ok;
    return r.verdict == Verdict::no ? failed : truncated;
}

int cmd_kp(const RunConfig& cfg)
{
    Inputs in = load(cfg, false);
    Target t = ext_target(cfg, in);
    auto r = kp_check(t.E->table(), cfg.p);
    json j = envelope(cfg, in.A->field());
    j["certified"] = {{"window_only", true}};
    j["data"] = {{"p", cfg.p}, {"verdict", to_string(r.verdict)}, {"detail", r.detail}};
    if (r.witness)
        j["data"]["witness"] = {{"n", r.witness->n}, {"t", r.witness->t}};
    emit(cfg, j, "K_" + std::to_string(cfg.p) + " within window: " + to_string(r.verdict) + "; " + r.detail + "\n");
    return r.verdict == Verdict::yes ? ok : failed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ext-algebras of connected graded algebras and their skew extensions"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "presentation file")->required()->check(CLI::ExistingFile);
        sub->add_option("--maxcoh", cfg.N, "cohomological truncation N")->check(CLI::PositiveNumber);
        sub->add_option("--maxdeg", cfg.D, "internal-degree truncation D")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--field", cfg.field, "override the field (Q or Fp)");
        sub->add_option("--seed-order", cfg.seed_order, "generator precedence, largest first");
        sub->add_flag("--allow-truncation", cfg.allow_truncation, "do not fail on truncation warnings");
    };
    auto with_auto = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--auto", cfg.automorphism, "automorphism file")->check(CLI::ExistingFile);
        if (required)
            o->required();
        sub->add_option("--z-degree", cfg.l, "degree of z")->check(CLI::PositiveNumber);
    };
    auto* ext = app.add_subcommand("ext", "Ext dimension table and products");
    common(ext);
    ext->add_flag("--products", cfg.products, "emit the multiplication table");
    auto* skew = app.add_subcommand("skew", "presentation of A[z; sigma]");
    common(skew);
    with_auto(skew, true);
    skew->add_option("-o,--output", cfg.output, "write the presentation to a file");
    auto* verify = app.add_subcommand("verify", "verify E(B) = E(k[z]) #_{R_E} E(A)");
    common(verify);
    with_auto(verify, true);
    auto* frob = app.add_subcommand("frobenius", "Frobenius test of E(A), or E(B) with --auto");
    common(frob);
    with_auto(frob, false);
    auto* kp = app.add_subcommand("kp", "K_p test of E(A), or E(B) with --auto");
    common(kp);
    with_auto(kp, false);
    kp->add_option("--p", cfg.p, "p")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : input_error;
    }
    for (auto* s : {ext, skew, verify, frob, kp})
        if (s->parsed())
            cfg.command = s->get_name();
    try {
        if (cfg.command == "ext")
            return cmd_ext(cfg);
        if (cfg.command == "skew")
            return cmd_skew(cfg);
        if (cfg.command == "verify")
            return cmd_verify(cfg);
        if (cfg.command == "frobenius")
            return cmd_frobenius(cfg);
        return cmd_kp(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const RelationNotPreserved& e) {
        std::cerr << "invalid automorphism: " << e.what() << "\n";
    } catch (const NotInvertible& e) {
        std::cerr << "invalid automorphism: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return input_error;
}
