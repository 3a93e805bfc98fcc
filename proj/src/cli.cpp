#include "adic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "adic/gallery.hpp"
#include "adic/io.hpp"
#include "adic/lift.hpp"
#include "adic/parse.hpp"
#include "adic/stream_expr.hpp"

namespace adic {

namespace {

std::string coords_str(const std::vector<Polynomial>& coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += coords[i].str();
    }
    return out;
}

void print_tower(const TowerElement& x, std::uint32_t cap,
                 std::ostream& out) {
    for (std::uint32_t i = 0; i <= cap; ++i)
        out << "pi_" << i << ": " << coords_str(x.project(i).coords) << "\n";
}

// Non-blank, non-comment lines of a file, in order.
std::vector<std::string> data_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<TowerElement> load_family(const std::string& path,
                                      const ModulePtr& M) {
    std::vector<TowerElement> fam;
    for (auto& line : data_lines(path)) {
        auto coords = poly_parse_vector(line, M->field(), ',');
        if (coords.size() != M->rank())
            throw std::runtime_error(
                "family vector has " + std::to_string(coords.size()) +
                " coordinates; module rank is " + std::to_string(M->rank()));
        fam.push_back(TowerElement::from_element(std::move(coords), M));
    }
    if (fam.empty()) throw std::runtime_error("family file is empty");
    return fam;
}

struct Options {
    std::string ideal_spec;
    std::string module_path;
    std::string gens_path;
    std::string stream_text;
    std::string only;
    std::uint32_t cap = 8;
    std::uint64_t seed = 1;
    std::vector<std::string> exprs;
};

// Degree budget for Groebner-backed ideals read from flags and files.
std::uint32_t degree_budget(std::uint32_t cap) { return cap + 8; }

AdicIdeal require_ideal(const Options& o) {
    if (o.ideal_spec.empty())
        throw CLI::ValidationError("this command needs --ideal");
    return parse_ideal_spec(o.ideal_spec, Domain{}, degree_budget(o.cap));
}

ModulePtr require_module(const Options& o) {
    if (o.module_path.empty())
        throw CLI::ValidationError("this command needs --module");
    return load_presentation(o.module_path, degree_budget(o.cap));
}

int cmd_parse(const Options& o, std::ostream& out) {
    for (auto& e : o.exprs) out << poly_parse(e, Domain{}).str() << "\n";
    return 0;
}

int cmd_nf(const Options& o, std::ostream& out) {
    AdicIdeal a = require_ideal(o);
    out << normal_form(poly_parse(o.exprs[0], Domain{}), a, o.cap).str()
        << "\n";
    return 0;
}

int cmd_ord(const Options& o, std::ostream& out) {
    if (!o.module_path.empty()) {
        ModulePtr M = require_module(o);
        auto v = poly_parse_vector(o.exprs[0], M->field(), ',');
        out << ord_module(v, *M, o.cap).str() << "\n";
        return 0;
    }
    AdicIdeal a = require_ideal(o);
    out << ord_ring(poly_parse(o.exprs[0], Domain{}), a, o.cap).str() << "\n";
    return 0;
}

int cmd_dist(const Options& o, std::ostream& out) {
    AdicIdeal a = require_ideal(o);
    out << dist_ring(poly_parse(o.exprs[0], Domain{}),
                     poly_parse(o.exprs[1], Domain{}), a, o.cap)
               .str()
        << "\n";
    return 0;
}

std::string stream_source(const Options& o) {
    if (!o.stream_text.empty()) return o.stream_text;
    if (!o.exprs.empty()) return o.exprs[0];
    throw CLI::ValidationError(
        "this command needs --stream or a stream text");
}

int cmd_sum(const Options& o, std::ostream& out) {
    ModulePtr ring = ModulePresentation::ring(Domain{}, require_ideal(o));
    DecayStream f = stream_compile(stream_source(o), ring);
    DecayReport rep = decay_check(f, o.cap);
    if (!rep.pass) {
        out << rep.str();
        return 1;
    }
    print_tower(series_sum(f, o.cap), o.cap, out);
    return 0;
}

int cmd_hom(const Options& o, std::ostream& out) {
    // The stream lives over the target's own ring so its terms can act as
    // scalars on the value family.
    ModulePtr target = o.module_path.empty()
                           ? ModulePresentation::ring(Domain{},
                                                      require_ideal(o))
                           : load_presentation(o.module_path,
                                               degree_budget(o.cap));
    ModulePtr ring = target->rank() == 1 && target->is_free()
                         ? target
                         : ModulePresentation::ring(target->field(),
                                                    target->ideal());
    if (o.gens_path.empty())
        throw CLI::ValidationError("hom needs --gens (the value family)");
    std::vector<TowerElement> fam = load_family(o.gens_path, target);
    DecayStream g = stream_compile(stream_source(o), ring);
    auto family = [fam, target](std::uint64_t z) {
        return z < fam.size() ? fam[z] : TowerElement::zero(target);
    };
    print_tower(hom_apply(g, family, target, o.cap), o.cap, out);
    return 0;
}

int cmd_nakayama(const Options& o, std::ostream& out) {
    ModulePtr M = require_module(o);
    if (o.gens_path.empty())
        throw CLI::ValidationError("nakayama needs --gens (the family file)");
    std::vector<std::pair<std::uint64_t, TowerElement>> family;
    std::uint64_t z = 0;
    for (auto& g : load_family(o.gens_path, M)) family.emplace_back(z++, g);
    auto target_coords = poly_parse_vector(o.exprs[0], M->field(), ',');
    if (target_coords.size() != M->rank())
        throw std::runtime_error("target has the wrong coordinate count");
    TowerElement target =
        TowerElement::from_element(std::move(target_coords), M);

    NakayamaResult r = nakayama_lift(target, family, o.cap);
    if (!r.report.success) {
        out << "FAIL " << r.report.failure << " at level "
            << r.report.fail_level << "\n";
        if (!r.report.witness.empty())
            out << "witness: " << coords_str(r.report.witness) << "\n";
        return 1;
    }
    out << "PASS lift through level " << o.cap << "\n";
    for (auto& [idx, c] : r.coefficients)
        out << "c[" << idx << "] = " << c.str() << "\n";
    return 0;
}

int cmd_basis_lift(const Options& o, std::ostream& out) {
    if (o.module_path.empty())
        throw CLI::ValidationError(
            "basis-lift needs --module (a system file)");
    AdicSystem sys = load_system(o.module_path, degree_budget(o.cap));
    BasisLiftResult r = basis_lift(sys, o.cap);
    if (!r.report.success) {
        out << "FAIL " << r.report.failure << " at level "
            << r.report.fail_level << "\n";
        return 1;
    }
    out << "PASS basis of rank " << r.basis[0].size() << " through level "
        << r.basis.size() - 1 << "\n";
    for (std::size_t i = 0; i < r.basis.size(); ++i)
        for (std::size_t j = 0; j < r.basis[i].size(); ++j)
            out << "level " << i << " b" << j << ": "
                << coords_str(r.basis[i][j]) << "\n";
    return 0;
}

int cmd_check_thm6(const Options& o, std::ostream& out) {
    ModulePtr M = require_module(o);
    bool all = true;
    for (std::uint32_t i = 0; i <= o.cap; ++i) {
        Theorem6Report r = theorem6_check(*M, i);
        bool ok = r.passed();
        all = all && ok;
        out << (ok ? "PASS" : "FAIL") << " level " << i << " surjective="
            << (r.surjective_tau ? "yes" : "no")
            << " kernel=" << (r.kernel_equals_power ? "yes" : "no") << "\n";
    }
    out << "OVERALL " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : 1;
}

int cmd_gallery(const Options& o, std::ostream& out) {
    GalleryReport rep;
    if (o.only.empty()) {
        rep = run_all(o.cap, o.seed);
    } else if (o.only == "example7") {
        std::uint32_t n_max = std::min<std::uint32_t>(6, o.cap - 1);
        rep = verify_example7(n_max, o.cap);
    } else if (o.only == "example5") {
        rep = verify_example5(o.cap);
    } else if (o.only == "example6") {
        rep = verify_example6(o.cap);
    } else if (o.only == "series") {
        rep = verify_restricted_series(1, o.cap);
        rep.merge(verify_restricted_series(2, o.cap));
    } else {
        throw CLI::ValidationError(
            "--only must be one of example5, example6, example7, series");
    }
    out << rep.render(true);
    return rep.overall() ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Options o;
    CLI::App app{"Exact a-adic completion toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, int n_exprs) {
        sub->add_option("--ideal", o.ideal_spec,
                        "ideal spec: 'vars t1 t2', 'vars *', or "
                        "'gens <poly>; ...'");
        sub->add_option("--cap", o.cap, "truncation level bound")
            ->capture_default_str();
        sub->add_option("--module", o.module_path, "presentation file");
        sub->add_option("--gens", o.gens_path, "family file");
        sub->add_option("--stream", o.stream_text, "stream definition");
        sub->add_option("--seed", o.seed, "seed for randomized suites")
            ->capture_default_str();
        sub->add_option("--only", o.only, "restrict gallery to one example");
        if (n_exprs != 0) {
            auto* opt = sub->add_option("exprs", o.exprs, "expressions");
            if (n_exprs > 0) opt->expected(n_exprs)->required();
        }
        return sub;
    };

    auto* c_parse = add_common(
        app.add_subcommand("parse", "print canonical polynomial forms"), -1);
    auto* c_nf = add_common(
        app.add_subcommand("nf", "normal form modulo a^{cap+1}"), 1);
    auto* c_ord = add_common(
        app.add_subcommand("ord", "order of a ring or module element"), 1);
    auto* c_dist = add_common(
        app.add_subcommand("dist", "dyadic distance of two ring elements"),
        2);
    auto* c_sum = add_common(
        app.add_subcommand("sum", "sum a decaying stream to a tower"), -1);
    auto* c_hom = add_common(
        app.add_subcommand(
            "hom", "apply the extension determined by delta values"),
        -1);
    auto* c_nak = add_common(
        app.add_subcommand("nakayama",
                           "lift a target through a generating family"),
        1);
    auto* c_basis = add_common(
        app.add_subcommand("basis-lift", "lift a level-0 basis of a system"),
        0);
    auto* c_check = app.add_subcommand("check", "run a named checker");
    std::string check_what;
    c_check->add_option("what", check_what, "checker name (thm6)")
        ->required();
    add_common(c_check, 0);
    auto* c_gal = add_common(
        app.add_subcommand("gallery", "run the verification gallery"), 0);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_parse)) {
            if (o.exprs.empty())
                throw CLI::ValidationError("parse needs an expression");
            return cmd_parse(o, out);
        }
        if (app.got_subcommand(c_nf)) return cmd_nf(o, out);
        if (app.got_subcommand(c_ord)) return cmd_ord(o, out);
        if (app.got_subcommand(c_dist)) return cmd_dist(o, out);
        if (app.got_subcommand(c_sum)) return cmd_sum(o, out);
        if (app.got_subcommand(c_hom)) return cmd_hom(o, out);
        if (app.got_subcommand(c_nak)) return cmd_nakayama(o, out);
        if (app.got_subcommand(c_basis)) return cmd_basis_lift(o, out);
        if (app.got_subcommand(c_check)) {
            if (check_what != "thm6")
                throw CLI::ValidationError("unknown checker: " + check_what);
            return cmd_check_thm6(o, out);
        }
        if (app.got_subcommand(c_gal)) return cmd_gallery(o, out);
        err << "usage error: no command given\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace adic
