#include "projcoh/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "projcoh/cochain.hpp"
#include "projcoh/cohomology.hpp"
#include "projcoh/extension.hpp"
#include "projcoh/io.hpp"
#include "projcoh/projrep.hpp"
#include "projcoh/selftest.hpp"

namespace projcoh::cli {

namespace {

using nlohmann::json;

std::string strip_at(const std::string& s) { return !s.empty() && s[0] == '@' ? s.substr(1) : s; }

int parse_positive(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size() || v < 1) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + " '" + text + "' (need a positive integer)");
    }
}

json group_json(const FiniteGroup& g) {
    return json{{"name", g.name()}, {"order", g.order()}};
}

json cochain_json(const Cochain& c) {
    return json{{"degree", c.degree()}, {"modulus", c.modulus()}, {"values", c.values()}};
}

std::string cochain_text(const Cochain& c) {
    std::ostringstream os;
    write_cochain(os, c);
    return os.str();
}

// Shared flags of the cochain-consuming subcommands.
struct CochainArgs {
    std::string group_spec;
    std::int64_t modulus = 0;
    std::string cochain_path;
    bool as_json = false;
};

Cochain load_cochain(const FiniteGroup& g, const CochainArgs& a) {
    Cochain xi = read_cochain_file(strip_at(a.cochain_path), g);
    if (a.modulus != 0 && xi.modulus() != a.modulus)
        throw ParseError("--modulus " + std::to_string(a.modulus) +
                         " disagrees with the cochain file (modulus " +
                         std::to_string(xi.modulus()) + ")");
    return xi;
}

// Normalizes when needed, reporting the shift on `err`.
Cochain ensure_normalized(const Cochain& xi, std::ostream& err) {
    require_cocycle(xi);
    if (is_normalized(xi)) return xi;
    err << "note: cocycle was not normalized; shifted by its value at (e,e)\n";
    return normalize(xi).first;
}

int cmd_h2(const std::string& spec, std::int64_t m, bool as_json, std::ostream& out) {
    const FiniteGroup g = parse_group_spec(spec);
    const CohomologyResult res = second_cohomology(g, m);
    if (as_json) {
        json reps = json::array();
        for (const auto& r : res.representatives) reps.push_back(cochain_json(r));
        out << json{{"command", "h2"},
                    {"group", group_json(g)},
                    {"modulus", m},
                    {"invariant_factors", res.invariant_factors},
                    {"z2_rank", res.z2_rank},
                    {"b2_rank", res.b2_rank},
                    {"representatives", reps}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "H^2(" << g.name() << ", Z" << m << ") = ";
    if (res.invariant_factors.empty()) {
        out << "trivial\n";
    } else {
        for (std::size_t i = 0; i < res.invariant_factors.size(); ++i)
            out << (i ? " x " : "") << "Z" << res.invariant_factors[i];
        out << "\n";
    }
    out << "cocycle space rank " << res.z2_rank << ", coboundary space rank " << res.b2_rank
        << " (as Z" << m << "-modules)\n";
    for (std::size_t i = 0; i < res.representatives.size(); ++i)
        out << "# representative for factor Z" << res.invariant_factors[i] << "\n"
            << cochain_text(res.representatives[i]);
    return kOk;
}

int cmd_trivialize(const CochainArgs& a, std::ostream& out) {
    const FiniteGroup g = parse_group_spec(a.group_spec);
    const Cochain xi = load_cochain(g, a);
    const auto cert = is_coboundary(xi);
    if (a.as_json) {
        json j{{"command", "trivialize"},
               {"group", group_json(g)},
               {"modulus", xi.modulus()},
               {"is_coboundary", static_cast<bool>(cert)}};
        if (cert) j["certificate"] = cert.witness->values();
        else j["obstruction_row"] = cert.obstruction_row;
        out << j.dump(2) << "\n";
    } else if (cert) {
        out << "coboundary: yes; trivializing 1-cochain x with coboundary(x) = xi:\n"
            << cochain_text(*cert.witness);
    } else {
        out << "obstruction: class is nontrivial (inconsistent row "
            << cert.obstruction_row << " of the diagonalized system)\n";
    }
    return cert ? kOk : kNegative;
}

int cmd_equivalent(const CochainArgs& a, const std::string& second_path, std::ostream& out) {
    const FiniteGroup g = parse_group_spec(a.group_spec);
    const Cochain xi = load_cochain(g, a);
    const Cochain xi2 = read_cochain_file(strip_at(second_path), g);
    const auto cert = are_equivalent(xi, xi2);
    if (a.as_json) {
        json j{{"command", "equivalent"},
               {"group", group_json(g)},
               {"modulus", xi.modulus()},
               {"equivalent", static_cast<bool>(cert)}};
        if (cert) j["certificate"] = cert.witness->values();
        else j["obstruction_row"] = cert.obstruction_row;
        out << j.dump(2) << "\n";
    } else if (cert) {
        out << "equivalent: yes; xi' = xi + coboundary(x) with x:\n" << cochain_text(*cert.witness);
    } else {
        out << "equivalent: no (difference class is nontrivial, row " << cert.obstruction_row
            << ")\n";
    }
    return cert ? kOk : kNegative;
}

int cmd_extend(const CochainArgs& a, const std::string& emit_path, std::ostream& out,
               std::ostream& err) {
    const FiniteGroup g = parse_group_spec(a.group_spec);
    const Cochain xi = ensure_normalized(load_cochain(g, a), err);
    const CentralExtension ext = build_extension(g, xi.modulus(), xi);
    if (!emit_path.empty()) write_group_file(emit_path, ext.total);
    if (a.as_json) {
        json j{{"command", "extend"},
               {"group", group_json(g)},
               {"modulus", ext.modulus},
               {"extension_order", ext.total.order()},
               {"abelian", ext.total.is_abelian()}};
        if (!emit_path.empty()) j["table_file"] = emit_path;
        out << j.dump(2) << "\n";
    } else {
        out << "extension of " << g.name() << " by Z" << ext.modulus << ": order "
            << ext.total.order() << ", " << (ext.total.is_abelian() ? "abelian" : "nonabelian")
            << "\n";
        if (!emit_path.empty()) out << "Cayley table written to " << emit_path << "\n";
    }
    return kOk;
}

int cmd_schwinger(int n, bool as_json, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    const UnitaryRep rep = schwinger_rep(n);
    const FactorSystem fs = extract_factor_system(rep, n);
    const auto cert = is_coboundary(fs.exponent);
    const Cochain beta = alternating_pairing(fs.exponent);
    if (as_json) {
        out << json{{"command", "schwinger"},
                    {"n", n},
                    {"modulus", n},
                    {"group", group_json(rep.group)},
                    {"factor_system", fs.exponent.values()},
                    {"residual", fs.residual},
                    {"is_coboundary", static_cast<bool>(cert)},
                    {"pairing_beta_10_01", n == 1 ? 0 : beta(n, 1)}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    const std::string text = cochain_text(fs.exponent);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open '" + out_path + "' for writing");
        f << text;
    } else {
        out << text;
    }
    err << "clock-and-shift factor system on " << rep.group.name() << " (dimension " << n
        << "): residual " << fs.residual << ", "
        << (cert ? "trivial class (genuine after rephasing)" : "nontrivial class") << "\n";
    return kOk;
}

int cmd_regular(const CochainArgs& a, std::ostream& out, std::ostream& err) {
    const FiniteGroup g = parse_group_spec(a.group_spec);
    // Modulus defaults to |G|, which kills every obstruction class of G.
    const std::int64_t m = a.modulus != 0 ? a.modulus : g.order();
    Cochain xi = a.cochain_path.empty() ? Cochain(g, 2, m) : load_cochain(g, a);
    xi = ensure_normalized(xi, err);
    const UnitaryRep rep = twisted_regular_rep(g, xi.modulus(), xi);
    const FactorSystem fs = extract_factor_system(rep, xi.modulus());
    if (!(fs.exponent == xi)) throw Error("internal: extraction round trip failed");
    if (a.as_json) {
        out << json{{"command", "regular"},
                    {"group", group_json(g)},
                    {"modulus", xi.modulus()},
                    {"dim", rep.dim},
                    {"residual", fs.residual},
                    {"roundtrip_exact", true}}
                   .dump(2)
            << "\n";
    } else {
        out << "twisted regular representation of " << g.name() << ": dimension " << rep.dim
            << ", factor-system round trip exact, residual " << fs.residual << "\n";
    }
    return kOk;
}

int cmd_lift(const CochainArgs& a, std::ostream& out, std::ostream& err) {
    const FiniteGroup g = parse_group_spec(a.group_spec);
    const Cochain xi = ensure_normalized(load_cochain(g, a), err);
    const UnitaryRep rep = twisted_regular_rep(g, xi.modulus(), xi);
    const CentralExtension ext = build_extension(g, xi.modulus(), xi);
    const UnitaryRep lifted = lift_to_extension(rep, ext);
    double defect = 0.0;
    for (int h1 = 0; h1 < ext.total.order(); ++h1)
        for (int h2 = 0; h2 < ext.total.order(); ++h2)
            defect = std::max(defect, max_abs(lifted.at(h1) * lifted.at(h2) -
                                              lifted.at(ext.total.op(h1, h2))));
    if (defect >= rep.tolerance) throw Error("lift verification failed: defect too large");
    if (a.as_json) {
        out << json{{"command", "lift"},
                    {"group", group_json(g)},
                    {"modulus", ext.modulus},
                    {"extension_order", ext.total.order()},
                    {"max_homomorphism_defect", defect}}
                   .dump(2)
            << "\n";
    } else {
        out << "lift to the order-" << ext.total.order()
            << " extension is a genuine representation (max defect " << defect << ")\n";
    }
    return kOk;
}

int cmd_rephase(const CochainArgs& a, const std::string& x_path, std::ostream& out,
                std::ostream& err) {
    const FiniteGroup g = parse_group_spec(a.group_spec);
    const Cochain xi = ensure_normalized(load_cochain(g, a), err);
    const UnitaryRep rep = twisted_regular_rep(g, xi.modulus(), xi);

    if (!x_path.empty()) {
        const Cochain x = read_cochain_file(strip_at(x_path), g);
        const UnitaryRep moved = rephase(rep, x);
        const FactorSystem fs = extract_factor_system(moved, xi.modulus());
        if (!(fs.exponent == xi + coboundary(x)))
            throw Error("internal: rephased factor system is not xi + coboundary(x)");
        if (a.as_json) {
            out << json{{"command", "rephase"},
                        {"group", group_json(g)},
                        {"modulus", xi.modulus()},
                        {"factor_system", fs.exponent.values()},
                        {"genuine", fs.exponent.is_zero()}}
                       .dump(2)
                << "\n";
        } else {
            out << "rephased factor system (xi + coboundary(x)):\n" << cochain_text(fs.exponent);
        }
        return kOk;
    }

    // No x supplied: try to remove the phase entirely.
    const auto cert = is_coboundary(xi);
    if (!cert) {
        if (a.as_json) {
            out << json{{"command", "rephase"},
                        {"group", group_json(g)},
                        {"modulus", xi.modulus()},
                        {"genuine", false},
                        {"obstruction_row", cert.obstruction_row}}
                       .dump(2)
                << "\n";
        } else {
            out << "obstruction: no rephasing yields a genuine representation (row "
                << cert.obstruction_row << ")\n";
        }
        return kNegative;
    }
    const UnitaryRep fixed = rephase(rep, -*cert.witness);
    const FactorSystem fs = extract_factor_system(fixed, xi.modulus());
    if (!fs.exponent.is_zero()) throw Error("internal: certificate failed to remove the phase");
    if (a.as_json) {
        out << json{{"command", "rephase"},
                    {"group", group_json(g)},
                    {"modulus", xi.modulus()},
                    {"genuine", true},
                    {"certificate", cert.witness->values()}}
                   .dump(2)
            << "\n";
    } else {
        out << "phase removed: representation is genuine after rephasing by -x, where x:\n"
            << cochain_text(*cert.witness);
    }
    return kOk;
}

int cmd_selftest(std::uint64_t seed, bool as_json, std::ostream& out) {
    const auto results = selftest::run_all(seed);
    if (as_json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"index", r.index},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"seconds", r.seconds},
                               {"budget_seconds", r.budget_seconds},
                               {"detail", r.detail}});
        out << json{{"command", "selftest"},
                    {"seed", seed},
                    {"criteria", arr},
                    {"all_passed", selftest::all_passed(results)}}
                   .dump(2)
            << "\n";
    } else {
        selftest::print_table(out, results);
    }
    return selftest::all_passed(results) ? kOk : kNegative;
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty group spec");
    if (spec[0] == '@') return read_group_file(spec.substr(1));
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "q8") {
        if (!arg.empty()) throw ParseError("group spec 'q8' takes no parameter");
        return quaternion8();
    }
    if (arg.empty())
        throw ParseError("group spec '" + spec + "' needs a parameter, e.g. '" + head + ":4'");
    const int k = parse_positive(arg, "group parameter");
    if (head == "zn") return cyclic(k);
    if (head == "znxzn") return direct_product(cyclic(k), cyclic(k));
    if (head == "dihedral") return dihedral(k);
    if (head == "sym") return symmetric(k);
    throw ParseError("unknown group spec '" + head +
                     "' (use zn:<k>, znxzn:<k>, dihedral:<k>, q8, sym:<k>, or @file)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact 2-cocycle/coboundary toolkit for finite groups, with numerically "
                 "verified projective representations"};
    app.name("projcoh");
    app.require_subcommand(1);

    CochainArgs h2a, tri, eqv, ext, reg, lft, rph;
    std::string eqv_second, ext_emit, rph_x, sch_out;
    int sch_n = 1;
    bool sch_json = false, self_json = false;
    std::uint64_t self_seed = 0;

    auto add_group = [](CLI::App* c, CochainArgs& a, bool need_cochain) {
        c->add_option("--group", a.group_spec, "group spec (zn:<k>, znxzn:<k>, dihedral:<k>, q8, sym:<k>, @file)")
            ->required();
        c->add_option("--modulus", a.modulus, "coefficient modulus m of Z_m");
        auto* opt = c->add_option("--cochain", a.cochain_path, "cochain file (@file)");
        if (need_cochain) opt->required();
        c->add_flag("--json", a.as_json, "machine-readable output");
    };

    auto* c_h2 = app.add_subcommand("h2", "compute H^2(G, Z_m) with representatives");
    add_group(c_h2, h2a, false);
    c_h2->get_option("--modulus")->required();

    auto* c_tri = app.add_subcommand("trivialize", "decide whether a 2-cocycle is a coboundary");
    add_group(c_tri, tri, true);

    auto* c_eqv = app.add_subcommand("equivalent", "decide equivalence of two 2-cocycles");
    add_group(c_eqv, eqv, true);
    c_eqv->add_option("--cochain2", eqv_second, "second cochain file (@file)")->required();

    auto* c_ext = app.add_subcommand("extend", "build the central extension of a cocycle");
    add_group(c_ext, ext, true);
    c_ext->add_option("--emit-table", ext_emit, "write the extension's Cayley table to a file");

    auto* c_sch = app.add_subcommand("schwinger", "clock-and-shift factor system on Z_N x Z_N");
    c_sch->add_option("--n", sch_n, "N (dimension and modulus)")->required()->check(CLI::PositiveNumber);
    c_sch->add_option("--out", sch_out, "write the cochain file here instead of stdout");
    c_sch->add_flag("--json", sch_json, "machine-readable output");

    auto* c_reg = app.add_subcommand("regular", "twisted regular representation round trip");
    add_group(c_reg, reg, false);

    auto* c_lft = app.add_subcommand("lift", "lift a twisted regular representation to its extension");
    add_group(c_lft, lft, true);

    auto* c_rph = app.add_subcommand("rephase", "change representatives by phases; no --x tries to trivialize");
    add_group(c_rph, rph, true);
    c_rph->add_option("--x", rph_x, "1-cochain of phases (@file), must vanish at e");

    auto* c_self = app.add_subcommand("selftest", "run the built-in verification corpus");
    c_self->add_option("--seed", self_seed, "seed for the randomized criteria");
    c_self->add_flag("--json", self_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.push_back("projcoh");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return kInputError;
    }

    try {
        if (c_h2->parsed()) return cmd_h2(h2a.group_spec, h2a.modulus, h2a.as_json, out);
        if (c_tri->parsed()) return cmd_trivialize(tri, out);
        if (c_eqv->parsed()) return cmd_equivalent(eqv, eqv_second, out);
        if (c_ext->parsed()) return cmd_extend(ext, ext_emit, out, err);
        if (c_sch->parsed()) return cmd_schwinger(sch_n, sch_json, sch_out, out, err);
        if (c_reg->parsed()) return cmd_regular(reg, out, err);
        if (c_lft->parsed()) return cmd_lift(lft, out, err);
        if (c_rph->parsed()) return cmd_rephase(rph, rph_x, out, err);
        if (c_self->parsed()) return cmd_selftest(self_seed, self_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: no subcommand\n";
    return kInputError;
}

}  // namespace projcoh::cli
