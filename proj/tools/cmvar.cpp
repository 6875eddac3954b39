#include "cmvar/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using cmvar::RunConfig;

namespace {

struct Options {
    RunConfig cfg;
    std::string v_text = "1";
    bool serial = false;
    int bracket_points = 20;
};

void add_common(CLI::App* app, Options& opt) {
    app->add_option("--seed", opt.cfg.seed, "random seed (default 0)");
    app->add_option("--order", opt.cfg.order, "term order: 'default' or comma list of variables");
    app->add_option("--format", opt.cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app->add_option("--output", opt.cfg.output,
                    "output path (relative paths land in $CMVAR_OUTPUT_DIR)");
    app->add_flag("--serial", opt.serial, "run the sweeps on the serial reference path");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the rank-4 Calogero-Moser space\n"
                 "and the invariant commuting variety of 4x4 matrix pairs"};
    app.require_subcommand(1);

    Options opt;

    auto* verify = app.add_subcommand("verify", "evaluate relation and identity suites");
    verify->require_subcommand(1);
    auto* verify_cm = verify->add_subcommand("cm", "Calogero-Moser relation vanishing");
    verify_cm->add_option("--n", opt.cfg.n, "matrix size (2, 3 or 4)");
    verify_cm->add_option("--trials", opt.cfg.trials, "number of sampled points (default 100)");
    add_common(verify_cm, opt);
    auto* verify_com = verify->add_subcommand("com", "commuting-variety relations, symbolic");
    verify_com->add_option("--trials", opt.cfg.trials, "extra sampled diagonal points");
    add_common(verify_com, opt);
    auto* verify_br =
        verify->add_subcommand("brackets", "bracket table against the necklace pairing");
    verify_br->add_option("--trials", opt.bracket_points, "number of sampled points (default 20)");
    add_common(verify_br, opt);

    auto* derive = app.add_subcommand("derive", "rebuild catalogues from r1");
    derive->require_subcommand(1);
    auto* derive_rel = derive->add_subcommand("relations", "bracket derivation and top components");
    add_common(derive_rel, opt);

    auto* groebner = app.add_subcommand("groebner", "basis certification");
    groebner->require_subcommand(1);
    auto* gb_chk = groebner->add_subcommand("check", "Buchberger criterion on the catalogue");
    add_common(gb_chk, opt);
    auto* gb_full = groebner->add_subcommand("complete", "full completion from the 12 generators");
    add_common(gb_full, opt);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    add_common(hilbert, opt);
    auto* basis = app.add_subcommand("basis", "free-module basis normal forms");
    add_common(basis, opt);
    auto* disc = app.add_subcommand("discriminant", "eigenvalue discriminant identity");
    add_common(disc, opt);
    auto* jacobi = app.add_subcommand("jacobi", "jacobiator identities");
    jacobi->add_option("--trials", opt.cfg.trials, "number of random triples");
    add_common(jacobi, opt);
    auto* idents = app.add_subcommand("identities", "Cayley-Hamilton and trace identity sweeps");
    idents->add_option("--trials", opt.cfg.trials, "number of sampled matrices");
    add_common(idents, opt);

    auto* report = app.add_subcommand("report", "combined suites");
    report->require_subcommand(1);
    auto* report_all = report->add_subcommand("all", "run everything");
    report_all->add_option("--trials", opt.cfg.trials, "points for the vanishing suite (default 100)");
    add_common(report_all, opt);

    auto* exp = app.add_subcommand("export", "write catalogues and tables");
    exp->require_subcommand(1);
    auto* exp_rel = exp->add_subcommand("relations", "relation set in the polynomial text format");
    exp_rel->add_option("--set", opt.cfg.set, "CM2 | CM3 | CM4 | CM4_EXTRA | COM4")->required();
    exp_rel->add_option("--v", opt.v_text, "CM3 parameter (rational, default 1)");
    add_common(exp_rel, opt);
    auto* exp_tab = exp->add_subcommand("table", "bracket table as JSON");
    add_common(exp_tab, opt);

    // Spelled-out aliases for the export surfaces.
    auto* relations = app.add_subcommand("relations", "relation catalogues");
    relations->require_subcommand(1);
    auto* relations_exp = relations->add_subcommand("export", "same as 'export relations'");
    relations_exp->add_option("--set", opt.cfg.set, "CM2 | CM3 | CM4 | CM4_EXTRA | COM4")->required();
    relations_exp->add_option("--v", opt.v_text, "CM3 parameter (rational, default 1)");
    add_common(relations_exp, opt);
    auto* btable = app.add_subcommand("bracket-table", "generator bracket table");
    btable->require_subcommand(1);
    auto* btable_exp = btable->add_subcommand("export", "same as 'export table'");
    add_common(btable_exp, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig& cfg = opt.cfg;
    cfg.parallel = !opt.serial;
    try {
        cfg.v = cmvar::Rational::parse(opt.v_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: --v: " << e.what() << "\n";
        return 2;
    }

    if (verify_cm->parsed()) { cfg.command = "verify"; cfg.subcommand = "cm"; }
    else if (verify_com->parsed()) { cfg.command = "verify"; cfg.subcommand = "com"; }
    else if (verify_br->parsed()) { cfg.command = "verify"; cfg.subcommand = "brackets"; cfg.trials = opt.bracket_points; }
    else if (derive_rel->parsed()) { cfg.command = "derive"; cfg.subcommand = "relations"; }
    else if (gb_chk->parsed()) { cfg.command = "groebner"; cfg.subcommand = "check"; }
    else if (gb_full->parsed()) { cfg.command = "groebner"; cfg.subcommand = "complete"; }
    else if (hilbert->parsed()) { cfg.command = "hilbert"; }
    else if (basis->parsed()) { cfg.command = "basis"; }
    else if (disc->parsed()) { cfg.command = "discriminant"; }
    else if (jacobi->parsed()) { cfg.command = "jacobi"; }
    else if (idents->parsed()) { cfg.command = "identities"; }
    else if (report_all->parsed()) { cfg.command = "report"; cfg.subcommand = "all"; }
    else if (exp_rel->parsed() || relations_exp->parsed()) { cfg.command = "export"; cfg.subcommand = "relations"; }
    else if (exp_tab->parsed() || btable_exp->parsed()) { cfg.command = "export"; cfg.subcommand = "table"; }

    return cmvar::run(cfg, std::cout, std::cerr);
}
