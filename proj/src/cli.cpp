#include "cmvar/cli.hpp"

#include "cmvar/catalogue.hpp"
#include "cmvar/presentation.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cmvar {

namespace {

std::string bracket_table_json() {
    nlohmann::ordered_json j;
    const BracketTable& table = BracketTable::standard();
    for (int i = 1; i <= 14; ++i)
        for (int k = i + 1; k <= 14; ++k)
            j["(" + std::to_string(i) + "," + std::to_string(k) + ")"] = table.entry(i, k).str();
    return j.dump(2) + "\n";
}

std::string relations_text(const RunConfig& cfg) {
    RelationSetName name = relation_set_from_string(cfg.set);
    RelationSet set = relations(name, cfg.v);
    std::ostringstream os;
    os << "# relation set " << set.name;
    if (name == RelationSetName::CM3) os << " (v = " << cfg.v.str() << ")";
    os << "\n";
    for (const auto& [n, p] : set.polys) os << "# " << n << "\n" << p.str() << "\n";
    return os.str();
}

/// Relative output paths land in the directory named by CMVAR_OUTPUT_DIR
/// when that variable is set.
std::filesystem::path resolve_output(const std::string& output) {
    std::filesystem::path p(output);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("CMVAR_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

int emit(const RunConfig& cfg, const std::string& payload, std::ostream& out, std::ostream& err) {
    if (cfg.output.empty()) {
        out << payload;
        return 0;
    }
    auto path = resolve_output(cfg.output);
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path.string() << "\n";
        return 2;
    }
    f << payload;
    return 0;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Exec exec = cfg.parallel ? Exec::openmp : Exec::serial;
        TermOrder ord = order_from_spec(cfg.order);

        std::optional<Report> report;
        if (cfg.command == "verify") {
            if (cfg.subcommand == "cm")
                report = verify_cm(cfg.n, cfg.trials, cfg.seed, exec);
            else if (cfg.subcommand == "com")
                report = verify_com(true, cfg.trials, cfg.seed);
            else if (cfg.subcommand == "brackets")
                report = verify_brackets(cfg.trials, cfg.seed, exec);
            else
                throw std::invalid_argument("verify: unknown target '" + cfg.subcommand + "'");
        } else if (cfg.command == "derive") {
            if (cfg.subcommand != "relations")
                throw std::invalid_argument("derive: unknown target '" + cfg.subcommand + "'");
            report = derive_report(ord);
        } else if (cfg.command == "groebner") {
            if (cfg.subcommand != "check" && cfg.subcommand != "complete")
                throw std::invalid_argument("groebner: unknown mode '" + cfg.subcommand + "'");
            report = groebner_report(ord, cfg.subcommand == "complete", exec);
        } else if (cfg.command == "hilbert") {
            report = hilbert_report(ord, exec);
        } else if (cfg.command == "basis") {
            report = basis_report(ord);
        } else if (cfg.command == "discriminant") {
            report = discriminant_report();
        } else if (cfg.command == "jacobi") {
            report = jacobi_report(cfg.trials, cfg.seed, ord);
        } else if (cfg.command == "identities") {
            report = identities_report(cfg.trials, 20, cfg.seed, exec);
        } else if (cfg.command == "report") {
            if (cfg.subcommand != "all")
                throw std::invalid_argument("report: unknown target '" + cfg.subcommand + "'");
            AllConfig all;
            all.seed = cfg.seed;
            all.trials = cfg.trials;
            all.exec = exec;
            report = report_all(all);
        } else if (cfg.command == "export") {
            if (cfg.subcommand == "relations") return emit(cfg, relations_text(cfg), out, err);
            if (cfg.subcommand == "table") return emit(cfg, bracket_table_json(), out, err);
            throw std::invalid_argument("export: unknown target '" + cfg.subcommand + "'");
        } else {
            throw std::invalid_argument("unknown command '" + cfg.command + "'");
        }

        std::string payload =
            cfg.format == "json" ? report->to_json() : report->to_text();
        int status = emit(cfg, payload, out, err);
        if (status != 0) return status;
        return report->all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cmvar
