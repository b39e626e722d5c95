#include <CLI11.hpp>
#include <iostream>

#include "ppav/commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Exact lattice constructions of principally polarized abelian varieties"};
    app.require_subcommand(1);
    ppav::RunConfig cfg;
    std::string budget;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "Write the report to a file");
        sub->add_option("--format", cfg.format, "json or text")->capture_default_str();
    };

    CLI::App* quotient = app.add_subcommand("quotient", "Quotients of the standard principal lattice by m.t.i. subgroups");
    quotient->add_option("--g", cfg.g, "Dimension")->required();
    quotient->add_option("--m", cfg.m, "Torsion order")->required();
    quotient->add_option("--mode", cfg.mode, "one or all")->capture_default_str();
    quotient->add_option("--budget", budget, "Largest group order to enumerate");
    common(quotient);

    CLI::App* cover = app.add_subcommand("cover", "Certify the standard cyclic unramified cover");
    cover->add_option("--g", cfg.g, "Base genus")->required();
    cover->add_option("--m", cfg.m, "Degree")->required();
    common(cover);

    CLI::App* welters = app.add_subcommand("welters", "Run the Welters construction on a cover fixture");
    welters->add_option("fixture", cfg.fixture_path, "Cover fixture (JSON)")->required();
    welters->add_option("--k", cfg.k_label, "Subgroup label a:b");
    welters->add_option("--preset", cfg.preset, "jacobian_quotient, prym_quotient or pullback_quotient")
        ->capture_default_str();
    common(welters);

    CLI::App* dims = app.add_subcommand("dims", "Dimension and genus bookkeeping");
    dims->add_option("--g", cfg.g, "Genus")->required();
    dims->add_option("--m", cfg.m, "Degree")->required();
    dims->add_option("--r", cfg.r, "Branch divisor degree")->capture_default_str();
    common(dims);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ppav::exit_validation;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!budget.empty()) {
        if (budget.find_first_not_of("0123456789") != std::string::npos || cfg.budget.set_str(budget, 10) != 0) {
            std::cerr << "invalid input: budget must be a nonnegative integer\n";
            return ppav::exit_validation;
        }
    }
    return ppav::run_command(cfg, std::cout, std::cerr);
}
