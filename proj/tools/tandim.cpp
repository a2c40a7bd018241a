#include "tandim/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    tandim::RunConfig cfg;
    CLI::App app{"tandim: dimension and tangent-structure checks on finite categories"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", cfg.out, "write the JSON report here");
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* vd = app.add_subcommand("verify-dim", "sampled admissible squares against a dimension");
    vd->add_option("--category", cfg.category)->required();
    vd->add_option("--dim", cfg.dimension);
    vd->add_option("--monoid", cfg.monoid);
    vd->add_option("--budget", cfg.budget);
    common(vd);

    auto* ct = app.add_subcommand("check-tangent", "axiom suite and universality for a structure");
    ct->add_option("--category", cfg.category)->required();
    ct->add_option("--structure", cfg.structure)->required();
    ct->add_option("--depth", cfg.depth);
    common(ct);

    auto* ob = app.add_subcommand("obstruct", "weak and strong dimension obstructions");
    ob->add_option("--category", cfg.category);
    ob->add_option("--endofunctor", cfg.endofunctor);
    ob->add_option("--dim", cfg.dimension);
    common(ob);

    auto* sf = app.add_subcommand("search-finsetop", "Cartesian tangent structures on FinSet^op");
    sf->add_option("--max-card", cfg.max_card);
    common(sf);

    auto* bt = app.add_subcommand("betti", "Betti numbers of simplicial complexes");
    bt->add_option("--in", cfg.inputs)->required();
    common(bt);

    auto* cp = app.add_subcommand("compute", "pullback, pushout, snf, char, rank, abelianization");
    cp->add_option("--in", cfg.inputs)->required();
    common(cp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    auto result = tandim::execute(cfg);
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return 2;
        }
        f << result.document.dump(2) << "\n";
        (result.exit_code == 2 ? std::cerr : std::cout) << result.summary << "\n";
    } else if (result.exit_code == 2) {
        std::cerr << result.summary << "\n";
    } else {
        std::cout << tandim::render(result, cfg.format);
    }
    return result.exit_code;
}
