#include <fuglede/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace
{
    struct FlagSpec
    {
        const char *name;
        const char *help;
    };

    // Subcommand-specific flags; all are read as strings and parsed by the
    // library so that error reporting is uniform.
    const std::map<std::string, std::vector<FlagSpec>> subcommand_flags{
        {"newman", {{"set", "integers, comma separated"}}},
        {"tile-search", {{"set", "integers, comma separated"}}},
        {"pattern",
         {{"lengths", "three piece lengths |A|,|B|,|C| summing to 1"},
          {"motif", "label string to look for, e.g. AA or ABA"}}},
        {"zeroset", {{"omega", "pieces as left:length,..."}, {"lambda", "frequencies, comma separated"}}},
        {"ortho",
         {{"omega", "pieces as left:length,..."},
          {"points", "finite candidate spectrum"},
          {"period", "period of a periodic candidate"},
          {"cosets", "coset representatives of a periodic candidate"}}},
        {"complete",
         {{"set", "unit-cell offsets A"},
          {"mu", "frequencies mu_i in [0,1)"},
          {"omega", "pieces as left:length,..."},
          {"period", "period of a periodic candidate"},
          {"cosets", "coset representatives of a periodic candidate"}}},
        {"construct",
         {{"case", "3, 2a or 2b"},
          {"j", "case 3 exponent"},
          {"r", "r parameter"},
          {"s", "s parameter"},
          {"l", "case 2b exponent"},
          {"n", "case 2a n"},
          {"k", "case 2a k"},
          {"k0", "case 2a k0"}}},
        {"ap",
         {{"omega", "pieces as left:length,..."},
          {"d", "common difference"},
          {"a", "start point (spectrum mode)"},
          {"points", "finite candidate spectrum"},
          {"period", "period of a periodic candidate"},
          {"cosets", "coset representatives of a periodic candidate"}}},
        {"rank", {{"omega", "three pieces as left:length,..."}, {"d", "common difference"}, {"lambda", "frequency"}}},
        {"vansum-classify", {{"vector", "six terms sign:exponent,..."}}},
        {"vansum-enum", {{"pair", "type2, type3, mixed or all"}}},
        {"verify-weight6", {{"cap", "largest admissible order bound (default 60)"}}},
    };

    const std::map<std::string, std::string> subcommand_help{
        {"newman", "decide whether a finite set of integers tiles Z (prime power size)"},
        {"tile-search", "search for a periodic tiling complement by exact cover"},
        {"pattern", "enumerate tiling patterns of three intervals in a window"},
        {"zeroset", "test frequencies for membership in the zero set of Omega"},
        {"ortho", "check orthogonality and completeness of a candidate spectrum"},
        {"complete", "completeness of a unit-cell spectrum via its exponential matrix"},
        {"construct", "build Omega and its spectrum for a tiling family"},
        {"ap", "extend an arithmetic progression and test d-tiling"},
        {"rank", "rank and case of a three-interval set at a frequency"},
        {"vansum-classify", "classify a six-term signed sum of roots of unity"},
        {"vansum-enum", "largest families of pairwise interacting vanishing sums"},
        {"verify-weight6", "check every weight-6 vanishing sum of N-th roots is classified"},
    };
}

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification toolkit for spectral sets and tilings made of intervals"};
    app.require_subcommand(1);

    fuglede::cli::RunConfig cfg;
    std::string window = "12";
    std::map<std::string, std::string> values;

    for (const auto &name : fuglede::cli::subcommands())
    {
        auto *sub = app.add_subcommand(name, subcommand_help.at(name));
        sub->add_option("--input,-i", cfg.input, "JSON input: file path, '-' for stdin, or inline JSON");
        sub->add_option("--window,-W", window, "window W (default 12)");
        sub->add_option("--order,-N", cfg.order_bound, "order bound N (default 60)");
        sub->add_option("--mmax", cfg.max_period, "brute-force period cap (default 4096)");
        sub->add_flag("!--no-filter", cfg.assumption_filter, "disable the Type1 assumption filter");
        sub->add_option("--output,-o", cfg.output, "output path, '-' for stdout");
        for (const auto &f : subcommand_flags.at(name))
            sub->add_option(std::string("--") + f.name, values[f.name], f.help);
    }

    CLI11_PARSE(app, argc, argv);

    auto *chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    for (const auto &f : subcommand_flags.at(cfg.subcommand))
        if (chosen->count(std::string("--") + f.name) > 0)
            cfg.options[f.name] = values[f.name];
    if (chosen->count("--window") > 0)
        cfg.options["window"] = window;

    fuglede::cli::RunResult result;
    try
    {
        cfg.window = fuglede::parse_rational(window);
        result = fuglede::cli::run(cfg);
    }
    catch (const std::invalid_argument &e)
    {
        result.status = fuglede::cli::input_error;
        result.report = {{"error", e.what()}, {"errorKind", "input"}};
    }

    const std::string text = result.report.dump(2) + "\n";
    if (cfg.output == "-")
        std::cout << text;
    else
    {
        std::ofstream out(cfg.output);
        if (!out)
        {
            std::cerr << "cannot write " << cfg.output << "\n";
            return fuglede::cli::input_error;
        }
        out << text;
    }
    if (result.status == fuglede::cli::input_error && result.report.contains("error"))
        std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
    return result.status;
}
