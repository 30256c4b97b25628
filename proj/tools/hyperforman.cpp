// hyperforman: hypernetwork -> poset -> simplicial complex -> curvature.

#include "hyperforman/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace hyperforman;
using namespace hyperforman::cli;

namespace {

struct Flags {
    std::vector<std::string> inputs;
    std::string format = "auto";
    bool no_singletons = false;
    std::string skeleton = "full";
    std::string chi_method = "all";
    bool directed = false;
    std::string degree;
    std::string triangles;
    std::string output = "human";
    std::optional<std::uint64_t> chain_cap;
};

void add_common(CLI::App* cmd, Flags& f)
{
    cmd->add_option("inputs", f.inputs, "hypernetwork files (.json or .hnet)")->required();
    cmd->add_option("--format", f.format, "input format")
        ->check(CLI::IsMember({"json", "text", "auto"}))
        ->capture_default_str();
    cmd->add_flag("--no-singletons", f.no_singletons, "leave single nodes out of the poset");
    cmd->add_option("--skeleton", f.skeleton, "order complex dimension cap: <d> or full")->capture_default_str();
    cmd->add_option("--chi-method", f.chi_method, "Euler characteristic route")
        ->check(CLI::IsMember({"delta", "rank", "geometric", "all"}))
        ->capture_default_str();
    cmd->add_flag("--directed", f.directed, "use edge directions (directed input only)");
    cmd->add_option("--degree", f.degree, "directed degree: in or out")->check(CLI::IsMember({"in", "out"}));
    cmd->add_option("--triangles", f.triangles, "oriented triangles: transitive or cyclic")
        ->check(CLI::IsMember({"transitive", "cyclic"}));
    cmd->add_option("--output", f.output, "output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    cmd->add_option("--chain-cap", f.chain_cap, "maximum number of chains to enumerate")
        ->check(CLI::PositiveNumber);
}

RunConfig to_config(const Flags& f)
{
    RunConfig cfg;
    cfg.inputs = f.inputs;
    cfg.format = f.format == "json" ? FormatChoice::json
                 : f.format == "text" ? FormatChoice::text
                                      : FormatChoice::auto_detect;
    cfg.singletons = !f.no_singletons;
    if (f.skeleton != "full") {
        std::size_t used = 0;
        const long long d = std::stoll(f.skeleton, &used);
        if (used != f.skeleton.size() || d < 0)
            throw CLI::ValidationError("--skeleton", "expected a non-negative integer or 'full'");
        cfg.skeleton_dim = static_cast<std::size_t>(d);
    }
    static const std::map<std::string, ChiMethod> methods{
        {"delta", ChiMethod::delta}, {"rank", ChiMethod::rank}, {"geometric", ChiMethod::geometric}, {"all", ChiMethod::all}};
    cfg.chi_method = methods.at(f.chi_method);
    cfg.directed = f.directed;
    if (!f.degree.empty())
        cfg.degree_mode = f.degree == "in" ? DegreeMode::in : DegreeMode::out;
    if (!f.triangles.empty())
        cfg.triangle_mode = f.triangles == "cyclic" ? TriangleMode::cyclic : TriangleMode::transitive;
    cfg.output = f.output == "json" ? OutputFormat::json : f.output == "csv" ? OutputFormat::csv : OutputFormat::human;
    cfg.chain_cap = f.chain_cap.value_or(chain_cap_from_environment());
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Euler characteristics and Forman Ricci curvature of hypernetworks"};
    app.require_subcommand(1);

    Flags flags;
    const std::pair<const char*, Command> commands[] = {
        {"validate", Command::validate},         {"chi", Command::chi},
        {"curvature", Command::curvature},       {"gauss-bonnet", Command::gauss_bonnet},
        {"filtrate", Command::filtrate},         {"report", Command::report},
    };
    const char* descriptions[] = {
        "check an input file", "Euler characteristic by each route", "per-edge Forman Ricci curvature",
        "verify the Gauss-Bonnet balance", "curvature sublevel filtration", "all-in-one JSON report",
    };
    std::map<CLI::App*, Command> by_app;
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].first, descriptions[i]);
        add_common(sub, flags);
        by_app[sub] = commands[i].second;
    }

    RunConfig cfg;
    try {
        app.parse(argc, argv);
        cfg = to_config(flags);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }

    Command command = Command::validate;
    for (const auto& [sub, cmd] : by_app)
        if (sub->parsed())
            command = cmd;

    const CommandResult result = run(command, cfg);
    std::cout << result.out << std::flush;
    std::cerr << result.err << std::flush;
    return result.exit_code;
}
