#include "hyperforman/pipeline.hpp"

#include "hyperforman/hypernet.hpp"
#include "hyperforman/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hyperforman::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Raised inside a per-input run to stop with a specific exit status.
struct Failure {
    int code;
    std::string message;
};

ordered_json exact(HalfInteger h)
{
    if (h.is_integer())
        return h.twice_value() / 2;
    return h.to_exact_string();
}

std::string count_of(std::size_t n, const char* singular, const char* plural)
{
    return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

std::string join(const FVector& f)
{
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i)
        out += (i ? ", " : "") + std::to_string(f[i]);
    return out + ")";
}

const char* to_string(DegreeMode m) { return m == DegreeMode::in ? "in" : "out"; }
const char* to_string(TriangleMode m) { return m == TriangleMode::transitive ? "transitive" : "cyclic"; }

std::size_t longest_chain(const Poset& p)
{
    std::vector<std::size_t> height(p.size(), 1);
    std::size_t best = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        for (const std::size_t j : p.above(i))
            height[i] = std::max(height[i], height[j] + 1);
        best = std::max(best, height[i]);
    }
    return best;
}

/// Everything derived from one input; built lazily per command.
class Session {
public:
    Session(const RunConfig& cfg, Hypernetwork h, std::string name)
        : cfg_(cfg), h_(std::move(h)), name_(std::move(name))
    {
        if (cfg_.directed && !h_.directed())
            throw Failure{kValidation, "--directed requires a directed hypernetwork"};
        if (!cfg_.directed && (cfg_.degree_mode || cfg_.triangle_mode))
            throw Failure{kValidation, "--degree and --triangles require --directed"};
    }

    const Hypernetwork& network() const { return h_; }
    const std::string& name() const { return name_; }

    const Poset& poset()
    {
        if (!poset_)
            poset_ = poset_from_hypernetwork(h_, cfg_.singletons);
        return *poset_;
    }

    /// Order complex, truncated to --skeleton when given.
    const SimplicialComplex& delta()
    {
        if (!delta_)
            delta_ = order_complex(poset(), cfg_.skeleton_dim, cfg_.chain_cap);
        return *delta_;
    }

    /// Complex the curvature terms live on: the 2-skeleton of the order complex.
    const CurvatureReport& curvature()
    {
        if (!curvature_) {
            std::size_t dim = 2;
            if (cfg_.skeleton_dim)
                dim = std::min<std::size_t>(dim, *cfg_.skeleton_dim);
            curvature_ = gauss_bonnet(order_complex(poset(), dim, cfg_.chain_cap));
            const std::size_t height = longest_chain(poset());
            if (height > 3 && dim == 2)
                curvature_->warnings.push_back("order complex has dimension " + std::to_string(height - 1) +
                                               "; curvature computed on its 2-skeleton");
        }
        return *curvature_;
    }

    std::int64_t geometric_chi() { return geometric_euler_characteristic(h_, cfg_.chain_cap); }

    DirectedConfig directed_config() const
    {
        return {cfg_.degree_mode.value_or(DegreeMode::out), cfg_.triangle_mode.value_or(TriangleMode::transitive)};
    }

private:
    const RunConfig& cfg_;
    Hypernetwork h_;
    std::string name_;
    std::optional<Poset> poset_;
    std::optional<SimplicialComplex> delta_;
    std::optional<CurvatureReport> curvature_;
};

// --- sections -------------------------------------------------------------------

struct ChiRow {
    std::string method;
    std::string description;
    std::optional<std::int64_t> value;
    std::optional<NotRanked> not_ranked;
};

std::vector<ChiRow> chi_rows(Session& s, ChiMethod method, std::optional<std::size_t> skeleton_dim)
{
    std::vector<ChiRow> rows;
    const bool all = method == ChiMethod::all;
    if (all || method == ChiMethod::delta) {
        const std::string skel = skeleton_dim ? "skeleton " + std::to_string(*skeleton_dim) : "full";
        rows.push_back({"delta", "order complex of the poset (" + skel + ")", euler_characteristic(s.delta()), {}});
    }
    if (all || method == ChiMethod::rank) {
        ChiRow row{"rank", "alternating sum of poset rank levels", {}, {}};
        const auto chi = chi_g(s.poset());
        if (const auto* v = std::get_if<std::int64_t>(&chi))
            row.value = *v;
        else
            row.not_ranked = std::get<NotRanked>(chi);
        rows.push_back(row);
    }
    if (all || method == ChiMethod::geometric)
        rows.push_back({"geometric", "union of hypervertex and hyperedge simplices", s.geometric_chi(), {}});
    return rows;
}

ordered_json chi_json(Session& s, const std::vector<ChiRow>& rows)
{
    ordered_json out = ordered_json::object();
    for (const ChiRow& row : rows) {
        ordered_json entry;
        entry["method"] = row.description;
        if (row.value) {
            entry["value"] = *row.value;
        } else {
            const NotRanked& w = *row.not_ranked;
            entry["value"] = nullptr;
            entry["not_ranked"] = {{"element", s.poset().element_label(w.element)},
                                   {"ranks", {w.first_rank, w.second_rank}}};
        }
        out[row.method] = entry;
    }
    return out;
}

ordered_json poset_json(Session& s, bool include_singletons)
{
    const Poset& p = s.poset();
    ordered_json out;
    out["include_singletons"] = include_singletons;
    out["elements"] = ordered_json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        out["elements"].push_back(p.element_label(i));
    out["covers"] = ordered_json::array();
    for (const auto& [lo, hi] : p.covers())
        out["covers"].push_back({lo, hi});
    const auto ranked = rank_function(p);
    if (const auto* r = std::get_if<RankFunction>(&ranked)) {
        out["ranked"] = true;
        out["rank"] = r->rank;
        out["max_rank"] = r->max_rank;
        out["level_counts"] = level_counts(*r);
    } else {
        const auto& w = std::get<NotRanked>(ranked);
        out["ranked"] = false;
        out["not_ranked"] = {{"element", p.element_label(w.element)}, {"ranks", {w.first_rank, w.second_rank}}};
    }
    return out;
}

ordered_json curvature_json(const CurvatureReport& r)
{
    const SimplicialComplex& k = r.complex;
    ordered_json out;
    out["complex"] = "2-skeleton of the order complex";
    out["f_vector"] = k.f_vector();
    out["edges"] = ordered_json::array();
    for (const EdgeCurvature& e : r.edges) {
        out["edges"].push_back({{"edge", k.simplex_label(k.faces(1)[e.edge])},
                                {"triangles", e.triangles},
                                {"parallel", e.parallel},
                                {"ricci", e.ricci},
                                {"ricci_closed", e.ricci_closed},
                                {"agree", e.ricci == e.ricci_closed}});
    }
    out["vertices"] = ordered_json::array();
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v)
        out["vertices"].push_back({{"vertex", k.vertex_label(v)}, {"degree", k.degree(v)}, {"r0", exact(r.r0[v])}});
    out["triangles"] = ordered_json::array();
    for (std::size_t t = 0; t < r.r2.size(); ++t)
        out["triangles"].push_back({{"triangle", k.simplex_label(k.faces(2)[t])}, {"r2", r.r2[t]}});
    out["r2_convention"] = kR2Convention;
    out["closed_form_agrees"] = r.closed_form_agrees();
    out["warnings"] = r.warnings;
    return out;
}

ordered_json gauss_bonnet_json(const CurvatureReport& r)
{
    ordered_json out;
    out["sum_r0"] = exact(r.sum_r0);
    out["sum_ricci"] = r.sum_ricci;
    out["sum_r2"] = r.sum_r2;
    out["chi"] = r.chi;
    out["residual"] = exact(r.gb_residual);
    out["holds"] = r.gb_residual == HalfInteger{0};
    return out;
}

ordered_json filtration_json(const std::vector<FiltrationStep>& steps)
{
    ordered_json out = ordered_json::array();
    for (const auto& s : steps)
        out.push_back({{"threshold", s.threshold},
                       {"f0", s.f_vector[0]},
                       {"f1", s.f_vector[1]},
                       {"f2", s.f_vector[2]},
                       {"chi", s.chi}});
    return out;
}

struct DirectedSummary {
    DirectedComplex complex;
    DirectedConfig cfg;
    std::vector<std::size_t> in_deg, out_deg;
    std::size_t chosen = 0;
    HalfInteger formula;
    std::int64_t count = 0;
};

DirectedSummary directed_summary(Session& s)
{
    DirectedSummary d{directed_complex(s.network()), s.directed_config(), {}, {}, 0, {}, 0};
    const auto& k = d.complex.complex();
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
        d.in_deg.push_back(io_degree(d.complex, v, DegreeMode::in));
        d.out_deg.push_back(io_degree(d.complex, v, DegreeMode::out));
    }
    d.chosen = directed_triangles(d.complex, d.cfg.triangle_mode).size();
    d.formula = chi_directed_formula(d.complex, d.cfg);
    d.count = chi_directed_count(d.complex, d.cfg);
    return d;
}

ordered_json directed_json(const DirectedSummary& d)
{
    const auto& k = d.complex.complex();
    ordered_json out;
    out["degree_mode"] = to_string(d.cfg.degree_mode);
    out["triangle_mode"] = to_string(d.cfg.triangle_mode);
    out["f_vector"] = k.f_vector();
    out["vertices"] = ordered_json::array();
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v)
        out["vertices"].push_back({{"vertex", k.vertex_label(v)}, {"in", d.in_deg[v]}, {"out", d.out_deg[v]}});
    out["arcs"] = ordered_json::array();
    for (std::size_t e = 0; e < k.face_count(1); ++e)
        out["arcs"].push_back({k.vertex_label(d.complex.tail(e)), k.vertex_label(d.complex.head(e))});
    out["chosen_triangles"] = d.chosen;
    out["chi_directed_formula"] = exact(d.formula);
    out["chi_directed_count"] = d.count;
    return out;
}

// --- commands ---------------------------------------------------------------------

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string cmd_validate(Session& s, OutputFormat fmt)
{
    const auto& h = s.network();
    const auto hv = h.hypervertices().size(), he = h.hyperedges().size();
    switch (fmt) {
    case OutputFormat::json:
        return render_json({{"input", s.name()},
                            {"valid", true},
                            {"nodes", h.nodes().size()},
                            {"hypervertices", hv},
                            {"hyperedges", he},
                            {"directed", h.directed()}});
    case OutputFormat::csv:
        return "nodes,hypervertices,hyperedges,directed\n" + std::to_string(h.nodes().size()) + "," +
               std::to_string(hv) + "," + std::to_string(he) + "," + (h.directed() ? "true" : "false") + "\n";
    case OutputFormat::human: break;
    }
    return count_of(h.nodes().size(), "node", "nodes") + ", " + count_of(hv, "hypervertex", "hypervertices") +
           ", " + count_of(he, "hyperedge", "hyperedges") + (h.directed() ? " (directed)" : "") + "\n";
}

std::string cmd_chi(Session& s, const RunConfig& cfg)
{
    const auto rows = chi_rows(s, cfg.chi_method, cfg.skeleton_dim);
    switch (cfg.output) {
    case OutputFormat::json: return render_json({{"input", s.name()}, {"chi", chi_json(s, rows)}});
    case OutputFormat::csv: {
        std::string out = "method,value,description\n";
        for (const auto& r : rows)
            out += r.method + "," + (r.value ? std::to_string(*r.value) : "not-ranked") + "," + r.description + "\n";
        return out;
    }
    case OutputFormat::human: break;
    }
    std::ostringstream out;
    for (const auto& r : rows) {
        out << "chi[" << r.method << "] = ";
        if (r.value) {
            out << *r.value;
        } else {
            out << "not ranked (" << s.poset().element_label(r.not_ranked->element) << " reached with ranks "
                << r.not_ranked->first_rank << " and " << r.not_ranked->second_rank << ")";
        }
        out << "  # " << r.description << "\n";
    }
    return out.str();
}

std::string cmd_curvature_directed(Session& s, OutputFormat fmt)
{
    const auto d = directed_summary(s);
    const auto& k = d.complex.complex();
    switch (fmt) {
    case OutputFormat::json: return render_json({{"input", s.name()}, {"directed", directed_json(d)}});
    case OutputFormat::csv: {
        std::string out = "key,value\n";
        for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
            out += "in_degree[" + k.vertex_label(v) + "]," + std::to_string(d.in_deg[v]) + "\n";
            out += "out_degree[" + k.vertex_label(v) + "]," + std::to_string(d.out_deg[v]) + "\n";
        }
        out += "chosen_triangles," + std::to_string(d.chosen) + "\n";
        out += "chi_directed_formula," + d.formula.to_exact_string() + "\n";
        out += "chi_directed_count," + std::to_string(d.count) + "\n";
        return out;
    }
    case OutputFormat::human: break;
    }
    std::ostringstream out;
    out << "directed complex " << join(k.f_vector()) << ", degrees " << to_string(d.cfg.degree_mode)
        << ", triangles " << to_string(d.cfg.triangle_mode) << "\n";
    out << "vertex  in  out\n";
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v)
        out << k.vertex_label(v) << "  " << d.in_deg[v] << "  " << d.out_deg[v] << "\n";
    out << "chosen triangles: " << d.chosen << "\n";
    out << "chi_directed (closed formula) = " << d.formula.to_exact_string() << "\n";
    out << "chi_directed (face count) = " << d.count << "\n";
    return out.str();
}

std::string cmd_curvature(Session& s, const RunConfig& cfg)
{
    if (cfg.directed)
        return cmd_curvature_directed(s, cfg.output);
    const CurvatureReport& r = s.curvature();
    const SimplicialComplex& k = r.complex;
    switch (cfg.output) {
    case OutputFormat::json: return render_json({{"input", s.name()}, {"curvature", curvature_json(r)}});
    case OutputFormat::csv: {
        std::string out = "edge,triangles,parallel,ricci,ricci_closed,agree\n";
        for (const auto& e : r.edges)
            out += k.simplex_label(k.faces(1)[e.edge]) + "," + std::to_string(e.triangles) + "," +
                   std::to_string(e.parallel) + "," + std::to_string(e.ricci) + "," + std::to_string(e.ricci_closed) +
                   "," + (e.ricci == e.ricci_closed ? "true" : "false") + "\n";
        return out;
    }
    case OutputFormat::human: break;
    }
    std::ostringstream out;
    for (const auto& w : r.warnings)
        out << "warning: " << w << "\n";
    out << "edges: " << r.edges.size() << "\n";
    out << "edge  triangles  parallel  ricci  closed  agree\n";
    for (const auto& e : r.edges)
        out << k.simplex_label(k.faces(1)[e.edge]) << "  " << e.triangles << "  " << e.parallel << "  " << e.ricci
            << "  " << e.ricci_closed << "  " << (e.ricci == e.ricci_closed ? "yes" : "NO") << "\n";
    out << "vertex  degree  R0\n";
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v)
        out << k.vertex_label(v) << "  " << k.degree(v) << "  " << r.r0[v].to_decimal_string() << "\n";
    out << "triangle  R2\n";
    for (std::size_t t = 0; t < r.r2.size(); ++t)
        out << k.simplex_label(k.faces(2)[t]) << "  " << r.r2[t] << "\n";
    return out.str();
}

std::string gauss_bonnet_line(const CurvatureReport& r)
{
    std::ostringstream out;
    const auto lhs = r.sum_r0 - r.sum_ricci + r.sum_r2;
    out << r.sum_r0.to_decimal_string() << " - " << r.sum_ricci << " + " << r.sum_r2 << " = "
        << lhs.to_decimal_string();
    if (r.gb_residual == HalfInteger{0})
        out << " = chi";
    else
        out << " != chi = " << r.chi << " (residual " << r.gb_residual.to_decimal_string() << ")";
    return out.str();
}

std::string cmd_gauss_bonnet(Session& s, OutputFormat fmt, int& exit_code)
{
    const CurvatureReport& r = s.curvature();
    const bool holds = r.gb_residual == HalfInteger{0};
    if (!holds)
        exit_code = kGaussBonnetViolation;
    switch (fmt) {
    case OutputFormat::json: {
        ordered_json j{{"input", s.name()}, {"gauss_bonnet", gauss_bonnet_json(r)}};
        if (!holds)
            j["curvature"] = curvature_json(r);
        return render_json(j);
    }
    case OutputFormat::csv:
        return "sum_r0,sum_ricci,sum_r2,chi,residual\n" + r.sum_r0.to_exact_string() + "," +
               std::to_string(r.sum_ricci) + "," + std::to_string(r.sum_r2) + "," + std::to_string(r.chi) + "," +
               r.gb_residual.to_exact_string() + "\n";
    case OutputFormat::human: break;
    }
    std::ostringstream out;
    for (const auto& w : r.warnings)
        out << "warning: " << w << "\n";
    out << "sum R0 - sum Ric + sum R2 = chi\n" << gauss_bonnet_line(r) << "\n";
    out << "residual " << r.gb_residual.to_decimal_string() << "\n";
    if (!holds) {
        RunConfig full;
        full.output = OutputFormat::human;
        out << cmd_curvature(s, full);
    }
    return out.str();
}

std::string cmd_filtrate(Session& s, OutputFormat fmt)
{
    const auto steps = curvature_filtration(s.curvature().complex);
    switch (fmt) {
    case OutputFormat::json: return render_json({{"input", s.name()}, {"filtration", filtration_json(steps)}});
    case OutputFormat::csv: break;
    case OutputFormat::human: {
        std::ostringstream out;
        out << "threshold  f0  f1  f2  chi\n";
        for (const auto& st : steps)
            out << st.threshold << "  " << st.f_vector[0] << "  " << st.f_vector[1] << "  " << st.f_vector[2] << "  "
                << st.chi << "\n";
        return out.str();
    }
    }
    std::string out = "threshold,f0,f1,f2,chi\n";
    for (const auto& st : steps)
        out += std::to_string(st.threshold) + "," + std::to_string(st.f_vector[0]) + "," +
               std::to_string(st.f_vector[1]) + "," + std::to_string(st.f_vector[2]) + "," + std::to_string(st.chi) +
               "\n";
    return out;
}

std::string cmd_report(Session& s, const RunConfig& cfg, int& exit_code)
{
    const auto& h = s.network();
    ordered_json j;
    j["input"] = {{"name", s.name()},
                  {"nodes", h.nodes().size()},
                  {"hypervertices", h.hypervertices().size()},
                  {"hyperedges", h.hyperedges().size()},
                  {"directed", h.directed()}};
    j["config"] = {{"include_singletons", cfg.singletons},
                   {"skeleton", cfg.skeleton_dim ? ordered_json(*cfg.skeleton_dim) : ordered_json("full")},
                   {"chain_cap", cfg.chain_cap}};
    j["poset"] = poset_json(s, cfg.singletons);
    j["order_complex"] = {{"f_vector", s.delta().f_vector()}, {"chi", euler_characteristic(s.delta())}};
    j["chi"] = chi_json(s, chi_rows(s, ChiMethod::all, cfg.skeleton_dim));
    const CurvatureReport& r = s.curvature();
    j["curvature"] = curvature_json(r);
    j["gauss_bonnet"] = gauss_bonnet_json(r);
    j["filtration"] = filtration_json(curvature_filtration(r.complex));
    if (h.directed())
        j["directed"] = directed_json(directed_summary(s));
    if (r.gb_residual != HalfInteger{0})
        exit_code = kGaussBonnetViolation;
    return render_json(j);
}

CommandResult run_session(Command command, const RunConfig& cfg, const std::string& document, const std::string& name,
                          InputFormat format)
{
    CommandResult result;
    try {
        Session s(cfg, parse(document, format), name);
        switch (command) {
        case Command::validate: result.out = cmd_validate(s, cfg.output); break;
        case Command::chi: result.out = cmd_chi(s, cfg); break;
        case Command::curvature: result.out = cmd_curvature(s, cfg); break;
        case Command::gauss_bonnet: result.out = cmd_gauss_bonnet(s, cfg.output, result.exit_code); break;
        case Command::filtrate: result.out = cmd_filtrate(s, cfg.output); break;
        case Command::report: result.out = cmd_report(s, cfg, result.exit_code); break;
        }
    } catch (const Failure& f) {
        result.exit_code = f.code;
        result.err = "error: " + name + ": " + f.message + "\n";
    } catch (const HypernetError& e) {
        result.exit_code = kValidation;
        result.err = "error: " + name + ": " + e.what() + "\n";
    } catch (const ChainCapExceeded& e) {
        result.exit_code = kResourceCap;
        result.err = "error: " + name + ": chain cap exceeded (cap = " + std::to_string(e.cap()) + ")\n";
    } catch (const UndirectedEdgeError& e) {
        result.exit_code = kValidation;
        result.err = "error: " + name + ": " + e.what() + "\n";
    }
    return result;
}

CommandResult run_file(Command command, const RunConfig& cfg, const std::string& path)
{
    FormatChoice format = cfg.format;
    if (format == FormatChoice::auto_detect) {
        const auto ext = std::filesystem::path(path).extension().string();
        if (ext == ".json")
            format = FormatChoice::json;
        else if (ext == ".hnet")
            format = FormatChoice::text;
        else
            return {kValidation, "", "error: " + path + ": cannot infer format from extension '" + ext +
                                         "' (use .json, .hnet or --format)\n"};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return {kIo, "", "error: " + path + ": cannot open file\n"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        return {kIo, "", "error: " + path + ": read failed\n"};
    return run_on_text(command, cfg, buffer.str(), path, format);
}

} // namespace

std::uint64_t chain_cap_from_environment()
{
    if (const char* env = std::getenv("HYPERFORMAN_CHAIN_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return value;
    }
    return kDefaultChainCap;
}

CommandResult run_on_text(Command command, const RunConfig& config, const std::string& document,
                          const std::string& name, FormatChoice resolved_format)
{
    const InputFormat format = resolved_format == FormatChoice::json ? InputFormat::json : InputFormat::text;
    return run_session(command, config, document, name, format);
}

CommandResult run(Command command, const RunConfig& config)
{
    std::vector<std::future<CommandResult>> pending;
    for (const auto& path : config.inputs)
        pending.push_back(std::async(std::launch::async, [&, path] { return run_file(command, config, path); }));

    std::vector<CommandResult> results;
    for (auto& f : pending)
        results.push_back(f.get());

    CommandResult merged;
    const bool many = results.size() > 1;
    const bool json = config.output == OutputFormat::json || command == Command::report;
    if (many && json) {
        // concatenate the per-input documents into one array
        ordered_json all = ordered_json::array();
        for (const auto& r : results)
            if (!r.out.empty())
                all.push_back(ordered_json::parse(r.out));
        merged.out = render_json(all);
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (!(many && json)) {
            if (many)
                merged.out += "# " + config.inputs[i] + "\n";
            merged.out += r.out;
        }
        merged.err += r.err;
        if (merged.exit_code == kOk)
            merged.exit_code = r.exit_code;
    }
    return merged;
}

} // namespace hyperforman::cli
