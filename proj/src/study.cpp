#include "helmls/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "helmls/solver.hpp"

namespace helmls {

const char* const kCsvHeader =
    "problem,method,d,k,p,n_elems,h,DOF,N_lambda,l2_rel,h1_err,bnd_l2,e1,e2,flux_l2,eoc_l2";

namespace {

constexpr int kDiskBoundarySegments = 16;

std::string g16(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

template <typename T>
T get_field(const nlohmann::json& j, const char* key)
{
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("config field '") + key + "': " + ex.what());
    }
}

} // namespace

StudyMethod parse_method(const std::string& name)
{
    if (name == "fosls") {
        return StudyMethod::Fosls;
    }
    if (name == "fem") {
        return StudyMethod::Fem;
    }
    if (name == "both") {
        return StudyMethod::Both;
    }
    throw ConfigError("method must be fosls, fem or both (got '" + name + "')");
}

std::string method_name(StudyMethod m)
{
    switch (m) {
    case StudyMethod::Fosls:
        return "fosls";
    case StudyMethod::Fem:
        return "fem";
    case StudyMethod::Both:
        return "both";
    }
    return "?";
}

StudyConfig parse_config(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    static const std::set<std::string> known{"problem", "method",    "k",      "degrees",           "mesh_sequence",
                                             "output_dir", "domain", "svg", "avoid_node_at_zero"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) {
            throw ConfigError("unknown config field '" + item.key() + "'");
        }
    }
    StudyConfig c;
    c.problem = get_field<std::string>(j, "problem");
    c.k = get_field<double>(j, "k");
    c.degrees = get_field<std::vector<int>>(j, "degrees");
    c.mesh_sequence = get_field<std::vector<int>>(j, "mesh_sequence");
    if (j.contains("method")) {
        c.method = parse_method(get_field<std::string>(j, "method"));
    }
    if (j.contains("output_dir")) {
        c.output_dir = get_field<std::string>(j, "output_dir");
    }
    if (j.contains("avoid_node_at_zero")) {
        c.avoid_node_at_zero = get_field<bool>(j, "avoid_node_at_zero");
    }
    if (j.contains("domain")) {
        c.domain = get_field<std::string>(j, "domain");
    }
    if (j.contains("svg")) {
        c.write_svg = get_field<bool>(j, "svg");
    }
    return c;
}

StudyConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void validate_config(const StudyConfig& c)
{
    const auto& reg = problem_registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const ProblemInfo& p) { return p.name == c.problem; });
    if (it == reg.end()) {
        throw ConfigError("unknown problem '" + c.problem + "'");
    }
    if (!(c.k >= kMinWavenumber) || !std::isfinite(c.k)) {
        throw ConfigError("k must be a positive number");
    }
    if (c.degrees.empty()) {
        throw ConfigError("degrees must be nonempty");
    }
    for (int p : c.degrees) {
        if (p < 1) {
            throw ConfigError("every degree must be >= 1");
        }
    }
    if (c.mesh_sequence.empty()) {
        throw ConfigError("mesh_sequence must be nonempty");
    }
    const bool disk = it->dim == 2 && c.domain == "disk";
    if (it->dim == 2 && c.domain != "square" && c.domain != "disk") {
        throw ConfigError("domain must be square or disk");
    }
    for (std::size_t i = 0; i < c.mesh_sequence.size(); ++i) {
        if (c.mesh_sequence[i] < (disk ? 0 : 1)) {
            throw ConfigError("mesh_sequence entries must be positive");
        }
        if (i > 0 && c.mesh_sequence[i] <= c.mesh_sequence[i - 1]) {
            throw ConfigError("mesh_sequence must be strictly refining");
        }
    }
    if (c.avoid_node_at_zero) {
        if (c.problem != "piecewise-1d") {
            throw ConfigError("avoid_node_at_zero applies to piecewise-1d only");
        }
        for (int n : c.mesh_sequence) {
            if (n % 2 == 0) {
                throw ConfigError("avoid_node_at_zero requires odd element counts (got " + std::to_string(n) + ")");
            }
        }
    }
}

MeshPtr build_study_mesh(const StudyConfig& config, int level)
{
    if (config.problem == "piecewise-1d") {
        return build_interval_mesh(-1.0, 1.0, level);
    }
    if (config.domain == "disk") {
        return build_polygonal_disk_mesh(kDiskBoundarySegments, level);
    }
    return build_square_mesh(level);
}

StudyResult run_study(const StudyConfig& config)
{
    validate_config(config);
    StudyResult result;
    std::vector<std::string> methods;
    if (config.method != StudyMethod::Fem) {
        methods.push_back("fosls");
    }
    if (config.method != StudyMethod::Fosls) {
        methods.push_back("fem");
    }
    const WaveProblem problem = make_problem(config.problem, config.k);
    if (config.k > 1.0) {
        for (int p : config.degrees) {
            std::ostringstream msg;
            msg << "p = " << p << ": p/log(k) = " << g16(p / std::log(config.k));
            result.warnings.push_back("info: " + msg.str());
        }
    }
    for (const std::string& method : methods) {
        for (int p : config.degrees) {
            std::optional<double> prev_h;
            std::optional<double> prev_err;
            for (int level : config.mesh_sequence) {
                const MeshPtr mesh = build_study_mesh(config, level);
                StudyRow row;
                row.problem = config.problem;
                row.method = method;
                row.d = mesh->dim();
                row.k = config.k;
                row.p = p;
                row.n_elems = mesh->num_elements();
                row.h = mesh->h();
                const double khp = config.k * row.h / p;
                if (khp > 1.0) {
                    std::ostringstream msg;
                    msg << "warning: kh/p = " << g16(khp) << " > 1 (" << method << ", p = " << p
                        << ", n_elems = " << row.n_elems << ")";
                    result.warnings.push_back(msg.str());
                }
                auto w_space = std::make_shared<const FunctionSpace>(build_h1_space(mesh, p));
                try {
                    if (method == "fosls") {
                        auto v_space = std::make_shared<const FunctionSpace>(build_hdiv_space(mesh, p));
                        const AssembledSystem sys = assemble_fosls(*v_space, *w_space, problem);
                        const SolveReport rep = solve_hpd(sys);
                        const DiscreteSolution sol = make_solution(sys, v_space, w_space, rep.solution);
                        row.errors = compute_errors(sol, problem);
                        row.galerkin_residual = galerkin_orthogonality_residual(sol, sys, problem);
                        row.dofs = sys.size();
                        row.solve_residual = rep.relative_residual;
                        row.solver = rep.method;
                        row.iterations = rep.iterations;
                    } else {
                        const AssembledSystem sys = assemble_classical_fem(*w_space, problem);
                        const SolveReport rep = solve_general(sys);
                        const DiscreteSolution sol = make_solution(sys, nullptr, w_space, rep.solution);
                        row.errors = compute_errors(sol, problem);
                        row.dofs = sys.size();
                        row.solve_residual = rep.relative_residual;
                        row.solver = rep.method;
                        row.iterations = rep.iterations;
                    }
                } catch (const SolverError& ex) {
                    std::ostringstream msg;
                    msg << config.problem << " " << method << " p=" << p << " n_elems=" << row.n_elems << ": "
                        << ex.what();
                    throw SolverError(msg.str());
                }
                row.n_lambda = dofs_per_wavelength(row.dofs, config.k, mesh->volume(), mesh->dim());
                if (prev_h) {
                    row.eoc_l2 = std::log(*prev_err / row.errors.l2_rel) / std::log(*prev_h / row.h);
                }
                prev_h = row.h;
                prev_err = row.errors.l2_rel;
                result.rows.push_back(std::move(row));
            }
        }
    }
    return result;
}

ConvergenceTable series_table(const StudyResult& result, const std::string& method, int p)
{
    ConvergenceTable t;
    for (const auto& r : result.rows) {
        if (r.method == method && r.p == p) {
            t.rows.push_back({r.h, r.p, r.k, r.n_elems, r.dofs, r.n_lambda, r.errors});
        }
    }
    return t;
}

std::string format_csv(const StudyResult& result)
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : result.rows) {
        out << r.problem << ',' << r.method << ',' << r.d << ',' << g16(r.k) << ',' << r.p << ',' << r.n_elems << ','
            << g16(r.h) << ',' << r.dofs << ',' << g16(r.n_lambda) << ',' << g16(r.errors.l2_rel) << ','
            << g16(r.errors.h1_err) << ',' << g16(r.errors.bnd_l2) << ',' << g16(r.errors.e1) << ','
            << g16(r.errors.e2) << ',' << g16(r.errors.flux_l2) << ',' << (r.eoc_l2 ? g16(*r.eoc_l2) : "") << '\n';
    }
    return out.str();
}

std::string format_plot_data(const StudyResult& result)
{
    std::ostringstream out;
    out << "series,N_lambda,l2_rel\n";
    for (const auto& r : result.rows) {
        out << r.method << "_p" << r.p << ',' << g16(r.n_lambda) << ',' << g16(r.errors.l2_rel) << '\n';
    }
    return out.str();
}

std::string render_svg(const StudyResult& result)
{
    constexpr double width = 640.0;
    constexpr double height = 480.0;
    constexpr double margin = 60.0;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (const auto& r : result.rows) {
        if (!(r.errors.l2_rel > 0.0)) {
            continue;
        }
        const double x = std::log10(r.n_lambda);
        const double y = std::log10(r.errors.l2_rel);
        series[r.method + " p=" + std::to_string(r.p)].emplace_back(x, y);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax <= xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax <= ymin) {
        ymax = ymin + 1.0;
    }
    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">log10 N_lambda</text>\n";
    out << "<text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 " << height / 2
        << ")\" text-anchor=\"middle\">log10 relative L2 error</text>\n";
    int idx = 0;
    for (const auto& [name, pts] : series) {
        const char* color = colors[idx % 6];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (const auto& [x, y] : pts) {
            out << sx(x) << ',' << sy(y) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - margin - 90 << "\" y=\"" << margin + 16 * idx << "\" fill=\"" << color
            << "\">" << name << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
    return out.str();
}

void write_study_outputs(const StudyConfig& config, const StudyResult& result)
{
    namespace fs = std::filesystem;
    fs::create_directories(config.output_dir);
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[64];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    {
        std::ofstream out(fs::path(config.output_dir) / "results.csv");
        out << "# generated " << stamp << '\n' << format_csv(result);
    }
    {
        std::ofstream out(fs::path(config.output_dir) / "plot_data.csv");
        out << format_plot_data(result);
    }
    if (config.write_svg) {
        std::ofstream out(fs::path(config.output_dir) / "plot.svg");
        out << render_svg(result);
    }
}

} // namespace helmls
