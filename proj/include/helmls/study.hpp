#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helmls/analysis.hpp"

namespace helmls {

/// Invalid study configuration.
class ConfigError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

enum class StudyMethod { Fosls, Fem, Both };

struct StudyConfig {
    std::string problem;
    StudyMethod method = StudyMethod::Fosls;
    double k = 1.0;
    std::vector<int> degrees;
    /// Element counts (1D), squares per side (square), or refinement levels (disk).
    std::vector<int> mesh_sequence;
    std::string output_dir = "study_out";
    bool avoid_node_at_zero = false;
    /// "square" or "disk"; 2D problems only.
    std::string domain = "square";
    bool write_svg = false;
};

/// Parses flat JSON; missing optional fields keep their defaults.
StudyConfig parse_config(const std::string& json_text);
StudyConfig load_config(const std::string& path);
void validate_config(const StudyConfig& config);
StudyMethod parse_method(const std::string& name);
std::string method_name(StudyMethod m);

struct StudyRow {
    std::string problem;
    std::string method; ///< "fosls" or "fem"
    int d = 1;
    double k = 1.0;
    int p = 1;
    int n_elems = 0;
    double h = 0.0;
    int dofs = 0;
    double n_lambda = 0.0;
    ErrorReport errors;
    std::optional<double> eoc_l2;
    double galerkin_residual = 0.0; ///< FOSLS rows only
    double solve_residual = 0.0;
    std::string solver;
    int iterations = 0;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    std::vector<std::string> warnings;
};

MeshPtr build_study_mesh(const StudyConfig& config, int level);

/// Runs every (method, p, mesh) combination; rows are grouped by method, then
/// p, then mesh level.
StudyResult run_study(const StudyConfig& config);

/// Convergence table of one (method, p) series.
ConvergenceTable series_table(const StudyResult& result, const std::string& method, int p);

extern const char* const kCsvHeader;

/// CSV body lines (header included, no timestamp line).
std::string format_csv(const StudyResult& result);
std::string format_plot_data(const StudyResult& result);
std::string render_svg(const StudyResult& result);

/// Writes results.csv, plot_data.csv and optionally plot.svg into
/// config.output_dir; the CSV opens with a "# generated <timestamp>" line.
void write_study_outputs(const StudyConfig& config, const StudyResult& result);

} // namespace helmls
