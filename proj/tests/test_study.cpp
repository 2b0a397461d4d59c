#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "helmls/study.hpp"

using namespace helmls;

namespace {

StudyConfig piecewise_config()
{
    StudyConfig c;
    c.problem = "piecewise-1d";
    c.method = StudyMethod::Fosls;
    c.k = 10.0;
    c.degrees = {1};
    c.mesh_sequence = {5, 15, 45};
    c.avoid_node_at_zero = true;
    return c;
}

std::filesystem::path temp_dir(const std::string& name)
{
    const auto d = std::filesystem::temp_directory_path() / ("helmls_test_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(STUDY_EXE) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(StudyConfig, ParseAndDefaults)
{
    const StudyConfig c = parse_config(R"({"problem":"piecewise-1d","k":10,"degrees":[1,2],"mesh_sequence":[5,15]})");
    EXPECT_EQ(c.problem, "piecewise-1d");
    EXPECT_EQ(c.method, StudyMethod::Fosls);
    EXPECT_EQ(c.degrees, (std::vector<int>{1, 2}));
    EXPECT_FALSE(c.avoid_node_at_zero);
    EXPECT_NO_THROW(validate_config(c));
}

TEST(StudyConfig, Rejections)
{
    EXPECT_THROW(parse_config("{"), ConfigError);
    EXPECT_THROW(parse_config(R"({"problem":"piecewise-1d","k":1,"degrees":[1]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"problem":"piecewise-1d","k":1,"degrees":[1],"mesh_sequence":[5],"bogus":1})"),
                 ConfigError);
    EXPECT_THROW(parse_method("galerkin"), ConfigError);

    StudyConfig c = piecewise_config();
    c.degrees = {};
    EXPECT_THROW(validate_config(c), ConfigError);
    c = piecewise_config();
    c.degrees = {0};
    EXPECT_THROW(validate_config(c), ConfigError);
    c = piecewise_config();
    c.mesh_sequence = {15, 5};
    EXPECT_THROW(validate_config(c), ConfigError);
    c = piecewise_config();
    c.mesh_sequence = {5, 5};
    EXPECT_THROW(validate_config(c), ConfigError);
    c = piecewise_config();
    c.mesh_sequence = {5, 10};
    EXPECT_THROW(validate_config(c), ConfigError);
    c = piecewise_config();
    c.problem = "nope";
    EXPECT_THROW(validate_config(c), ConfigError);
    c = piecewise_config();
    c.k = -1.0;
    EXPECT_THROW(validate_config(c), ConfigError);
}

TEST(Study, PiecewiseRows)
{
    const StudyResult r = run_study(piecewise_config());
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_FALSE(r.rows[0].eoc_l2.has_value());
    EXPECT_TRUE(r.rows[1].eoc_l2.has_value());
    EXPECT_TRUE(r.rows[2].eoc_l2.has_value());
    for (const auto& row : r.rows) {
        EXPECT_LE(row.galerkin_residual, 1e-8);
        EXPECT_LE(row.solve_residual, 1e-10);
        EXPECT_EQ(row.d, 1);
    }
    EXPECT_EQ(r.rows[0].n_elems, 5);
    EXPECT_EQ(r.rows[0].dofs, 12);
}

TEST(Study, BothDoublesRows)
{
    StudyConfig c = piecewise_config();
    c.method = StudyMethod::Both;
    const StudyResult r = run_study(c);
    ASSERT_EQ(r.rows.size(), 6u);
    EXPECT_EQ(r.rows[0].method, "fosls");
    EXPECT_EQ(r.rows[3].method, "fem");
}

TEST(Study, CsvFormatAndReproducibility)
{
    const StudyResult a = run_study(piecewise_config());
    const StudyResult b = run_study(piecewise_config());
    const std::string csv = format_csv(a);
    EXPECT_EQ(csv, format_csv(b));
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "problem,method,d,k,p,n_elems,h,DOF,N_lambda,l2_rel,h1_err,bnd_l2,e1,e2,flux_l2,eoc_l2");
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 15);
    EXPECT_EQ(line.back(), ','); // no EOC on the first row
    EXPECT_NE(format_plot_data(a).find("fosls_p1"), std::string::npos);
    EXPECT_NE(render_svg(a).find("<svg"), std::string::npos);
}

TEST(Study, KhOverPWarning)
{
    // kh/p = 10 * 0.4 = 4 at n = 5; 10 * 2/15 = 1.33 at n = 15; 10 * 2/45 < 1 at n = 45
    const StudyResult r = run_study(piecewise_config());
    int warnings = 0;
    for (const auto& w : r.warnings) {
        warnings += w.rfind("warning: kh/p", 0) == 0 ? 1 : 0;
    }
    EXPECT_EQ(warnings, 2);
    StudyConfig c = piecewise_config();
    c.k = 1.0;
    c.mesh_sequence = {5, 15};
    const StudyResult quiet = run_study(c);
    for (const auto& w : quiet.warnings) {
        EXPECT_NE(w.rfind("warning: kh/p", 0), 0u);
    }
}

TEST(Study, PlaneWaveFemRows)
{
    StudyConfig c;
    c.problem = "plane-wave-2d";
    c.method = StudyMethod::Fem;
    c.k = 2.0;
    c.degrees = {1, 2};
    c.mesh_sequence = {2, 4, 8};
    const StudyResult r = run_study(c);
    ASSERT_EQ(r.rows.size(), 6u);
    for (int p : {1, 2}) {
        const OrderEstimate e = empirical_order(series_table(r, "fem", p));
        EXPECT_NEAR(e.pairwise.back(), p + 1.0, 0.3);
    }
}

TEST(Study, DiskDomainRuns)
{
    StudyConfig c;
    c.problem = "plane-wave-2d";
    c.method = StudyMethod::Both;
    c.k = 2.0;
    c.degrees = {1};
    c.mesh_sequence = {0, 1};
    c.domain = "disk";
    const StudyResult r = run_study(c);
    EXPECT_EQ(r.rows.size(), 4u);
    EXPECT_LT(r.rows[1].errors.l2_rel, r.rows[0].errors.l2_rel);
}

TEST(Study, WritesOutputs)
{
    StudyConfig c = piecewise_config();
    c.write_svg = true;
    c.output_dir = temp_dir("outputs").string();
    write_study_outputs(c, run_study(c));
    std::ifstream in(std::filesystem::path(c.output_dir) / "results.csv");
    std::string first;
    std::string second;
    std::getline(in, first);
    std::getline(in, second);
    EXPECT_EQ(first.rfind("# generated ", 0), 0u);
    EXPECT_EQ(second, kCsvHeader);
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(c.output_dir) / "plot_data.csv"));
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(c.output_dir) / "plot.svg"));
}

TEST(StudyCli, ExitCodes)
{
    const auto dir = temp_dir("cli");
    EXPECT_EQ(run_cli("list-problems"), 0);

    const auto good = dir / "good.json";
    std::ofstream(good) << R"({"problem":"piecewise-1d","method":"fosls","k":10,"degrees":[1],"mesh_sequence":[5,15],)"
                        << R"("avoid_node_at_zero":true,"output_dir":")" << (dir / "out").string() << "\"}";
    EXPECT_EQ(run_cli("run " + good.string()), 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "out" / "results.csv"));
    EXPECT_EQ(run_cli("run " + good.string() + " --method both --k 3 --out " + (dir / "out2").string()), 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "out2" / "results.csv"));

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << R"({"problem":"piecewise-1d","k":10,"degrees":[1],"mesh_sequence":[4,8],"avoid_node_at_zero":true})";
    EXPECT_EQ(run_cli("run " + bad.string()), 2);
    EXPECT_EQ(run_cli("run " + (dir / "missing.json").string()), 2);
    EXPECT_EQ(run_cli("run " + good.string() + " --method nope"), 2);
}
