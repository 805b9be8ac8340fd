#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "oracles.hpp"
#include "slicereg/serialization.hpp"

using namespace slicereg;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cli(const std::string& args, const std::string& env = {})
{
    const std::string cmd = env + (env.empty() ? "" : " ") + SLICEREG_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;

    TempDir()
    {
        path = fs::temp_directory_path() / ("slicereg_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }

    ~TempDir() { fs::remove_all(path); }

    static int& counter()
    {
        static int c = 0;
        return c;
    }

    std::string file(const char* name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("series make koebe emits the documented coefficients")
{
    const auto result = run_cli("series make koebe --degree 32");
    REQUIRE(result.exit_code == 0);
    const auto f = series_from_json(json::parse(result.output));
    CHECK(f.degree() == 32);
    for (int n = 0; n <= 32; ++n)
        CHECK(f.coeff(n) == Quaternion::real(n));
}

TEST_CASE("series compose with the identity reproduces the input bytes")
{
    TempDir tmp;
    const auto made = run_cli("series make koebe --degree 8 --out " + tmp.file("k.json"));
    REQUIRE(made.exit_code == 0);
    const auto composed = run_cli("series compose --g " + tmp.file("k.json") + " --w identity --degree 8");
    REQUIRE(composed.exit_code == 0);
    CHECK(composed.output == slurp(tmp.file("k.json")));
}

TEST_CASE("series invert-compose round trips to the identity")
{
    TempDir tmp;
    REQUIRE(run_cli("series make koebe --degree 24 --out " + tmp.file("k.json")).exit_code == 0);
    REQUIRE(run_cli("series invert-compose --g " + tmp.file("k.json") + " --side right --out " +
                    tmp.file("kinv.json"))
                .exit_code == 0);
    const auto composed =
        run_cli("series compose --g " + tmp.file("k.json") + " --w " + tmp.file("kinv.json"));
    REQUIRE(composed.exit_code == 0);
    const auto f = series_from_json(json::parse(composed.output));
    CHECK(max_coeff_dist(f, TruncatedSeries::identity(f.degree())) < 1e-10);
}

TEST_CASE("series make covers the named constructors and transforms")
{
    const auto mobius = run_cli("series make mobius --t 0.5 --degree 8");
    REQUIRE(mobius.exit_code == 0);
    const auto m = series_from_json(json::parse(mobius.output));
    CHECK(m.coeff(0) == Quaternion::real(0.5));
    CHECK(norm(m.coeff(2) - Quaternion::real(0.75 * -0.5)) < 1e-15);

    const auto carat = run_cli("series make caratheodory-extremal --theta 0 --unit i --degree 8");
    REQUIRE(carat.exit_code == 0);
    const auto c = series_from_json(json::parse(carat.output));
    CHECK(norm(c.coeff(4) - Quaternion::real(0.5)) < 1e-15);

    const auto alexander = run_cli("series make alexander --f koebe --degree 8");
    REQUIRE(alexander.exit_code == 0);
    const auto a = series_from_json(json::parse(alexander.output));
    for (int n = 1; n <= 8; ++n)
        CHECK(norm(a.coeff(n) - Quaternion::one()) < 1e-15);

    const auto csv = run_cli("series make koebe --degree 3 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == "n,w,x,y,z\n0,0,0,0,0\n1,1,0,0,0\n2,2,0,0,0\n3,3,0,0,0\n");
}

TEST_CASE("series star-mul and derive")
{
    TempDir tmp;
    REQUIRE(run_cli("series make geometric --degree 12 --out " + tmp.file("geom.json")).exit_code == 0);
    {
        TruncatedSeries one_minus_q(1);
        one_minus_q.at(0) = Quaternion::one();
        one_minus_q.at(1) = Quaternion::real(-1);
        std::ofstream out(tmp.file("omq.json"));
        out << to_json(one_minus_q).dump(2) << "\n";
    }
    const auto prod = run_cli("series star-mul --f " + tmp.file("omq.json") + " --g " +
                              tmp.file("geom.json") + " --degree 12");
    REQUIRE(prod.exit_code == 0);
    const auto telescoped = series_from_json(json::parse(prod.output));
    CHECK(norm(telescoped.coeff(0) - Quaternion::one()) == 0.0);
    for (int n = 1; n <= 12; ++n)
        CHECK(norm(telescoped.coeff(n)) == 0.0);

    const auto derived = run_cli("series derive --f koebe --degree 6");
    REQUIRE(derived.exit_code == 0);
    const auto dk = series_from_json(json::parse(derived.output));
    for (int n = 0; n <= 5; ++n)
        CHECK(dk.coeff(n) == Quaternion::real((n + 1) * (n + 1)));
}

TEST_CASE("series evaluate and classify")
{
    const auto value = run_cli("series evaluate --f koebe --degree 64 --at '[0.5,0,0,0]'");
    REQUIRE(value.exit_code == 0);
    const Quaternion v = quaternion_from_json(json::parse(value.output));
    CHECK(norm(v - Quaternion::real(2)) < 1e-10);

    const auto cls = run_cli("series classify --f koebe --degree 16");
    REQUIRE(cls.exit_code == 0);
    CHECK(json::parse(cls.output)["class"] == "intrinsic");
}

TEST_CASE("series split emits complex component coefficients")
{
    const auto result = run_cli("series split --f koebe --degree 4 --unit i --unit2 j");
    REQUIRE(result.exit_code == 0);
    const auto j = json::parse(result.output);
    REQUIRE(j["f1"].size() == 5);
    CHECK(j["f1"][2][0] == 2.0);
    CHECK(j["f2"][2][0] == 0.0);
}

TEST_CASE("check slice-starlike passes for koebe and injectivity fails for q^2 + qJ")
{
    TempDir tmp;
    const auto star = run_cli("check slice-starlike --series koebe --degree 256 --out " +
                              tmp.file("star.json"));
    CHECK(star.exit_code == 0);
    CHECK(run_cli("check slice-starlike --series koebe --degree 32").exit_code == 0);
    const auto star_report = json::parse(slurp(tmp.file("star.json")));
    CHECK(star_report["passed"] == true);
    CHECK(star_report["config"]["grid"]["seed"].is_number());

    TruncatedSeries f(2);
    f.at(1) = Quaternion{0, 0, 1, 0};
    f.at(2) = Quaternion::one();
    {
        std::ofstream out(tmp.file("q2qj.json"));
        out << to_json(f).dump(2) << "\n";
    }
    const auto inj = run_cli("check injectivity --series " + tmp.file("q2qj.json") + " --unit j --out " +
                             tmp.file("inj.json"));
    CHECK(inj.exit_code == 1);
    const auto report = json::parse(slurp(tmp.file("inj.json")));
    CHECK(report["passed"] == false);
    CHECK(report.contains("witness2"));

    const auto inj_i = run_cli("check injectivity --series " + tmp.file("q2qj.json") + " --unit i");
    CHECK(inj_i.exit_code == 0);
}

TEST_CASE("spirallike at gamma zero reproduces the slice-starlike report")
{
    TempDir tmp;
    {
        TruncatedSeries f(2);
        f.at(1) = Quaternion::one();
        f.at(2) = Quaternion::real(0.25);
        std::ofstream out(tmp.file("f.json"));
        out << to_json(f).dump(2) << "\n";
    }
    const auto star = run_cli("check slice-starlike --series " + tmp.file("f.json"));
    const auto spiral = run_cli("check spirallike --gamma 0 --series " + tmp.file("f.json"));
    REQUIRE(star.exit_code == 0);
    REQUIRE(spiral.exit_code == 0);
    const auto a = json::parse(star.output);
    const auto b = json::parse(spiral.output);
    CHECK(std::abs(a["worst_margin"].get<double>() - b["worst_margin"].get<double>()) < 1e-12);
}

TEST_CASE("verify growth on koebe32 passes with extremal contact")
{
    const auto result = run_cli("verify growth --series koebe --degree 32");
    REQUIRE(result.exit_code == 0);
    const auto report = json::parse(result.output);
    CHECK(report["passed"] == true);
    CHECK(std::abs(report["tightness"].get<double>()) < 1e-8);
    CHECK(report["witness"][0].get<double>() == doctest::Approx(-0.5));
}

TEST_CASE("verify area compares the closed area formula with the contour oracle")
{
    const auto result =
        run_cli("verify area --tail '{\"coeffs\":[[0,0,0,0],[0.5,0,0,0]]}' --resolution 4096");
    REQUIRE(result.exit_code == 0);
    const auto report = json::parse(result.output);
    const double pi = std::acos(-1.0);
    CHECK(report["formula_value"].get<double>() == doctest::Approx(pi * 1.75).epsilon(1e-12));
    CHECK(report["relative_gap"].get<double>() < 0.01);
}

TEST_CASE("verify rogosinski with the half identity")
{
    const auto result = run_cli("verify rogosinski --against koebe --w half-identity --degree 32");
    CHECK(result.exit_code == 0);
    CHECK(json::parse(result.output)["passed"] == true);
}

TEST_CASE("verify m-norm, coeff-bounds and t-transform")
{
    const auto mn = run_cli("verify m-norm --series koebe --degree 64 --kind m-inf-slice --r 0.5 "
                            "--resolution 256");
    REQUIRE(mn.exit_code == 0);
    CHECK(json::parse(mn.output)["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));

    const auto cb = run_cli("verify coeff-bounds --kind bieberbach --series koebe --degree 64");
    REQUIRE(cb.exit_code == 0);
    CHECK(json::parse(cb.output)["tightness"].get<double>() == 0.0);

    const auto tt = run_cli("verify t-transform --series identity --degree 4 --delta 0.5 --samples 101");
    CHECK(tt.exit_code == 0);

    const auto sub = run_cli("verify subordination --against koebe --w half-identity --degree 16 --r 0.5 "
                             "--resolution 32");
    CHECK(sub.exit_code == 0);

    const auto kq = run_cli("verify koebe-quarter --series koebe --degree 64");
    CHECK(kq.exit_code == 0);

    const auto im = run_cli("verify integral-mean --series koebe --degree 64 --r 0.5 --resolution 256");
    CHECK(im.exit_code == 0);
}

TEST_CASE("check accepts a grid file")
{
    TempDir tmp;
    {
        std::ofstream out(tmp.file("grid.json"));
        out << R"({"radii":[0.2,0.4],"angles":16,"unit_count":4,"seed":5})" << "\n";
    }
    const auto result = run_cli("check positive-deriv --series koebe --degree 64 --grid " +
                                tmp.file("grid.json"));
    REQUIRE(result.exit_code == 0);
    const auto report = json::parse(result.output);
    CHECK(report["points_checked"].get<long long>() == 2LL * 16 * 4);
}

TEST_CASE("exit codes partition error classes")
{
    TempDir tmp;
    // 2: unreadable input
    CHECK(run_cli("series star-inv --f " + tmp.file("missing.json")).exit_code == 2);
    {
        std::ofstream out(tmp.file("broken.json"));
        out << "{not json";
    }
    CHECK(run_cli("series star-inv --f " + tmp.file("broken.json")).exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);

    // 2: configuration outside the documented domain
    CHECK(run_cli("series make koebe --degree 0").exit_code == 2);
    {
        std::ofstream out(tmp.file("notareport.json"));
        out << "{\"foo\": 1}";
        fs::create_directories(tmp.path / "baddir");
        fs::copy_file(tmp.file("notareport.json"), tmp.path / "baddir" / "x.json");
    }
    CHECK(run_cli("report --dir " + (tmp.path / "baddir").string() + " --out " + tmp.file("t.csv"))
              .exit_code == 2);

    // 3: math-domain error (geometric series is not normalized)
    CHECK(run_cli("verify growth --series geometric --degree 8").exit_code == 3);
    CHECK(run_cli("series star-inv --f identity --degree 4").exit_code == 3);

    // 4: sampled hypothesis failure (self-crossing boundary curve)
    CHECK(run_cli("verify area --tail '{\"coeffs\":[[0,0,0,0],[0,0,0,0],[2,0,0,0]]}' --resolution 1024")
              .exit_code == 4);
    {
        TruncatedSeries wild(2);
        wild.at(1) = Quaternion::one();
        wild.at(2) = Quaternion::real(2);
        std::ofstream out(tmp.file("wild.json"));
        out << to_json(wild).dump(2) << "\n";
    }
    CHECK(run_cli("verify caratheodory --series " + tmp.file("wild.json")).exit_code == 4);
}

TEST_CASE("report aggregates json reports into csv and margins data")
{
    TempDir tmp;
    const auto reports = tmp.path / "reports";
    fs::create_directories(reports);

    // empty directory: header-only table, exit 0
    REQUIRE(run_cli("report --dir " + reports.string() + " --out " + tmp.file("empty.csv")).exit_code == 0);
    CHECK(slurp(tmp.file("empty.csv")) == "kind,series,passed,margin,points_checked\n");

    REQUIRE(run_cli("verify growth --series koebe --degree 32 --out " + (reports / "growth.json").string())
                .exit_code == 0);
    REQUIRE(run_cli("check slice-starlike --series koebe --degree 256 --out " +
                    (reports / "starlike.json").string())
                .exit_code == 0);

    REQUIRE(run_cli("report --dir " + reports.string() + " --out " + tmp.file("table.csv")).exit_code == 0);
    const auto table = slurp(tmp.file("table.csv"));
    CHECK(table.find("kind,series,passed,margin,points_checked\n") == 0);
    CHECK(table.find("growth,koebe,true") != std::string::npos);
    CHECK(table.find("slice-starlike,koebe,true") != std::string::npos);
    CHECK(fs::exists(tmp.file("table.csv") + std::string(".margins.dat")));

    // stable ordering and byte-identical regeneration
    REQUIRE(run_cli("report --dir " + reports.string() + " --out " + tmp.file("table2.csv")).exit_code == 0);
    CHECK(slurp(tmp.file("table.csv")) == slurp(tmp.file("table2.csv")));
}

TEST_CASE("seeded runs are byte-identical and the environment overrides the seed")
{
    TempDir tmp;
    REQUIRE(run_cli("verify growth --series koebe --degree 32 --seed 7 --out " + tmp.file("a.json"))
                .exit_code == 0);
    REQUIRE(run_cli("verify growth --series koebe --degree 32 --seed 7 --out " + tmp.file("b.json"))
                .exit_code == 0);
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));

    REQUIRE(run_cli("verify growth --series koebe --degree 32 --seed 7 --out " + tmp.file("env.json"),
                    "SLICEREG_SEED=99")
                .exit_code == 0);
    REQUIRE(run_cli("verify growth --series koebe --degree 32 --seed 99 --out " + tmp.file("flag.json"))
                .exit_code == 0);
    CHECK(slurp(tmp.file("env.json")) == slurp(tmp.file("flag.json")));
}

TEST_CASE("csv report format emits flat rows")
{
    const auto result = run_cli("verify growth --series koebe --degree 32 --format csv");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("kind,series,passed,margin,points_checked\n") == 0);
    CHECK(result.output.find("growth,koebe,true,") != std::string::npos);
}
