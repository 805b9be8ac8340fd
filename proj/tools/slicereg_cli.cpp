// slicereg: batch CLI for quaternionic slice regular power series.
//
// Subcommands:
//   series make|star-mul|star-inv|compose|invert-compose|derive|evaluate|split|classify
//   check  <condition>   pointwise grid predicates -> report JSON, exit 0 pass / 1 fail
//   verify <kind>        quantitative bound verifiers -> report JSON
//   report               aggregate report JSONs into a CSV table + gnuplot margins file
//
// Exit codes: 0 pass, 1 bound/check fail, 2 input error, 3 math-domain error,
// 4 sampled theorem hypothesis fail.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "slicereg/serialization.hpp"
#include "slicereg/slicereg.hpp"

namespace {

using namespace slicereg;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitHypothesis = 4;

struct RunConfig {
    int degree = 64;
    double tol = kVerifyTol;
    std::vector<double> radii = {0.1, 0.3, 0.5, 0.7, 0.9};
    int angles = 64;
    int unit_count = 8;
    std::uint64_t seed = kDefaultSeed;
    int resolution = 256;
    std::string format = "json";
    std::string out;
    std::string grid_spec = "default";

    json to_json() const
    {
        return json{{"degree", degree}, {"tol", tol},
                    {"grid", json{{"radii", radii}, {"angles", angles}, {"unit_count", unit_count}, {"seed", seed}}},
                    {"resolution", resolution}, {"format", format}};
    }

    SampleGrid grid() const
    {
        if (grid_spec != "default") {
            std::ifstream in(grid_spec);
            if (!in)
                throw std::runtime_error("cannot open grid file: " + grid_spec);
            json j;
            in >> j;
            return grid_from_json(j);
        }
        return SampleGrid::make(radii, angles, unit_count, seed);
    }
};

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--degree", cfg.degree, "truncation degree N");
    cmd->add_option("--tol", cfg.tol, "tolerance");
    cmd->add_option("--radii", cfg.radii, "grid radii in (0,1)")->delimiter(',');
    cmd->add_option("--angles", cfg.angles, "angles per circle");
    cmd->add_option("--units", cfg.unit_count, "number of imaginary units");
    cmd->add_option("--seed", cfg.seed, "grid seed");
    cmd->add_option("--resolution", cfg.resolution, "quadrature resolution");
    cmd->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out, "output path (stdout when omitted)");
    cmd->add_option("--grid", cfg.grid_spec, "default or a grid JSON file");
}

void apply_seed_env(RunConfig& cfg)
{
    if (const char* env = std::getenv("SLICEREG_SEED"))
        cfg.seed = std::strtoull(env, nullptr, 10);
}

UnitImaginary parse_unit(const std::string& text)
{
    if (text == "i")
        return UnitImaginary::i();
    if (text == "j")
        return UnitImaginary::j();
    if (text == "k")
        return UnitImaginary::k();
    if (text == "diag")
        return UnitImaginary::diagonal();
    return unit_from_json(json::parse(text));
}

json read_json_arg(const std::string& arg)
{
    if (!arg.empty() && arg.front() == '{')
        return json::parse(arg);
    std::ifstream in(arg);
    if (!in)
        throw std::runtime_error("cannot open file: " + arg);
    json j;
    in >> j;
    return j;
}

/// A series argument is a builtin name, an inline JSON object, or a file path.
TruncatedSeries load_series(const std::string& arg, const RunConfig& cfg)
{
    if (arg == "koebe")
        return koebe(cfg.degree);
    if (arg == "identity")
        return TruncatedSeries::identity(std::max(2, cfg.degree));
    if (arg == "half-identity")
        return TruncatedSeries::monomial(1, Quaternion::real(0.5), std::max(2, cfg.degree));
    if (arg == "geometric")
        return geometric(cfg.degree);
    if (arg == "caratheodory-extremal")
        return caratheodory_extremal(0.0, UnitImaginary::i(), cfg.degree);
    return series_from_json(read_json_arg(arg));
}

void write_output(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write: " + cfg.out);
    out << text;
    if (text.empty() || text.back() != '\n')
        out << '\n';
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string report_to_csv(const json& report)
{
    const bool is_bound = report.contains("bound_kind");
    const std::string kind = is_bound ? report["bound_kind"].get<std::string>()
                                      : report["condition"].get<std::string>();
    const double margin =
        is_bound ? report["tightness"].get<double>() : report["worst_margin"].get<double>();
    char row[512];
    std::snprintf(row, sizeof row, "%s,%s,%s,%.17g,%lld\n", csv_escape(kind).c_str(),
                  csv_escape(report.value("series", std::string{})).c_str(),
                  report["passed"].get<bool>() ? "true" : "false", margin,
                  static_cast<long long>(report["points_checked"].get<long long>()));
    return std::string("kind,series,passed,margin,points_checked\n") + row;
}

void emit_report(const RunConfig& cfg, json report, const std::string& series_name)
{
    report["series"] = series_name;
    report["config"] = cfg.to_json();
    if (cfg.format == "csv")
        write_output(cfg, report_to_csv(report));
    else
        write_output(cfg, report.dump(2));
}

// ---------------------------------------------------------------- series ----

int run_series(const std::string& sub, const RunConfig& cfg, const std::map<std::string, std::string>& args)
{
    const auto arg = [&](const char* key) -> std::string {
        auto it = args.find(key);
        return it == args.end() ? std::string{} : it->second;
    };
    const auto need = [&](const char* key) -> std::string {
        const std::string v = arg(key);
        if (v.empty())
            throw std::runtime_error(std::string("missing required option --") + key);
        return v;
    };

    if (sub == "make") {
        const std::string name = need("name");
        TruncatedSeries out(0);
        if (name == "caratheodory-extremal") {
            const double theta = arg("theta").empty() ? 0.0 : std::stod(arg("theta"));
            const UnitImaginary I = arg("unit").empty() ? UnitImaginary::i() : parse_unit(arg("unit"));
            out = caratheodory_extremal(theta, I, cfg.degree);
        } else if (name == "mobius") {
            out = mobius_series(std::stod(need("t")), cfg.degree);
        } else if (name == "dilation") {
            out = dilation(load_series(need("f"), cfg), std::stod(need("r")));
        } else if (name == "rotate-conjugate") {
            out = rotate_conjugate(load_series(need("f"), cfg), quaternion_from_json(json::parse(need("rotor"))));
        } else if (name == "alexander") {
            out = alexander_op(load_series(need("f"), cfg));
        } else if (name == "libera") {
            out = libera_op(load_series(need("f"), cfg));
        } else if (name == "ratio") {
            const SampleGrid grid = cfg.grid();
            out = ratio_transform(load_series(need("f"), cfg), std::stod(need("a")), &grid);
        } else if (name == "odd-sqrt") {
            out = odd_sqrt_transform(load_series(need("f"), cfg));
        } else {
            out = load_series(name, cfg); // koebe, identity, half-identity, geometric
        }
        write_output(cfg, cfg.format == "csv" ? series_to_csv(out) : to_json(out).dump(2));
        return kExitPass;
    }
    if (sub == "star-mul") {
        const auto f = load_series(need("f"), cfg);
        const auto g = load_series(need("g"), cfg);
        write_output(cfg, to_json(star_mul(f, g, cfg.degree)).dump(2));
        return kExitPass;
    }
    if (sub == "star-inv") {
        write_output(cfg, to_json(star_inverse(load_series(need("f"), cfg))).dump(2));
        return kExitPass;
    }
    if (sub == "compose") {
        const auto g = load_series(need("g"), cfg);
        const auto w = load_series(need("w"), cfg);
        write_output(cfg, to_json(bullet_compose(g, w, std::max(g.degree(), w.degree()))).dump(2));
        return kExitPass;
    }
    if (sub == "invert-compose") {
        const auto g = load_series(need("g"), cfg);
        const std::string side = arg("side").empty() ? "right" : arg("side");
        if (side != "left" && side != "right")
            throw std::runtime_error("--side must be left or right");
        write_output(cfg, to_json(bullet_inverse(g, side == "right" ? InverseSide::Right : InverseSide::Left))
                              .dump(2));
        return kExitPass;
    }
    if (sub == "derive") {
        write_output(cfg, to_json(slice_derivative(load_series(need("f"), cfg))).dump(2));
        return kExitPass;
    }
    if (sub == "evaluate") {
        const auto f = load_series(need("f"), cfg);
        const Quaternion q = quaternion_from_json(json::parse(need("at")));
        Quaternion value;
        if (!arg("phi").empty()) {
            const UnitImaginary I = arg("unit").empty() ? UnitImaginary::i() : parse_unit(arg("unit"));
            value = rotation_eval(f, std::stod(arg("phi")), I, q);
        } else {
            value = evaluate(f, q);
        }
        write_output(cfg, to_json(value).dump());
        return kExitPass;
    }
    if (sub == "split") {
        const auto f = load_series(need("f"), cfg);
        const UnitImaginary I = arg("unit").empty() ? UnitImaginary::i() : parse_unit(arg("unit"));
        const UnitImaginary J = arg("unit2").empty() ? orthogonal_unit(I) : parse_unit(arg("unit2"));
        const auto sp = split_coefficients(f, I, J);
        json f1 = json::array();
        json f2 = json::array();
        for (size_t n = 0; n < sp.f1.size(); ++n) {
            f1.push_back(json::array({sp.f1[n].real(), sp.f1[n].imag()}));
            f2.push_back(json::array({sp.f2[n].real(), sp.f2[n].imag()}));
        }
        write_output(cfg, json{{"unit_i", to_json(sp.I)}, {"unit_j", to_json(sp.J)}, {"f1", f1}, {"f2", f2}}
                              .dump(2));
        return kExitPass;
    }
    if (sub == "classify") {
        const auto cls = classify(load_series(need("f"), cfg));
        json out;
        switch (cls.kind) {
            case SeriesKind::Intrinsic: out = json{{"class", "intrinsic"}}; break;
            case SeriesKind::SlicePreserving:
                out = json{{"class", "slice-preserving"}, {"unit", to_json(cls.plane)}};
                break;
            case SeriesKind::General: out = json{{"class", "general"}}; break;
        }
        write_output(cfg, out.dump(2));
        return kExitPass;
    }
    throw std::runtime_error("unknown series subcommand: " + sub);
}

// ----------------------------------------------------------------- check ----

int run_check(const std::string& cond, const RunConfig& cfg, const std::string& series_arg,
              double gamma, const std::string& unit_arg, double separation)
{
    const auto f = load_series(series_arg, cfg);
    const SampleGrid grid = cfg.grid();
    ConditionReport report;
    if (cond == "injectivity") {
        const UnitImaginary I = unit_arg.empty() ? UnitImaginary::i() : parse_unit(unit_arg);
        report = check_injectivity_slice(f, I, grid, separation);
    } else {
        Condition c;
        if (cond == "positive-deriv")
            c = Condition::PositiveDerivRealPart;
        else if (cond == "slice-starlike")
            c = Condition::SliceStarlike;
        else if (cond == "slice-convex")
            c = Condition::SliceConvex;
        else if (cond == "spirallike")
            c = Condition::Spirallike;
        else if (cond == "bounded-rotation")
            c = Condition::BoundedRotation;
        else if (cond == "p-class")
            c = Condition::PClassRatio;
        else
            throw std::runtime_error("unknown check condition: " + cond);
        report = check_condition(f, c, grid, cfg.tol == kVerifyTol ? kConditionTol : cfg.tol,
                                 SpiralParams{gamma});
    }
    emit_report(cfg, to_json(report), series_arg);
    return report.passed ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- verify ----

int run_verify(const std::string& kind, const RunConfig& cfg, const std::map<std::string, std::string>& args)
{
    const auto arg = [&](const char* key) -> std::string {
        auto it = args.find(key);
        return it == args.end() ? std::string{} : it->second;
    };
    const auto need = [&](const char* key) -> std::string {
        const std::string v = arg(key);
        if (v.empty())
            throw std::runtime_error(std::string("missing required option --") + key);
        return v;
    };
    const double r = arg("r").empty() ? 0.5 : std::stod(arg("r"));
    const double p = arg("p").empty() ? 2.0 : std::stod(arg("p"));
    const UnitImaginary I = arg("unit").empty() ? UnitImaginary::i() : parse_unit(arg("unit"));

    BoundReport report;
    std::string series_name = arg("series");
    if (kind == "caratheodory" || kind == "distortion" || kind == "growth" || kind == "rotation-ratio") {
        const auto f = load_series(need("series"), cfg);
        EnvelopeKind ek = EnvelopeKind::Caratheodory;
        if (kind == "distortion")
            ek = EnvelopeKind::Distortion;
        else if (kind == "growth")
            ek = EnvelopeKind::Growth;
        else if (kind == "rotation-ratio")
            ek = EnvelopeKind::RotationRatio;
        report = verify_envelope(f, ek, cfg.grid(), cfg.tol);
    } else if (kind == "integral-mean") {
        report = integral_mean_bound(load_series(need("series"), cfg), I, r, cfg.resolution, cfg.tol);
    } else if (kind == "koebe-quarter") {
        report = koebe_quarter(load_series(need("series"), cfg), cfg.grid(), cfg.tol);
    } else if (kind == "area") {
        const LaurentTail tail = tail_from_json(read_json_arg(need("tail")));
        const auto cmp = area_complement(tail, I, cfg.resolution);
        const double denom = std::max(std::abs(cmp.formula_value), 1e-12);
        const double rel = std::abs(cmp.formula_value - cmp.oracle_value) / denom;
        json out{{"bound_kind", "area"},
                 {"passed", rel < 0.01},
                 {"formula_value", cmp.formula_value},
                 {"oracle_value", cmp.oracle_value},
                 {"relative_gap", rel},
                 {"points_checked", cfg.resolution}};
        emit_report(cfg, out, arg("tail"));
        return rel < 0.01 ? kExitPass : kExitFail;
    } else if (kind == "coeff-bounds") {
        const std::string which = need("kind");
        CoeffBoundKind ck;
        if (which == "area-sum")
            ck = CoeffBoundKind::AreaSum;
        else if (which == "bieberbach")
            ck = CoeffBoundKind::Bieberbach;
        else if (which == "starlike")
            ck = CoeffBoundKind::StarlikeCoeff;
        else if (which == "convex")
            ck = CoeffBoundKind::ConvexCoeff;
        else
            throw std::runtime_error("unknown coeff-bounds kind: " + which);
        TruncatedSeries f(0);
        if (ck == CoeffBoundKind::AreaSum && !arg("tail").empty()) {
            series_name = arg("tail");
            f = TruncatedSeries(tail_from_json(read_json_arg(arg("tail"))).coeffs);
        } else {
            f = load_series(need("series"), cfg);
        }
        report = coefficient_bounds(f, ck);
    } else if (kind == "rogosinski") {
        const auto g = load_series(need("against"), cfg);
        const auto w = load_series(need("w"), cfg);
        const auto sub = build_subordinate(g, w, cfg.grid());
        report = rogosinski(sub.f, g);
        series_name = arg("against");
    } else if (kind == "m-norm") {
        const auto f = load_series(need("series"), cfg);
        const std::string which = arg("kind").empty() ? "m-inf-slice" : arg("kind");
        NormKind nk;
        if (which == "m-inf")
            nk = NormKind::MInf;
        else if (which == "m-p")
            nk = NormKind::MP;
        else if (which == "m-inf-slice")
            nk = NormKind::MInfSlice;
        else if (which == "m-p-slice")
            nk = NormKind::MPSlice;
        else
            throw std::runtime_error("unknown m-norm kind: " + which);
        const double value = m_norm(f, nk, r, cfg.resolution, p, I);
        json out{{"bound_kind", "m-norm"},
                 {"passed", true},
                 {"norm_kind", which},
                 {"value", value},
                 {"r", r},
                 {"p", p},
                 {"mp_paper_normalization", "1/(4pi)"},
                 {"mp_measure_total", mp_measure_total(r)},
                 {"points_checked", cfg.resolution}};
        emit_report(cfg, out, arg("series"));
        return kExitPass;
    } else if (kind == "subordination") {
        const auto g = load_series(need("against"), cfg);
        TruncatedSeries f(0);
        if (!arg("w").empty()) {
            const auto sub = build_subordinate(g, load_series(arg("w"), cfg), cfg.grid());
            f = sub.f;
        } else {
            f = load_series(need("series"), cfg);
        }
        report = subordination_suite(f, g, I, r, p, std::min(cfg.resolution, 64));
        series_name = arg("series").empty() ? arg("against") : arg("series");
    } else if (kind == "t-transform") {
        const double delta = arg("delta").empty() ? 0.5 : std::stod(arg("delta"));
        const int samples = arg("samples").empty() ? 101 : std::stoi(arg("samples"));
        report = t_transform_bounds(load_series(need("series"), cfg), delta, samples, cfg.tol);
    } else {
        throw std::runtime_error("unknown verify kind: " + kind);
    }

    emit_report(cfg, to_json(report), series_name);
    return report.passed ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- report ----

int run_report(const std::string& dir, const std::string& out_path, std::string margins_path)
{
    namespace fs = std::filesystem;
    if (margins_path.empty())
        margins_path = out_path + ".margins.dat";
    std::vector<json> reports;
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) {
        std::ifstream in(path);
        json j;
        try {
            in >> j;
        } catch (const json::exception&) {
            throw std::runtime_error("not a report JSON: " + path);
        }
        if (!j.is_object() || (!j.contains("condition") && !j.contains("bound_kind")))
            throw std::runtime_error("schema mismatch: " + path);
        reports.push_back(std::move(j));
    }
    // stable ordering by (kind, series name)
    std::sort(reports.begin(), reports.end(), [](const json& a, const json& b) {
        const auto kind = [](const json& r) {
            return r.contains("bound_kind") ? r["bound_kind"].get<std::string>()
                                            : r["condition"].get<std::string>();
        };
        const auto series = [](const json& r) { return r.value("series", std::string{}); };
        return std::make_pair(kind(a), series(a)) < std::make_pair(kind(b), series(b));
    });

    std::string csv = "kind,series,passed,margin,points_checked\n";
    std::string margins;
    for (const auto& rj : reports) {
        const bool is_bound = rj.contains("bound_kind");
        const std::string kind =
            is_bound ? rj["bound_kind"].get<std::string>() : rj["condition"].get<std::string>();
        double margin = 0.0;
        if (is_bound && rj.contains("tightness"))
            margin = rj["tightness"].get<double>();
        else if (rj.contains("worst_margin"))
            margin = rj["worst_margin"].get<double>();
        else if (rj.contains("relative_gap"))
            margin = rj["relative_gap"].get<double>();
        char row[512];
        std::snprintf(row, sizeof row, "%s,%s,%s,%.17g,%lld\n", csv_escape(kind).c_str(),
                      csv_escape(rj.value("series", std::string{})).c_str(),
                      rj["passed"].get<bool>() ? "true" : "false", margin,
                      static_cast<long long>(rj.value("points_checked", 0LL)));
        csv += row;
        char mrow[512];
        std::snprintf(mrow, sizeof mrow, "%s/%s %.17g\n", kind.c_str(),
                      rj.value("series", std::string{}).c_str(), margin);
        margins += mrow;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write: " + out_path);
    out << csv;
    std::ofstream mout(margins_path, std::ios::binary);
    if (!mout)
        throw std::runtime_error("cannot write: " + margins_path);
    mout << margins;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"calculus and geometric verification of slice regular quaternionic power series"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::map<std::string, std::string> extra;
    const auto opt = [&](CLI::App* cmd, const char* name, const char* help) {
        cmd->add_option(std::string("--") + name, extra[name], help);
    };

    // series
    auto* series_cmd = app.add_subcommand("series", "construct and combine series");
    series_cmd->require_subcommand(1);
    std::vector<CLI::App*> series_subs;
    for (const char* sub : {"make", "star-mul", "star-inv", "compose", "invert-compose", "derive",
                            "evaluate", "split", "classify"}) {
        auto* c = series_cmd->add_subcommand(sub);
        add_common(c, cfg);
        if (std::string(sub) == "make")
            c->add_option("name", extra["name"], "builtin or transform name")->required();
        for (const char* key : {"f", "g", "w", "side", "at", "theta", "unit", "unit2", "t", "r", "a",
                                "rotor", "phi"})
            opt(c, key, "");
        series_subs.push_back(c);
    }

    // check
    auto* check_cmd = app.add_subcommand("check", "grid predicates");
    std::string check_cond, check_series, check_unit;
    double check_gamma = 0.0;
    double check_separation = kDefaultSeparation;
    check_cmd->add_option("condition", check_cond,
                          "positive-deriv|slice-starlike|slice-convex|spirallike|bounded-rotation|"
                          "p-class|injectivity")
        ->required();
    check_cmd->add_option("--series", check_series)->required();
    check_cmd->add_option("--gamma", check_gamma, "spiral type");
    check_cmd->add_option("--unit", check_unit, "slice for injectivity");
    check_cmd->add_option("--separation", check_separation, "injectivity separation scale");
    add_common(check_cmd, cfg);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "quantitative bound verifiers");
    std::string verify_kind;
    verify_cmd->add_option("verify_kind", verify_kind,
                           "caratheodory|distortion|growth|rotation-ratio|integral-mean|koebe-quarter|"
                           "area|coeff-bounds|rogosinski|m-norm|subordination|t-transform")
        ->required();
    add_common(verify_cmd, cfg);
    for (const char* key : {"series", "tail", "against", "w", "r", "p", "unit", "kind", "delta", "samples"})
        opt(verify_cmd, key, "");

    // report
    auto* report_cmd = app.add_subcommand("report", "aggregate report JSONs");
    std::string report_dir, report_out, report_margins;
    report_cmd->add_option("--dir", report_dir)->required();
    report_cmd->add_option("--out", report_out)->required();
    report_cmd->add_option("--margins", report_margins, "margins data file (default <out>.margins.dat)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    apply_seed_env(cfg);
    if (cfg.degree < 1 || !(cfg.tol > 0.0) || cfg.resolution < 2) {
        std::cerr << "input error: need --degree >= 1, --tol > 0, --resolution >= 2\n";
        return kExitInput;
    }

    try {
        if (series_cmd->parsed()) {
            for (auto* c : series_subs)
                if (c->parsed())
                    return run_series(c->get_name(), cfg, extra);
        }
        if (check_cmd->parsed())
            return run_check(check_cond, cfg, check_series, check_gamma, check_unit, check_separation);
        if (verify_cmd->parsed())
            return run_verify(verify_kind, cfg, extra);
        if (report_cmd->parsed())
            return run_report(report_dir, report_out, report_margins);
        std::cerr << "no subcommand\n";
        return kExitInput;
    } catch (const DomainFault& e) {
        std::cerr << "math-domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const HypothesisFault& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}
