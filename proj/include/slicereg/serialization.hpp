#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "slicereg/geocheck.hpp"
#include "slicereg/sample_grid.hpp"
#include "slicereg/series.hpp"
#include "slicereg/verify.hpp"

namespace slicereg {

// ordered_json keeps insertion order, so identical inputs serialize to identical
// bytes; report determinism rests on this.
using json = nlohmann::ordered_json;

inline json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

inline Quaternion quaternion_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw std::runtime_error("quaternion must be a JSON array [w, x, y, z]");
    for (const auto& c : j)
        if (!c.is_number())
            throw std::runtime_error("quaternion components must be numbers");
    const Quaternion q{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    if (!is_finite(q))
        throw std::runtime_error("quaternion components must be finite");
    return q;
}

inline json to_json(const UnitImaginary& I) { return json::array({I.x, I.y, I.z}); }

/// Accepts the names i, j, k, diag or an [x, y, z] array (normalized on read).
inline UnitImaginary unit_from_json(const json& j)
{
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "i")
            return UnitImaginary::i();
        if (name == "j")
            return UnitImaginary::j();
        if (name == "k")
            return UnitImaginary::k();
        if (name == "diag")
            return UnitImaginary::diagonal();
        throw std::runtime_error("unknown imaginary unit name: " + name);
    }
    if (!j.is_array() || j.size() != 3)
        throw std::runtime_error("imaginary unit must be i|j|k|diag or [x, y, z]");
    return UnitImaginary::normalized(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

inline json to_json(const TruncatedSeries& f)
{
    json coeffs = json::array();
    for (int n = 0; n <= f.degree(); ++n)
        coeffs.push_back(to_json(f.coeff(n)));
    return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

inline TruncatedSeries series_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw std::runtime_error("series must be {\"degree\": N, \"coeffs\": [[w,x,y,z], ...]}");
    const int degree = j.at("degree").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (degree < 0 || !coeffs.is_array() || static_cast<int>(coeffs.size()) != degree + 1)
        throw std::runtime_error("series needs exactly degree + 1 coefficients");
    std::vector<Quaternion> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs)
        cs.push_back(quaternion_from_json(c));
    return TruncatedSeries(std::move(cs));
}

/// One coefficient per row: n,w,x,y,z.
inline std::string series_to_csv(const TruncatedSeries& f)
{
    std::string out = "n,w,x,y,z\n";
    char line[160];
    for (int n = 0; n <= f.degree(); ++n) {
        const Quaternion a = f.coeff(n);
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g\n", n, a.w, a.x, a.y, a.z);
        out += line;
    }
    return out;
}

inline json to_json(const LaurentTail& tail)
{
    json coeffs = json::array();
    for (const auto& a : tail.coeffs)
        coeffs.push_back(to_json(a));
    return json{{"coeffs", std::move(coeffs)}};
}

inline LaurentTail tail_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw std::runtime_error("tail must be {\"coeffs\": [[w,x,y,z], ...]}");
    std::vector<Quaternion> cs;
    for (const auto& c : j.at("coeffs"))
        cs.push_back(quaternion_from_json(c));
    if (cs.size() < 2)
        throw std::runtime_error("tail needs coefficients a_0..a_M with M >= 1");
    return LaurentTail(std::move(cs));
}

inline json to_json(const SampleGrid& g)
{
    return json{{"radii", g.radii},
                {"angles", g.angles_per_circle},
                {"unit_count", static_cast<int>(g.units.size())},
                {"seed", g.seed}};
}

inline SampleGrid grid_from_json(const json& j)
{
    if (!j.is_object())
        throw std::runtime_error("grid must be an object");
    std::vector<double> radii = j.value("radii", std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9});
    const int angles = j.value("angles", 64);
    const int unit_count = j.value("unit_count", 8);
    const std::uint64_t seed = j.value("seed", kDefaultSeed);
    return SampleGrid::make(std::move(radii), angles, unit_count, seed);
}

inline json to_json(const ConditionReport& r)
{
    json out{{"condition", r.condition},
             {"passed", r.passed},
             {"worst_margin", r.worst_margin},
             {"witness", to_json(r.witness)},
             {"points_checked", r.points_checked},
             {"skipped_singular", r.skipped_singular},
             {"tol", r.tol}};
    if (r.pair_witness)
        out["witness2"] = to_json(r.witness2);
    return out;
}

inline json to_json(const BoundReport& r)
{
    json hyp = json::array();
    for (const auto& h : r.hypotheses)
        hyp.push_back(json{{"name", h.name}, {"status", hypothesis_status_name(h.status)}, {"ok", h.ok}});
    json slacks = json::object();
    for (const auto& [name, value] : r.slacks)
        slacks[name] = value;
    json out{{"bound_kind", r.bound_kind},
             {"passed", r.passed},
             {"max_violation", r.max_violation},
             {"tightness", r.tightness},
             {"witness", to_json(r.witness)},
             {"points_checked", r.points_checked},
             {"skipped_truncated", r.skipped_truncated},
             {"skipped_singular", r.skipped_singular},
             {"tol", r.tol}};
    json params = json::object();
    if (r.r)
        params["r"] = *r.r;
    if (r.p)
        params["p"] = *r.p;
    if (r.theta)
        params["theta"] = *r.theta;
    if (r.unit)
        params["unit"] = to_json(*r.unit);
    out["parameters"] = std::move(params);
    out["hypotheses"] = std::move(hyp);
    out["slacks"] = std::move(slacks);
    return out;
}

} // namespace slicereg
