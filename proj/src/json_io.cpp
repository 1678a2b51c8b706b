#include "wallchamber/json_io.hpp"

#include "wallchamber/errors.hpp"

namespace wallchamber {

namespace {

long long to_int64(const Integer& x) {
    if (!x.fits_slong_p())
        throw InternalError("integer " + x.get_str() + " does not fit in a JSON int64");
    return x.get_si();
}

} // namespace

Json to_json(std::span<const Integer> v) {
    auto arr = Json::array();
    for (const auto& x : v)
        arr.push_back(to_int64(x));
    return arr;
}

Json to_json(const std::vector<IntVec>& rows) {
    auto arr = Json::array();
    for (const auto& r : rows)
        arr.push_back(to_json(std::span<const Integer>(r)));
    return arr;
}

Json to_json(const Cone& c) {
    Json j;
    j["rays"] = to_json(c.rays());
    j["lineality"] = to_json(c.lineality());
    j["ineqs"] = to_json(c.ineqs());
    j["eqs"] = to_json(c.eqs());
    j["dim"] = c.dim();
    j["lineality_dim"] = c.lineality_dim();
    return j;
}

Json to_json(const SegmentHit& hit) {
    Json j;
    j["kind"] = to_string(hit.kind);
    if (hit.kind == HitKind::point || hit.kind == HitKind::subsegment) {
        j["t_lo"] = to_string(hit.t_lo);
        j["t_hi"] = to_string(hit.t_hi);
    } else {
        j["t_lo"] = nullptr;
        j["t_hi"] = nullptr;
    }
    return j;
}

Json to_json(const SchurReport& report) {
    Json j;
    j["d"] = report.d.entries();
    j["euler_self"] = report.label.euler_self;
    j["root_kind"] = to_string(report.label.kind);
    j["wall_dim"] = report.wall_dim;
    j["is_schur"] = report.is_schur;
    j["is_multiple_of_schur"] = report.is_multiple_of_schur;
    return j;
}

Json to_json(const TfVerdict& verdict) {
    Json j;
    j["verdict"] = to_string(verdict.kind);
    j["bound"] = verdict.bound;
    if (verdict.witness) {
        Json w;
        w["d"] = verdict.witness->d.entries();
        w["hit"] = to_json(verdict.witness->hit);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json chamber_report_json(const std::vector<Chamber>& chambers) {
    auto list = Json::array();
    for (const auto& ch : chambers) {
        Json c;
        c["rays"] = to_json(ch.g_matrix);
        c["det"] = to_int64(ch.det);
        c["cells"] = ch.cells.size();
        list.push_back(std::move(c));
    }
    auto coverage = check_fan_coverage(chambers);
    auto unimodular = check_unimodular(chambers);
    Json summary;
    summary["chambers"] = chambers.size();
    summary["facets_shared"] = coverage.facets_shared;
    summary["coverage"] = coverage.pass ? "pass" : "fail";
    summary["unimodular"] = unimodular.pass ? "pass" : "fail";
    Json out;
    out["chambers"] = std::move(list);
    out["summary"] = std::move(summary);
    return out;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace wallchamber
