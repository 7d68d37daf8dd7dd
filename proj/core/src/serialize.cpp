#include "cantorh/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace cantorh {

std::string format_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

void write_steps_csv(std::ostream& os, int level, BasepointMode mode,
                     const HCurve& curve) {
    os << "level,mode,k,r_lo,r_hi,omega\n";
    for (const auto& st : curve.steps)
        os << level << ',' << to_string(mode) << ',' << st.k << ','
           << format_sig(st.r_lo) << ',' << format_sig(st.r_hi) << ','
           << format_sig(st.omega) << '\n';
}

void write_curve_csv(std::ostream& os, const HCurve& curve) {
    struct Row {
        double r;
        double h;
        bool step;
        int k;
    };
    std::vector<Row> rows;
    for (const auto& st : curve.steps) {
        rows.push_back({st.r_lo, st.omega, true, st.k});
        rows.push_back({st.r_hi, st.omega, true, st.k});
    }
    for (size_t k = 0; k < curve.arcs.size(); ++k)
        for (const auto& pt : curve.arcs[k])
            rows.push_back({pt.r, pt.h, false, static_cast<int>(k) + 1});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.r < b.r || (a.r == b.r && a.h < b.h);
    });
    os << "r,h,segment_type,slit_index\n";
    for (const auto& row : rows)
        os << format_sig(row.r) << ',' << format_sig(row.h) << ','
           << (row.step ? "step" : "arc") << ',' << row.k << '\n';
}

PremapSnapshot make_snapshot(int level, const RunConfig& cfg,
                             const PreimageResult& pre) {
    PremapSnapshot snap;
    snap.level = level;
    snap.nodes = cfg.nodes;
    snap.tol = cfg.map_tol;
    snap.centers = pre.domain.centers;
    snap.radii = pre.domain.radii;
    snap.criterion = pre.criterion;
    snap.iterations = pre.iterations;
    return snap;
}

nlohmann::json snapshot_to_json(const PremapSnapshot& snap) {
    return nlohmann::json{{"level", snap.level},
                          {"nodes", snap.nodes},
                          {"tol", snap.tol},
                          {"centers", snap.centers},
                          {"radii", snap.radii},
                          {"criterion", snap.criterion},
                          {"iterations", snap.iterations}};
}

PremapSnapshot snapshot_from_json(const nlohmann::json& j) {
    PremapSnapshot snap;
    try {
        snap.level = j.at("level").get<int>();
        snap.nodes = j.at("nodes").get<int>();
        snap.tol = j.at("tol").get<double>();
        snap.centers = j.at("centers").get<std::vector<double>>();
        snap.radii = j.at("radii").get<std::vector<double>>();
        snap.criterion = j.at("criterion").get<double>();
        snap.iterations = j.at("iterations").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("snapshot: malformed JSON: ") + e.what());
    }
    if (snap.centers.size() != snap.radii.size() || snap.centers.empty())
        throw ArgumentError("snapshot: centers/radii size mismatch");
    return snap;
}

CircularDomain snapshot_circles(const PremapSnapshot& snap, int level,
                                const RunConfig& cfg) {
    if (snap.level != level || snap.nodes != cfg.nodes ||
        snap.tol != cfg.map_tol)
        throw ConsistencyError(
            "snapshot: key (level, nodes, tol) does not match the requested run");
    CircularDomain d;
    d.centers = snap.centers;
    d.radii = snap.radii;
    d.validate();
    return d;
}

nlohmann::json domain_to_json(const SlitDomain& d) {
    return nlohmann::json{{"level", d.level},
                          {"count", d.count()},
                          {"length", d.length},
                          {"centers", d.centers}};
}

nlohmann::json schedule_to_json(const GapSchedule& g) {
    nlohmann::json gaps = nlohmann::json::array();
    for (const auto& gap : g.gaps)
        gaps.push_back({{"k", gap.k}, {"r_lo", gap.r_lo}, {"r_hi", gap.r_hi}});
    return nlohmann::json{
        {"lead_hi", g.lead_hi}, {"trail_lo", g.trail_lo}, {"gaps", gaps}};
}

nlohmann::json fit_to_json(const FitResult& fit) {
    return nlohmann::json{{"C", fit.C},
                          {"beta", fit.beta},
                          {"E", fit.E},
                          {"rstar", fit.rstar},
                          {"samples", fit.samples.size()}};
}

nlohmann::json growth_to_json(const GrowthFit& fit) {
    return nlohmann::json{{"A", fit.A}, {"b", fit.b}, {"E", fit.E}};
}

} // namespace cantorh
