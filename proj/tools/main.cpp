// Command-line interface for the harmonic-measure distribution library.
//
// Subcommands:
//   steps        plateau heights of the distribution over the gaps
//   curve        full distribution curve (plateaus + arc samples)
//   asymptotics  near-threshold power-law fits across levels
//   validate     internal consistency checks; exit 0 iff all pass
//   premap       converged circle preimage, saved as a reusable snapshot
//
// Metadata is printed as JSON on stdout; tabular results go to --output as
// CSV (or stdout when no file is given).  Errors are reported as JSON on
// stderr with a machine-readable kind.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantorh/cantorh.hpp"

namespace {

using cantorh::BasepointMode;
using nlohmann::json;

// Rounds to the documented 12 significant digits so JSON and CSV agree.
double sig12(double v) { return std::stod(cantorh::format_sig(v, 12)); }

json sig12_list(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values)
        arr.push_back(sig12(v));
    return arr;
}

struct CommonOpts {
    cantorh::RunConfig cfg;
    std::string basepoint = "left";
    std::string output;
    std::string snapshot;
};

void add_config_flags(CLI::App* cmd, CommonOpts& o, bool with_level = true) {
    if (with_level)
        cmd->add_option("--level", o.cfg.level,
                        "Subdivision level (2^level slits)")
            ->required();
    cmd->add_option("--basepoint", o.basepoint,
                    "Observation basepoint: left or center")
        ->check(CLI::IsMember({"left", "center"}));
    cmd->add_option("--nodes", o.cfg.nodes,
                    "Grid nodes per circle (power of two)");
    cmd->add_option("--map-tol", o.cfg.map_tol, "Preimage stopping tolerance");
    cmd->add_option("--max-iter", o.cfg.max_iter, "Preimage iteration cap");
    cmd->add_option("--solver-tol", o.cfg.solver_tol,
                    "Linear solver relative tolerance");
    cmd->add_option("--solver-maxit", o.cfg.solver_maxit,
                    "Linear solver iteration cap");
    cmd->add_option("--samples-per-slit", o.cfg.samples_per_slit,
                    "Arc samples per intersected slit");
    cmd->add_option("--asym-eps", o.cfg.asym_eps,
                    "Near-threshold sampling window");
    cmd->add_option("--asym-count", o.cfg.asym_count,
                    "Near-threshold sample count");
}

cantorh::RunConfig resolve_config(const CommonOpts& o) {
    cantorh::RunConfig cfg = o.cfg;
    cfg.basepoint = o.basepoint == "center" ? BasepointMode::Center
                                            : BasepointMode::LeftExterior;
    cfg.validate();
    return cfg;
}

cantorh::PremapSnapshot load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw cantorh::ArgumentError("cannot open snapshot file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw cantorh::ArgumentError(std::string("snapshot: invalid JSON: ") +
                                     e.what());
    }
    return cantorh::snapshot_from_json(j);
}

cantorh::Pipeline make_pipeline(const CommonOpts& o) {
    const cantorh::RunConfig cfg = resolve_config(o);
    const cantorh::SlitDomain d = cantorh::cantor_level(cfg.level);
    const cantorh::Basepoint b = cfg.make_basepoint();
    if (!o.snapshot.empty()) {
        const cantorh::PremapSnapshot snap = load_snapshot(o.snapshot);
        const cantorh::CircularDomain circles =
            cantorh::snapshot_circles(snap, cfg.level, cfg);
        return cantorh::build_pipeline_from_circles(d, b, cfg, circles);
    }
    return cantorh::build_pipeline(d, b, cfg);
}

json preimage_json(const cantorh::Pipeline& p) {
    return json{{"iterations", p.pre.iterations},
                {"criterion", sig12(p.pre.criterion)},
                {"max_slit_residual", sig12(p.pre.max_slit_residual)},
                {"nu_spread", sig12(p.pre.map.nu_spread)}};
}

// Writes CSV through `emit`; returns the metadata location field.
// No --output: the CSV goes to stdout and no metadata JSON is printed.
template <typename Emit>
bool write_table(const std::string& output, Emit emit) {
    if (output.empty()) {
        emit(std::cout);
        return false;
    }
    std::ofstream out(output);
    if (!out)
        throw cantorh::ArgumentError("cannot open output file: " + output);
    emit(out);
    return true;
}

int run_steps(const CommonOpts& o) {
    const cantorh::Pipeline p = make_pipeline(o);
    const cantorh::HCurve curve =
        cantorh::build_curve(p, p.config.samples_per_slit);
    const bool to_file = write_table(o.output, [&](std::ostream& os) {
        cantorh::write_steps_csv(os, p.config.level, p.basepoint.mode, curve);
    });
    if (to_file) {
        json meta{{"command", "steps"},
                  {"level", p.config.level},
                  {"mode", cantorh::to_string(p.basepoint.mode)},
                  {"slits", p.m()},
                  {"nodes", p.config.nodes},
                  {"preimage", preimage_json(p)},
                  {"zeta0", sig12(p.zeta0)},
                  {"heights", sig12_list(cantorh::step_heights(p))},
                  {"output", o.output}};
        std::cout << meta.dump(2) << '\n';
    }
    return 0;
}

int run_curve(const CommonOpts& o) {
    const cantorh::Pipeline p = make_pipeline(o);
    const cantorh::HCurve curve =
        cantorh::build_curve(p, p.config.samples_per_slit);
    const cantorh::ContinuityReport cont = cantorh::continuity_audit(p);
    const bool to_file = write_table(o.output, [&](std::ostream& os) {
        cantorh::write_curve_csv(os, curve);
    });
    if (to_file) {
        json meta{{"command", "curve"},
                  {"level", p.config.level},
                  {"mode", cantorh::to_string(p.basepoint.mode)},
                  {"slits", p.m()},
                  {"nodes", p.config.nodes},
                  {"samples_per_slit", p.config.samples_per_slit},
                  {"preimage", preimage_json(p)},
                  {"zeta0", sig12(p.zeta0)},
                  {"continuity",
                   {{"max_gap", sig12(cont.max_gap)},
                    {"worst_crossing", cont.worst_crossing}}},
                  {"output", o.output}};
        std::cout << meta.dump(2) << '\n';
    }
    return 0;
}

int run_asymptotics(const CommonOpts& o, const std::vector<int>& levels) {
    if (levels.empty())
        throw cantorh::ArgumentError("asymptotics: need at least one level");
    const cantorh::RunConfig base = resolve_config(o);
    json fits = json::array();
    std::vector<int> fitted_levels;
    std::vector<double> amplitudes;
    for (int level : levels) {
        CommonOpts lo = o;
        lo.cfg.level = level;
        lo.snapshot.clear(); // snapshots are keyed to a single level
        const cantorh::Pipeline p = make_pipeline(lo);
        const cantorh::FitResult fit =
            cantorh::fit_threshold_law(p, base.asym_eps, base.asym_count);
        fits.push_back(json{{"level", level},
                            {"C", sig12(fit.C)},
                            {"beta", sig12(fit.beta)},
                            {"E", sig12(fit.E)},
                            {"rstar", sig12(fit.rstar)}});
        fitted_levels.push_back(level);
        amplitudes.push_back(fit.C);
    }

    json growth = json::array();
    if (fitted_levels.size() >= 3) {
        const cantorh::GrowthFit g =
            cantorh::fit_exp_growth(fitted_levels, amplitudes);
        growth.push_back(json{{"source", "computed"},
                              {"A", sig12(g.A)},
                              {"b", sig12(g.b)},
                              {"E", sig12(g.E)}});
    }
    {
        // Growth fit of the bundled reference amplitude table for this mode.
        const bool left = base.basepoint == BasepointMode::LeftExterior;
        const std::vector<double>& table =
            left ? cantorh::reference_amplitudes_left()
                 : cantorh::reference_amplitudes_center();
        std::vector<int> ref_levels;
        for (size_t i = 0; i < table.size(); ++i)
            ref_levels.push_back(static_cast<int>(i) + (left ? 0 : 1));
        const cantorh::GrowthFit g = cantorh::fit_exp_growth(ref_levels, table);
        growth.push_back(json{{"source", "reference"},
                              {"A", sig12(g.A)},
                              {"b", sig12(g.b)},
                              {"E", sig12(g.E)}});
    }

    json meta{{"command", "asymptotics"},
              {"mode", cantorh::to_string(base.basepoint)},
              {"nodes", base.nodes},
              {"fits", fits},
              {"growth", growth}};
    if (base.basepoint == BasepointMode::LeftExterior) {
        const auto exact = cantorh::exact_C0();
        meta["exact_single_slit"] = {{"C", sig12(exact.first)},
                                     {"beta", sig12(exact.second)}};
    }
    if (!o.output.empty()) {
        write_table(o.output, [&](std::ostream& os) {
            os << "level,C,beta,E,rstar\n";
            for (const auto& f : fits)
                os << f["level"].get<int>() << ','
                   << cantorh::format_sig(f["C"].get<double>()) << ','
                   << cantorh::format_sig(f["beta"].get<double>()) << ','
                   << cantorh::format_sig(f["E"].get<double>()) << ','
                   << cantorh::format_sig(f["rstar"].get<double>()) << '\n';
        });
        meta["output"] = o.output;
    }
    std::cout << meta.dump(2) << '\n';
    return 0;
}

int run_validate(const CommonOpts& o, double tamper_radius) {
    const cantorh::RunConfig cfg = resolve_config(o);
    const cantorh::SlitDomain d = cantorh::cantor_level(cfg.level);
    const cantorh::Basepoint b = cfg.make_basepoint();

    cantorh::Pipeline p = make_pipeline(o);
    if (tamper_radius != 0.0) {
        // Negative control: a perturbed circle family must be rejected.
        cantorh::CircularDomain circles = p.pre.domain;
        circles.radii[0] *= 1.0 + tamper_radius;
        p = cantorh::build_pipeline_from_circles(d, b, cfg, circles);
    }

    struct Check {
        std::string name;
        double measured;
        double tol;
        bool pass;
    };
    std::vector<Check> checks;
    auto add = [&](const std::string& name, double measured, double tol) {
        checks.push_back({name, measured, tol, measured <= tol});
    };

    add("slit-residual", p.pre.max_slit_residual,
        10.0 * cfg.map_tol * p.m());

    // Boundary imaginary part of the slit map (zero for these symmetric
    // families) and its constancy on each circle.
    double nu_max = 0.0;
    for (int j = 0; j < p.m(); ++j)
        nu_max = std::max(nu_max, std::abs(p.pre.map.nu[j]));
    add("imaginary-part", nu_max, 1e-8);
    add("nu-spread", p.pre.map.nu_spread, 1e-8);

    // Boundary-measure structure: rows of a sum to zero, b sums to one,
    // and the measures partition unity at the basepoint preimage.
    double coef_err = std::abs(p.harm.b.sum() - 1.0);
    for (int k = 0; k < p.m(); ++k)
        coef_err = std::max(coef_err, std::abs(p.harm.a.row(k).sum()));
    add("measure-coefficients", coef_err, 1e-9);
    add("partition-of-unity", std::abs(p.sigma0.sum() - 1.0), 1e-9);

    cantorh::HCurve curve;
    bool curve_ok = true;
    std::string curve_msg;
    try {
        curve = cantorh::build_curve(p, cfg.samples_per_slit);
    } catch (const cantorh::ConsistencyError& e) {
        curve_ok = false;
        curve_msg = e.what();
    }
    checks.push_back({"monotonic-curve", curve_ok ? 0.0 : 1.0, 0.5, curve_ok});

    // Plateau heights against the bundled reference table, when available.
    bool have_ref = true;
    std::vector<double> ref;
    try {
        ref = p.basepoint.mode == BasepointMode::LeftExterior
                  ? cantorh::reference_steps_left(p.m())
                  : cantorh::reference_steps_center(p.m());
    } catch (const cantorh::ArgumentError&) {
        have_ref = false;
    }
    if (have_ref) {
        const std::vector<double> omega = cantorh::step_heights(p);
        double worst = 0.0;
        for (size_t i = 0; i < ref.size(); ++i)
            worst = std::max(worst, std::abs(omega[i] - ref[i]));
        add("reference-steps", worst, 1e-6);
    }

    add("arc-continuity", cantorh::continuity_audit(p).max_gap, 1e-4);

    if (cfg.level == 0 && p.basepoint.mode == BasepointMode::LeftExterior &&
        curve_ok) {
        // Single slit: the curve must match the closed form.
        double worst = 0.0;
        for (const auto& pt : curve.arcs[0])
            worst = std::max(worst,
                             std::abs(pt.h - cantorh::h_exact_single_slit(pt.r)));
        add("closed-form", worst, 1e-8);
    }

    if (p.m() <= 2) {
        // Arc values against the exact mixed solve (discontinuity handled
        // analytically, smooth remainder by collocation).  The tolerance is
        // the measured piecewise-constant approximation bound for each
        // basepoint; the center one is larger because that basepoint sits
        // between the circles.
        double worst = 0.0;
        for (int j = 1; j <= 5; ++j) {
            const double s = cantorh::pi + j * cantorh::pi / 6.0;
            const cantorh::MixedArcValue exact = cantorh::mixed_arc_solve(p, 1, s);
            worst = std::max(worst, std::abs(cantorh::intercept_value(p, 1, s) -
                                             exact.value));
        }
        add("arc-oracle", worst,
            p.basepoint.mode == BasepointMode::LeftExterior ? 5e-4 : 5e-3);
    }

    if (p.m() <= 4) {
        // Basepoint measures against an independent collocation solve.
        const std::vector<double> sig = cantorh::collocation_sigma(
            p.pre.domain, cantorh::complexd(p.zeta0, 0.0));
        double worst = 0.0;
        for (int k = 0; k < p.m(); ++k)
            worst = std::max(worst, std::abs(sig[static_cast<size_t>(k)] -
                                             p.sigma0[k]));
        add("measure-oracle", worst, 1e-8);
    }

    if (cfg.level >= 1) {
        const cantorh::FitResult fit =
            cantorh::fit_threshold_law(p, cfg.asym_eps, cfg.asym_count);
        add("square-root-exponent", std::abs(fit.beta - 0.5), 1e-4);
    }

    bool all_pass = true;
    json rows = json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        rows.push_back(json{{"name", c.name},
                            {"measured", sig12(c.measured)},
                            {"tolerance", sig12(c.tol)},
                            {"pass", c.pass}});
    }
    json meta{{"command", "validate"},
              {"level", cfg.level},
              {"mode", cantorh::to_string(p.basepoint.mode)},
              {"nodes", cfg.nodes},
              {"checks", rows},
              {"pass", all_pass}};
    if (!curve_ok)
        meta["monotonicity_message"] = curve_msg;
    std::cout << meta.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

int run_premap(const CommonOpts& o) {
    const cantorh::RunConfig cfg = resolve_config(o);
    const cantorh::SlitDomain d = cantorh::cantor_level(cfg.level);
    const cantorh::PreimageResult pre =
        cantorh::find_preimage(d, cfg.nodes, cfg.map_tol, cfg.max_iter,
                               cfg.solver_tol, cfg.solver_maxit);
    const cantorh::PremapSnapshot snap =
        cantorh::make_snapshot(cfg.level, cfg, pre);
    const json j = cantorh::snapshot_to_json(snap);
    if (o.snapshot.empty()) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::ofstream out(o.snapshot);
    if (!out)
        throw cantorh::ArgumentError("cannot open snapshot file: " + o.snapshot);
    out << j.dump(2) << '\n';
    json meta{{"command", "premap"},
              {"level", cfg.level},
              {"nodes", cfg.nodes},
              {"iterations", pre.iterations},
              {"criterion", sig12(pre.criterion)},
              {"max_slit_residual", sig12(pre.max_slit_residual)},
              {"snapshot", o.snapshot}};
    std::cout << meta.dump(2) << '\n';
    return 0;
}

json error_json(const cantorh::Error& e) {
    json err{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* conv = dynamic_cast<const cantorh::ConvergenceError*>(&e))
        err["history"] = conv->history();
    if (const auto* acc = dynamic_cast<const cantorh::AccuracyError*>(&e))
        err["measured"] = acc->measured();
    return json{{"error", err}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic-measure distribution functions of slit families"};
    app.require_subcommand(1);

    CommonOpts steps_opts;
    CLI::App* steps = app.add_subcommand("steps", "Gap plateau heights");
    add_config_flags(steps, steps_opts);
    steps->add_option("--output", steps_opts.output, "CSV output file");
    steps->add_option("--snapshot", steps_opts.snapshot,
                      "Reuse a converged circle snapshot");

    CommonOpts curve_opts;
    CLI::App* curve = app.add_subcommand("curve", "Full distribution curve");
    add_config_flags(curve, curve_opts);
    curve->add_option("--output", curve_opts.output, "CSV output file");
    curve->add_option("--snapshot", curve_opts.snapshot,
                      "Reuse a converged circle snapshot");

    CommonOpts asym_opts;
    std::vector<int> asym_levels = {1, 2, 3, 4};
    CLI::App* asym =
        app.add_subcommand("asymptotics", "Near-threshold power-law fits");
    add_config_flags(asym, asym_opts, /*with_level=*/false);
    asym->add_option("--levels", asym_levels,
                     "Levels to fit (default 1 2 3 4)");
    asym->add_option("--output", asym_opts.output, "CSV output file");

    CommonOpts val_opts;
    double tamper_radius = 0.0;
    CLI::App* validate =
        app.add_subcommand("validate", "Consistency checks; exit 0 iff all pass");
    add_config_flags(validate, val_opts);
    validate->add_option("--snapshot", val_opts.snapshot,
                         "Reuse a converged circle snapshot");
    validate
        ->add_option("--tamper-radius", tamper_radius,
                     "Perturb one radius by this relative amount (negative "
                     "control; validation must then fail)")
        ->group(""); // hidden

    CommonOpts pre_opts;
    CLI::App* premap =
        app.add_subcommand("premap", "Compute and save the circle preimage");
    add_config_flags(premap, pre_opts);
    premap->add_option("--snapshot", pre_opts.snapshot,
                       "Snapshot file to write (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (steps->parsed())
            return run_steps(steps_opts);
        if (curve->parsed())
            return run_curve(curve_opts);
        if (asym->parsed())
            return run_asymptotics(asym_opts, asym_levels);
        if (validate->parsed())
            return run_validate(val_opts, tamper_radius);
        if (premap->parsed())
            return run_premap(pre_opts);
    } catch (const cantorh::Error& e) {
        std::cerr << error_json(e).dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}
                         .dump(2)
                  << '\n';
        return 2;
    }
    return 0;
}
