// Command-line front end: every analysis writes machine-readable CSV or JSON.
// Exit codes: 0 success, 1 domain error, 2 inconclusive certification,
// 64 usage error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "syncmap/analysis.hpp"
#include "syncmap/certify.hpp"
#include "syncmap/geometry.hpp"
#include "syncmap/io.hpp"
#include "syncmap/lyapunov.hpp"
#include "syncmap/map.hpp"

namespace {

using namespace syncmap;

struct GlobalOptions {
    double a = 0.1;
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "json";
};

int run(int argc, char** argv) {
    CLI::App app{"Analysis toolkit for the three-clock synchronisation map "
                 "on the 2-torus"};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file with key = value lines");

    GlobalOptions opt;
    app.add_option("--a", opt.a, "coupling strength, 0 < a < 1/6")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled analyses")
        ->capture_default_str();
    app.add_option("--out", opt.out, "output path, - for stdout")
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // iterate
    auto* iterate_cmd = app.add_subcommand("iterate", "iterate an orbit");
    iterate_cmd->fallthrough();
    double x0 = 0.0, y0 = 0.0, inverse_tol = 1e-13;
    std::uint64_t steps = 100;
    bool backward = false;
    iterate_cmd->add_option("--x0", x0, "initial x")->required();
    iterate_cmd->add_option("--y0", y0, "initial y")->required();
    iterate_cmd->add_option("--n", steps, "number of steps")
        ->capture_default_str();
    iterate_cmd->add_flag("--backward", backward, "iterate the inverse map");
    iterate_cmd->add_option("--tol", inverse_tol, "inverse solve tolerance")
        ->capture_default_str();

    // fixed-points / portrait
    auto* fixed_cmd =
        app.add_subcommand("fixed-points", "locate and classify fixed points");
    fixed_cmd->fallthrough();
    auto* portrait_cmd = app.add_subcommand(
        "portrait", "phase-portrait skeleton: fixed points, or region "
                    "boundaries with --regions");
    portrait_cmd->fallthrough();
    bool with_regions = false;
    portrait_cmd->add_flag("--regions", with_regions,
                           "emit region boundary polylines instead");

    // verify-lyapunov
    auto* verify_cmd = app.add_subcommand(
        "verify-lyapunov",
        "certify negativity of the orbital derivative on A1");
    verify_cmd->fallthrough();
    double epsilon = 0.05, cell = 0.1;
    int depth = 8, verify_workers = 1;
    verify_cmd->add_option("--epsilon", epsilon,
                           "excluded radius around the zero set")
        ->capture_default_str();
    verify_cmd->add_option("--cell", cell, "initial cell size")
        ->capture_default_str();
    verify_cmd->add_option("--depth", depth, "max subdivision depth")
        ->capture_default_str();
    verify_cmd->add_option("--workers", verify_workers, "worker threads")
        ->envname("SYNCMAP_WORKERS")
        ->capture_default_str();

    // gamma
    auto* gamma_cmd =
        app.add_subcommand("gamma", "sample the implicit curve Gamma");
    gamma_cmd->fallthrough();
    std::size_t gamma_samples = 256;
    double gamma_tol = 1e-13;
    gamma_cmd->add_option("--samples", gamma_samples, "number of samples")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
        ->capture_default_str();
    gamma_cmd->add_option("--tol", gamma_tol, "root solve tolerance")
        ->capture_default_str();

    // heteroclinics
    auto* hetero_cmd =
        app.add_subcommand("heteroclinics", "trace the eight heteroclinic arcs");
    hetero_cmd->fallthrough();
    double arc_step = 0.005;
    hetero_cmd->add_option("--step", arc_step, "max polyline segment length")
        ->capture_default_str();

    // basin
    auto* basin_cmd = app.add_subcommand(
        "basin", "Monte Carlo estimate of the basin of the sink");
    basin_cmd->fallthrough();
    std::uint64_t basin_samples = 100000, basin_iters = 10000;
    double basin_radius = 1e-6;
    int basin_workers = 1;
    basin_cmd->add_option("--samples", basin_samples, "sample count")
        ->capture_default_str();
    basin_cmd->add_option("--iterations", basin_iters, "iteration budget")
        ->capture_default_str();
    basin_cmd->add_option("--radius", basin_radius, "convergence ball radius")
        ->capture_default_str();
    basin_cmd->add_option("--workers", basin_workers, "worker threads")
        ->envname("SYNCMAP_WORKERS")
        ->capture_default_str();

    // rate
    auto* rate_cmd =
        app.add_subcommand("rate", "fit the exponential contraction rate");
    rate_cmd->fallthrough();
    double rate_x0 = 0.0, rate_y0 = 0.0;
    std::size_t window = 50;
    rate_cmd->add_option("--x0", rate_x0, "initial x")->required();
    rate_cmd->add_option("--y0", rate_y0, "initial y")->required();
    rate_cmd->add_option("--window", window, "fit window length")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        const MapParams mp(opt.a);
        const io::Format fmt = io::parse_format(opt.format);

        if (iterate_cmd->parsed()) {
            const OrbitTrace trace =
                iterate({x0, y0}, steps, mp,
                        backward ? OrbitDirection::Backward
                                 : OrbitDirection::Forward,
                        inverse_tol);
            io::write_output(opt.out, io::write_orbit(trace, fmt));
        } else if (fixed_cmd->parsed()) {
            io::write_output(opt.out,
                             io::write_fixed_points(fixed_points(mp), fmt));
        } else if (portrait_cmd->parsed()) {
            if (with_regions) {
                std::vector<io::LabelledPolyline> lines;
                for (const RegionId r :
                     {RegionId::D, RegionId::S1, RegionId::S2, RegionId::S3,
                      RegionId::S4, RegionId::A1, RegionId::A2, RegionId::A3,
                      RegionId::A4, RegionId::AL, RegionId::AM, RegionId::AR}) {
                    lines.emplace_back(region_name(r),
                                       region_boundary(r, mp, 0.05));
                }
                lines.emplace_back("Gamma", GammaCurve{mp}.polyline(256));
                io::write_output(opt.out, io::write_polylines(lines, fmt));
            } else {
                io::write_output(opt.out,
                                 io::write_portrait(fixed_points(mp), fmt));
            }
        } else if (verify_cmd->parsed()) {
            CertRequest req(mp);
            req.epsilon = epsilon;
            req.initial_cell = cell;
            req.max_depth = depth;
            req.workers = verify_workers;
            const CertReport report = certify_negative(req);
            io::write_output(opt.out, io::write_cert_report(report, req, fmt));
            if (report.verdict == CertVerdict::Inconclusive) return 2;
        } else if (gamma_cmd->parsed()) {
            GammaCurve curve{mp, gamma_tol};
            std::vector<io::LabelledPolyline> lines;
            lines.emplace_back("Gamma", curve.polyline(gamma_samples));
            io::write_output(opt.out, io::write_polylines(lines, fmt));
        } else if (hetero_cmd->parsed()) {
            std::vector<io::LabelledPolyline> lines;
            for (const HeteroclinicLabel label : kAllHeteroclinics) {
                const ManifoldArc arc = trace_heteroclinic(label, mp, arc_step);
                lines.emplace_back(heteroclinic_name(label), arc.polyline);
            }
            io::write_output(opt.out, io::write_polylines(lines, fmt));
        } else if (basin_cmd->parsed()) {
            const BasinEstimate est =
                estimate_basin(mp, basin_samples, basin_iters, basin_radius,
                               opt.seed, basin_workers);
            io::write_output(opt.out, io::write_basin(est, fmt));
        } else if (rate_cmd->parsed()) {
            io::RateResult result;
            result.p0 = {rate_x0, rate_y0};
            result.window = window;
            result.rate = contraction_rate(mp, result.p0, window);
            io::write_output(opt.out, io::write_rate(result, fmt));
        }
        return 0;
    } catch (const syncmap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
