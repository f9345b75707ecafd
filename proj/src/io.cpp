#include "syncmap/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "syncmap/lyapunov.hpp"

namespace syncmap::io {

namespace {

// Hand-rolled writers keep the float rendering (17 significant digits) and
// the field order under our control, so output is byte-stable across runs
// and worker counts.

void append_kv(std::string& out, const char* key, const std::string& value,
               bool quote, bool last = false) {
    out += '"';
    out += key;
    out += "\":";
    if (quote) out += '"';
    out += value;
    if (quote) out += '"';
    if (!last) out += ',';
}

std::string json_point(PhasePoint p) {
    return "[" + format_double(p.x) + "," + format_double(p.y) + "]";
}

std::string csv_point(PhasePoint p) {
    return format_double(p.x) + "," + format_double(p.y);
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw DomainError("unknown output format: " + name);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string write_orbit(const OrbitTrace& trace, Format f) {
    const MapParams& mp = trace.params;
    std::string out;
    if (f == Format::Csv) {
        out = "n,x,y,V,Vdot\n";
        for (std::size_t n = 0; n < trace.points.size(); ++n) {
            const PhasePoint p = trace.points[n];
            out += std::to_string(n) + "," + csv_point(p) + "," +
                   format_double(lyapunov_value(p)) + "," +
                   format_double(orbital_derivative(p, mp)) + "\n";
        }
        return out;
    }
    out = "{\"a\":" + format_double(mp.a()) + ",\"direction\":\"";
    out += trace.direction == OrbitDirection::Forward ? "forward" : "backward";
    out += "\",\"points\":[";
    for (std::size_t n = 0; n < trace.points.size(); ++n) {
        const PhasePoint p = trace.points[n];
        if (n) out += ',';
        out += "{";
        append_kv(out, "n", std::to_string(n), false);
        append_kv(out, "x", format_double(p.x), false);
        append_kv(out, "y", format_double(p.y), false);
        append_kv(out, "V", format_double(lyapunov_value(p)), false);
        append_kv(out, "Vdot", format_double(orbital_derivative(p, mp)), false,
                  true);
        out += "}";
    }
    out += "]}\n";
    return out;
}

std::string write_fixed_points(const std::vector<FixedPointRecord>& records,
                               Format f) {
    std::string out;
    if (f == Format::Csv) {
        out = "x,y,kind,lambda1,lambda2,ev1x,ev1y,ev2x,ev2y,hyperbolic,"
              "residual\n";
        for (const FixedPointRecord& r : records) {
            out += csv_point(r.location);
            out += ",";
            out += kind_name(r.kind);
            out += "," + format_double(r.eigenvalue_1) + "," +
                   format_double(r.eigenvalue_2) + "," +
                   csv_point(r.eigenvector_1) + "," +
                   csv_point(r.eigenvector_2) + ",";
            out += r.hyperbolic ? "true" : "false";
            out += "," + format_double(r.residual) + "\n";
        }
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const FixedPointRecord& r = records[i];
        if (i) out += ',';
        out += "{";
        append_kv(out, "x", format_double(r.location.x), false);
        append_kv(out, "y", format_double(r.location.y), false);
        append_kv(out, "kind", kind_name(r.kind), true);
        out += "\"jacobian\":[[" + format_double(r.jacobian.a11) + "," +
               format_double(r.jacobian.a12) + "],[" +
               format_double(r.jacobian.a21) + "," +
               format_double(r.jacobian.a22) + "]],";
        out += "\"eigenvalues\":[" + format_double(r.eigenvalue_1) + "," +
               format_double(r.eigenvalue_2) + "],";
        out += "\"eigenvectors\":[" + json_point(r.eigenvector_1) + "," +
               json_point(r.eigenvector_2) + "],";
        append_kv(out, "hyperbolic", r.hyperbolic ? "true" : "false", false);
        append_kv(out, "residual", format_double(r.residual), false, true);
        out += "}";
    }
    out += "]\n";
    return out;
}

std::string write_portrait(const std::vector<FixedPointRecord>& records,
                           Format f) {
    std::string out;
    if (f == Format::Csv) {
        out = "x,y,kind\n";
        for (const FixedPointRecord& r : records) {
            out += csv_point(r.location);
            out += ",";
            out += kind_name(r.kind);
            out += "\n";
        }
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const FixedPointRecord& r = records[i];
        if (i) out += ',';
        out += "{";
        append_kv(out, "x", format_double(r.location.x), false);
        append_kv(out, "y", format_double(r.location.y), false);
        append_kv(out, "kind", kind_name(r.kind), true, true);
        out += "}";
    }
    out += "]\n";
    return out;
}

std::string write_polylines(const std::vector<LabelledPolyline>& polylines,
                            Format f) {
    std::string out;
    if (f == Format::Csv) {
        out = "label,i,x,y\n";
        for (const LabelledPolyline& line : polylines) {
            for (std::size_t i = 0; i < line.second.size(); ++i) {
                out += line.first + "," + std::to_string(i) + "," +
                       csv_point(line.second[i]) + "\n";
            }
        }
        return out;
    }
    out = "[";
    for (std::size_t k = 0; k < polylines.size(); ++k) {
        if (k) out += ',';
        out += "{\"label\":\"" + polylines[k].first + "\",\"points\":[";
        const std::vector<PhasePoint>& pts = polylines[k].second;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out += ',';
            out += json_point(pts[i]);
        }
        out += "]}";
    }
    out += "]\n";
    return out;
}

std::string write_basin(const BasinEstimate& estimate, Format f) {
    std::string out;
    if (f == Format::Csv) {
        out = "samples,converged,fraction,max_iterations,radius,seed\n";
        out += std::to_string(estimate.samples) + "," +
               std::to_string(estimate.converged) + "," +
               format_double(estimate.fraction) + "," +
               std::to_string(estimate.max_iterations) + "," +
               format_double(estimate.radius) + "," +
               std::to_string(estimate.seed) + "\n";
        return out;
    }
    out = "{";
    append_kv(out, "samples", std::to_string(estimate.samples), false);
    append_kv(out, "converged", std::to_string(estimate.converged), false);
    append_kv(out, "fraction", format_double(estimate.fraction), false);
    append_kv(out, "max_iterations", std::to_string(estimate.max_iterations),
              false);
    append_kv(out, "radius", format_double(estimate.radius), false);
    append_kv(out, "seed", std::to_string(estimate.seed), false, true);
    out += "}\n";
    return out;
}

std::string write_rate(const RateResult& result, Format f) {
    std::string out;
    if (f == Format::Csv) {
        out = "x0,y0,window,rate\n";
        out += csv_point(result.p0) + "," + std::to_string(result.window) +
               "," + format_double(result.rate) + "\n";
        return out;
    }
    out = "{";
    append_kv(out, "x0", format_double(result.p0.x), false);
    append_kv(out, "y0", format_double(result.p0.y), false);
    append_kv(out, "window", std::to_string(result.window), false);
    append_kv(out, "rate", format_double(result.rate), false, true);
    out += "}\n";
    return out;
}

std::string write_cert_report(const CertReport& report, const CertRequest& req,
                              Format f) {
    const char* verdict =
        report.verdict == CertVerdict::Certified ? "Certified" : "Inconclusive";
    std::string out;
    if (f == Format::Csv) {
        out = "verdict,cells_examined,cells_certified,cells_subdivided,"
              "cells_excluded,worst_certified_bound,lipschitz_al,lipschitz_am,"
              "lipschitz_ar,epsilon,initial_cell,max_depth\n";
        out += std::string(verdict) + "," +
               std::to_string(report.cells_examined) + "," +
               std::to_string(report.cells_certified) + "," +
               std::to_string(report.cells_subdivided) + "," +
               std::to_string(report.cells_excluded) + "," +
               format_double(report.worst_certified_bound) + "," +
               format_double(report.lipschitz_al) + "," +
               format_double(report.lipschitz_am) + "," +
               format_double(report.lipschitz_ar) + "," +
               format_double(req.epsilon) + "," +
               format_double(req.initial_cell) + "," +
               std::to_string(req.max_depth) + "\n";
        return out;
    }
    out = "{";
    append_kv(out, "verdict", verdict, true);
    append_kv(out, "cells_examined", std::to_string(report.cells_examined),
              false);
    append_kv(out, "cells_certified", std::to_string(report.cells_certified),
              false);
    append_kv(out, "cells_subdivided", std::to_string(report.cells_subdivided),
              false);
    append_kv(out, "cells_excluded", std::to_string(report.cells_excluded),
              false);
    append_kv(out, "worst_certified_bound",
              format_double(report.worst_certified_bound), false);
    out += "\"lipschitz\":{\"AL\":" + format_double(report.lipschitz_al) +
           ",\"AM\":" + format_double(report.lipschitz_am) +
           ",\"AR\":" + format_double(report.lipschitz_ar) + "},";
    append_kv(out, "epsilon", format_double(req.epsilon), false);
    append_kv(out, "initial_cell", format_double(req.initial_cell), false);
    append_kv(out, "max_depth", std::to_string(req.max_depth), false);

    // Offending cells help diagnose an Inconclusive run; cap the listing.
    constexpr std::size_t kMaxListed = 64;
    out += "\"inconclusive_cells\":[";
    const std::size_t listed =
        std::min(kMaxListed, report.inconclusive_cells.size());
    for (std::size_t i = 0; i < listed; ++i) {
        const Cell& c = report.inconclusive_cells[i];
        if (i) out += ',';
        out += "[" + format_double(c.x0) + "," + format_double(c.x1) + "," +
               format_double(c.y0) + "," + format_double(c.y1) + "]";
    }
    out += "],";
    append_kv(out, "inconclusive_count",
              std::to_string(report.inconclusive_cells.size()), false, true);
    out += "}\n";
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot open output file: " + path);
    file << content;
    if (!file) throw Error("failed writing output file: " + path);
}

} // namespace syncmap::io
