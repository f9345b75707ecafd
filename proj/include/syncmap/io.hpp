#ifndef SYNCMAP_IO_HPP
#define SYNCMAP_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "syncmap/analysis.hpp"
#include "syncmap/certify.hpp"
#include "syncmap/map.hpp"

namespace syncmap::io {

enum class Format { Json, Csv };

/// Parses "json" or "csv".
Format parse_format(const std::string& name);

/// Fixed rendering of floats: 17 significant digits, C locale.
std::string format_double(double v);

/// Orbit rows n,x,y,V,Vdot.
std::string write_orbit(const OrbitTrace& trace, Format f);

/// Full fixed-point records.
std::string write_fixed_points(const std::vector<FixedPointRecord>& records,
                               Format f);

/// Portrait rows x,y,kind.
std::string write_portrait(const std::vector<FixedPointRecord>& records,
                           Format f);

/// Labelled polylines, rows label,i,x,y. Used for heteroclinics, the Gamma
/// curve and region boundaries.
using LabelledPolyline = std::pair<std::string, std::vector<PhasePoint>>;
std::string write_polylines(const std::vector<LabelledPolyline>& polylines,
                            Format f);

std::string write_basin(const BasinEstimate& estimate, Format f);

struct RateResult {
    PhasePoint p0;
    std::size_t window = 0;
    double rate = 0.0;
};
std::string write_rate(const RateResult& result, Format f);

std::string write_cert_report(const CertReport& report, const CertRequest& req,
                              Format f);

/// Writes to the path, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

} // namespace syncmap::io

#endif
