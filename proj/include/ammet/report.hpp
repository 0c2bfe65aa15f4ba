#pragma once

// Output artifacts: the amplification table as CSV/JSON, the beta = 1/alpha
// curve, and the country scatter over the curve as a standalone SVG.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ammet/classifier.hpp"
#include "ammet/core_model.hpp"
#include "ammet/ingest.hpp"

namespace ammet {

struct RegionBand {
    Region region;
    double alpha_min;
    double alpha_max;
};

/// Shading intervals for regions A, B and C. C is open above; its band is
/// drawn up to alpha = 1.
inline constexpr std::array<RegionBand, 3> kRegionBands = {{
    {Region::A, RegionBounds::a_low, RegionBounds::a_high},
    {Region::B, RegionBounds::b_low, RegionBounds::b_high},
    {Region::C, RegionBounds::b_high, 1.0},
}};

struct CurveSeries {
    std::vector<AmplificationPoint> points;  // strictly increasing alpha
    std::array<RegionBand, 3> region_bands = kRegionBands;
};

/// n uniformly spaced samples on [alpha_min, alpha_max], endpoints included.
CurveSeries curve_points(double alpha_min, double alpha_max, std::size_t n);

enum class OutputFormat { Csv, Json };

/// "csv" or "json"; anything else is a UsageError.
OutputFormat parse_output_format(std::string_view token);

/// Header `name,alpha,beta`, or a JSON array of {name, alpha, beta} objects.
/// beta is written with at most 6 decimals, trailing zeros dropped.
std::string emit_table(std::span<const AmplificationRow> rows, OutputFormat format);

/// Inverse of emit_table. Throws ParseError on malformed input.
std::vector<AmplificationRow> parse_table(std::string_view content, OutputFormat format);

/// Header `alpha,beta` (or JSON with points and region bands).
std::string emit_curve(const CurveSeries& curve, OutputFormat format);

/// Classified rows, as CSV `name,iso3,alpha,beta,region` followed by a blank
/// line and a `region,count` census; or one JSON object.
std::string emit_classification(const Classification& result, OutputFormat format);

/// Standalone SVG 1.1: alpha on x, beta on y, linear axes; shaded bands for
/// regions A/B/C, one polyline for the curve and one circle per row.
/// Coordinates carry 2 decimals so the output is byte-stable.
std::string render_scatter_svg(std::span<const ClassifiedRecord> rows, const CurveSeries& curve,
                               int width = 800, int height = 600);

}  // namespace ammet
