#include "ammet/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "csv_reader.hpp"
#include "ammet/errors.hpp"
#include "ammet/numeric_format.hpp"

namespace ammet {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// Integral values go out as JSON integers so 5.0 prints as 5, like the CSV.
ordered_json json_number(double value, int decimals = -1) {
    const double v = decimals >= 0 ? round_to_decimals(value, decimals) : value;
    if (v == std::trunc(v) && std::abs(v) < 9.0e15) return static_cast<long long>(v);
    return v;
}

double strict_number(std::string_view text, std::size_t line, std::size_t column) {
    if (text.find(',') != std::string_view::npos) throw ParseError(line, column, "not a number");
    try {
        return parse_decimal(text);
    } catch (const UsageError& e) {
        throw ParseError(line, column, e.what());
    }
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string_view region_colour(Region r) {
    switch (r) {
        case Region::A: return "#2e7d32";
        case Region::B: return "#f9a825";
        case Region::C: return "#c62828";
        case Region::BelowA: return "#1565c0";
        case Region::GapAB: return "#6a1b9a";
    }
    return "#000000";
}

// Linear map from data space to pixels; y grows downward.
struct Viewport {
    double left, top, plot_w, plot_h, x_max, y_max;

    double x(double alpha) const { return left + plot_w * alpha / x_max; }
    double y(double beta) const { return top + plot_h * (1.0 - beta / y_max); }
};

std::string px(double v) { return format_fixed(v, 2); }

}  // namespace

CurveSeries curve_points(double alpha_min, double alpha_max, std::size_t n) {
    if (!(alpha_min > 0.0 && alpha_min < alpha_max && alpha_max <= 1.0)) {
        throw UsageError("curve range must satisfy 0 < min < max <= 1");
    }
    if (n < 2) throw UsageError("curve needs at least 2 points");

    CurveSeries curve;
    curve.points.reserve(n);
    const double span = alpha_max - alpha_min;
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha =
            i + 1 == n ? alpha_max : alpha_min + span * static_cast<double>(i) / static_cast<double>(n - 1);
        curve.points.push_back(amplification_point(alpha));
    }
    return curve;
}

OutputFormat parse_output_format(std::string_view token) {
    if (token == "csv") return OutputFormat::Csv;
    if (token == "json") return OutputFormat::Json;
    throw UsageError("unknown format \"" + std::string(token) + "\" (expected csv or json)");
}

std::string emit_table(std::span<const AmplificationRow> rows, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& row : rows) {
            doc.push_back({{"name", row.name}, {"alpha", json_number(row.alpha)}, {"beta", json_number(row.beta, 6)}});
        }
        return doc.dump(2) + "\n";
    }
    std::string out = "name,alpha,beta\n";
    for (const auto& row : rows) {
        out += csv_field(row.name) + "," + format_shortest(row.alpha) + "," + format_trimmed(row.beta, 6) + "\n";
    }
    return out;
}

std::vector<AmplificationRow> parse_table(std::string_view content, OutputFormat format) {
    std::vector<AmplificationRow> rows;
    if (format == OutputFormat::Json) {
        ordered_json doc;
        try {
            doc = ordered_json::parse(content);
        } catch (const ordered_json::parse_error& e) {
            throw ParseError(0, 0, e.what());
        }
        if (!doc.is_array()) throw ParseError(1, 1, "expected a JSON array");
        for (const auto& item : doc) {
            if (!item.is_object() || !item.contains("name") || !item.contains("alpha") || !item.contains("beta") ||
                !item["name"].is_string() || !item["alpha"].is_number() || !item["beta"].is_number()) {
                throw ParseError(0, 0, "table entry needs string name and numeric alpha, beta");
            }
            rows.push_back({item["name"].get<std::string>(), item["alpha"].get<double>(), item["beta"].get<double>()});
        }
        return rows;
    }

    std::istringstream in{std::string(content)};
    detail::CsvReader reader(in);
    detail::CsvRow row;
    if (!reader.next(row) || row.fields != std::vector<std::string>{"name", "alpha", "beta"}) {
        throw ParseError(1, 1, "expected header name,alpha,beta");
    }
    while (reader.next(row)) {
        if (row.fields.size() == 1 && row.fields[0].empty()) continue;
        if (row.fields.size() != 3) throw ParseError(row.line, 0, "expected 3 fields");
        rows.push_back({row.fields[0], strict_number(row.fields[1], row.line, 2),
                        strict_number(row.fields[2], row.line, 3)});
    }
    return rows;
}

std::string emit_curve(const CurveSeries& curve, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json points = ordered_json::array();
        for (const auto& p : curve.points) points.push_back({{"alpha", json_number(p.alpha)}, {"beta", json_number(p.beta)}});
        ordered_json bands = ordered_json::array();
        for (const auto& b : curve.region_bands) {
            bands.push_back({{"region", std::string(to_string(b.region))},
                             {"alpha_min", json_number(b.alpha_min)},
                             {"alpha_max", json_number(b.alpha_max)}});
        }
        return ordered_json{{"points", points}, {"region_bands", bands}}.dump(2) + "\n";
    }
    std::string out = "alpha,beta\n";
    for (const auto& p : curve.points) out += format_shortest(p.alpha) + "," + format_shortest(p.beta) + "\n";
    return out;
}

std::string emit_classification(const Classification& result, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : result.rows) {
            rows.push_back({{"name", r.country.name},
                            {"iso3", r.country.iso3},
                            {"alpha", json_number(r.alpha)},
                            {"beta", json_number(r.beta, 6)},
                            {"region", std::string(to_string(r.region))}});
        }
        ordered_json census = ordered_json::object();
        for (Region region : kAllRegions) census[std::string(to_string(region))] = result.census[region];
        ordered_json skipped = ordered_json::array();
        for (const auto& s : result.skipped) skipped.push_back(s.name);
        return ordered_json{{"rows", rows}, {"census", census}, {"skipped", skipped}}.dump(2) + "\n";
    }
    std::string out = "name,iso3,alpha,beta,region\n";
    for (const auto& r : result.rows) {
        out += csv_field(r.country.name) + "," + r.country.iso3 + "," + format_shortest(r.alpha) + "," +
               format_trimmed(r.beta, 6) + "," + std::string(to_string(r.region)) + "\n";
    }
    out += "\nregion,count\n";
    for (Region region : kAllRegions) {
        out += std::string(to_string(region)) + "," + std::to_string(result.census[region]) + "\n";
    }
    for (const auto& s : result.skipped) out += "skipped," + csv_field(s.name) + "\n";
    return out;
}

std::string render_scatter_svg(std::span<const ClassifiedRecord> rows, const CurveSeries& curve, int width,
                               int height) {
    if (width < 100 || height < 100) throw UsageError("SVG dimensions must be at least 100x100");

    double x_max = 1.0;
    double beta_max = 1.0;
    for (const auto& p : curve.points) {
        x_max = std::max(x_max, p.alpha);
        beta_max = std::max(beta_max, p.beta);
    }
    for (const auto& r : rows) {
        x_max = std::max(x_max, r.alpha);
        beta_max = std::max(beta_max, r.beta);
    }
    const double y_max = std::ceil(beta_max);
    const Viewport vp{60.0, 20.0, width - 80.0, height - 70.0, x_max, y_max};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";

    svg << "<g class=\"regions\">\n";
    for (const auto& band : curve.region_bands) {
        const double x0 = vp.x(band.alpha_min);
        const double x1 = vp.x(std::max(band.alpha_max, band.region == Region::C ? x_max : band.alpha_max));
        svg << "<rect class=\"region-" << to_string(band.region) << "\" x=\"" << px(x0) << "\" y=\"" << px(vp.top)
            << "\" width=\"" << px(x1 - x0) << "\" height=\"" << px(vp.plot_h) << "\" fill=\""
            << region_colour(band.region) << "\" fill-opacity=\"0.12\"/>\n"
            << "<text x=\"" << px(0.5 * (x0 + x1)) << "\" y=\"" << px(vp.top + 16.0)
            << "\" text-anchor=\"middle\" font-size=\"14\">" << to_string(band.region) << "</text>\n";
    }
    svg << "</g>\n";

    // Axes with ticks every 0.1 in alpha and every `step` in beta.
    const double x0 = vp.x(0.0);
    const double y0 = vp.y(0.0);
    svg << "<g class=\"axes\" stroke=\"#000000\" font-size=\"11\">\n"
        << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(vp.x(x_max)) << "\" y2=\"" << px(y0)
        << "\"/>\n"
        << "<line x1=\"" << px(x0) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(x0) << "\" y2=\"" << px(vp.y(y_max))
        << "\"/>\n";
    const int x_ticks = static_cast<int>(std::floor(x_max * 10.0 + 1e-9));
    for (int i = 0; i <= x_ticks; ++i) {
        const double a = i / 10.0;
        svg << "<line x1=\"" << px(vp.x(a)) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(vp.x(a)) << "\" y2=\""
            << px(y0 + 5.0) << "\"/>\n"
            << "<text x=\"" << px(vp.x(a)) << "\" y=\"" << px(y0 + 18.0) << "\" stroke=\"none\" text-anchor=\"middle\">"
            << format_trimmed(a, 1) << "</text>\n";
    }
    const double step = y_max <= 12.0 ? 1.0 : std::ceil(y_max / 10.0);
    for (double b = 0.0; b <= y_max + 1e-9; b += step) {
        svg << "<line x1=\"" << px(x0 - 5.0) << "\" y1=\"" << px(vp.y(b)) << "\" x2=\"" << px(x0) << "\" y2=\""
            << px(vp.y(b)) << "\"/>\n"
            << "<text x=\"" << px(x0 - 8.0) << "\" y=\"" << px(vp.y(b) + 4.0)
            << "\" stroke=\"none\" text-anchor=\"end\">" << format_trimmed(b, 0) << "</text>\n";
    }
    svg << "<text class=\"x-label\" x=\"" << px(vp.left + 0.5 * vp.plot_w) << "\" y=\"" << px(height - 12.0)
        << "\" stroke=\"none\" text-anchor=\"middle\" font-size=\"14\">\xCE\xB1 (government spending / GDP)</text>\n"
        << "<text class=\"y-label\" x=\"16\" y=\"" << px(vp.top + 0.5 * vp.plot_h)
        << "\" stroke=\"none\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
        << px(vp.top + 0.5 * vp.plot_h) << ")\">\xCE\xB2 = 1/\xCE\xB1</text>\n"
        << "</g>\n";

    svg << "<polyline class=\"curve\" fill=\"none\" stroke=\"#37474f\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        if (i != 0) svg << ' ';
        svg << px(vp.x(curve.points[i].alpha)) << ',' << px(vp.y(curve.points[i].beta));
    }
    svg << "\"/>\n";

    svg << "<g class=\"countries\">\n";
    for (const auto& r : rows) {
        svg << "<circle cx=\"" << px(vp.x(r.alpha)) << "\" cy=\"" << px(vp.y(r.beta)) << "\" r=\"4\" fill=\""
            << region_colour(r.region) << "\"><title>" << xml_escape(r.country.name) << " (\xCE\xB1="
            << format_shortest(r.alpha) << ", \xCE\xB2=" << format_trimmed(r.beta, 6) << ")</title></circle>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace ammet
