#include "ammet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ammet/classifier.hpp"
#include "ammet/core_model.hpp"
#include "ammet/errors.hpp"
#include "ammet/ingest.hpp"
#include "ammet/numeric_format.hpp"
#include "ammet/report.hpp"
#include "ammet/transistor.hpp"

namespace ammet::cli {
namespace {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kExitCodes =
    "Exit codes: 0 success, 1 usage error, 2 data or parse error, 3 numeric failure.\n"
    "Numeric flags accept a decimal comma (0,182) as well as a point.";

// Numeric flags are captured as text so "0,1" and "0.1" both parse.
struct NumberFlag {
    std::string text;
    double value() const { return parse_decimal(text); }
};

CLI::Option* add_number(CLI::App* app, const std::string& name, NumberFlag& flag, const std::string& help) {
    return app->add_option(name, flag.text, help);
}

struct DataFlags {
    std::string path;
    int year = 2017;
};

void add_data_flags(CLI::App* app, DataFlags& flags) {
    app->add_option("--data", flags.path, "World Bank CSV (default: $AMMET_DATA, then the bundled file)");
    app->add_option("--year", flags.year, "Year column to read")->capture_default_str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<CountryRecord> load_records(const DataFlags& flags, const Context& context) {
    const std::string path =
        !flags.path.empty() ? flags.path : context.env_data_path.value_or(context.default_data_path);
    return parse_worldbank_csv(read_file(path), kGovernmentExpenditureIndicator, flags.year);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw DataError("cannot write " + path);
}

std::vector<std::string> split_codes(const std::vector<std::string>& raw) {
    std::vector<std::string> codes;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string code;
        while (std::getline(ss, code, ',')) {
            if (code.empty()) continue;
            std::transform(code.begin(), code.end(), code.begin(), [](unsigned char c) { return std::toupper(c); });
            codes.push_back(code);
        }
    }
    return codes;
}

std::string emit_records(const std::vector<CountryRecord>& records, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& r : records) {
            doc.push_back({{"name", r.name},
                           {"iso3", r.iso3},
                           {"year", r.year},
                           {"expenditure_pct", r.expenditure_pct ? nlohmann::ordered_json(*r.expenditure_pct)
                                                                 : nlohmann::ordered_json(nullptr)},
                           {"is_aggregate", r.is_aggregate}});
        }
        return doc.dump(2) + "\n";
    }
    std::string out = "name,iso3,year,expenditure_pct,is_aggregate\n";
    for (const auto& r : records) {
        std::string name = r.name;
        if (name.find_first_of(",\"") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : name) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            name = quoted + "\"";
        }
        out += name + "," + r.iso3 + "," + std::to_string(r.year) + "," +
               (r.expenditure_pct ? format_shortest(*r.expenditure_pct) : std::string()) + "," +
               (r.is_aggregate ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Context& context) {
    CLI::App app{"Mixed-economy amplifier toolkit: government spending share, amplification gain and "
                 "intervention-threshold regions.",
                 "ammet"};
    app.footer(kExitCodes);
    app.require_subcommand(1);
    app.allow_extras(false);

    std::string output;
    std::string format_token = "csv";
    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("-o,--output", output, "Write to this file instead of standard output");
        if (with_format) {
            sub->add_option("--format", format_token, "csv or json")->capture_default_str();
        }
    };

    // table
    DataFlags table_data;
    auto* table = app.add_subcommand("table", "Amplification table (name, alpha, beta) from World Bank data");
    add_data_flags(table, table_data);
    add_common(table);

    // classify
    DataFlags classify_data;
    bool include_aggregates = false;
    auto* classify = app.add_subcommand("classify", "Region A/B/C classification with census");
    add_data_flags(classify, classify_data);
    classify->add_flag("--include-aggregates", include_aggregates, "Classify regional aggregates too");
    add_common(classify);

    // curve
    NumberFlag curve_min{"0.085"}, curve_max{"1"};
    std::size_t curve_n = 200;
    int width = 800, height = 600;
    std::string curve_format = "csv";
    auto* curve = app.add_subcommand("curve", "beta = 1/alpha curve with region bands");
    add_number(curve, "--min", curve_min, "Smallest alpha")->capture_default_str();
    add_number(curve, "--max", curve_max, "Largest alpha")->capture_default_str();
    curve->add_option("--n", curve_n, "Number of samples")->capture_default_str();
    curve->add_option("--format", curve_format, "csv, json or svg")->capture_default_str();
    curve->add_option("--width", width, "SVG width in px")->capture_default_str();
    curve->add_option("--height", height, "SVG height in px")->capture_default_str();
    add_common(curve, false);

    // scatter
    DataFlags scatter_data;
    auto* scatter = app.add_subcommand("scatter", "SVG scatter of countries over the beta = 1/alpha curve");
    add_data_flags(scatter, scatter_data);
    scatter->add_flag("--include-aggregates", include_aggregates, "Plot regional aggregates too");
    scatter->add_option("--width", width, "SVG width in px")->capture_default_str();
    scatter->add_option("--height", height, "SVG height in px")->capture_default_str();
    add_common(scatter, false);

    // whatif
    NumberFlag gdp, alpha, consumption_share;
    std::string whatif_format = "text";
    auto* whatif = app.add_subcommand("whatif", "Split GDP into C, I, G for a given government share");
    add_number(whatif, "--gdp", gdp, "Gross domestic product")->required();
    add_number(whatif, "--alpha", alpha, "Government spending share of GDP")->required();
    add_number(whatif, "--consumption-share", consumption_share, "Consumption share of private remainder")
        ->required();
    whatif->add_option("--format", whatif_format, "text or json")->capture_default_str();
    add_common(whatif, false);

    // transistor
    NumberFlag vcc{"10"}, rb{"1e6"}, rc{"1e3"}, is{"1e-14"}, vt{"0.02585"}, base_w{"1e-6"}, diff_l{"1e-5"},
        gamma{"0.995"}, icbo{"0"}, vce_sat{"0.2"};
    int max_iterations = 100;
    auto* transistor = app.add_subcommand("transistor", "DC operating point of a common-emitter stage");
    add_number(transistor, "--vcc", vcc, "Supply voltage [V]")->capture_default_str();
    add_number(transistor, "--rb", rb, "Base resistor [ohm]")->capture_default_str();
    add_number(transistor, "--rc", rc, "Collector resistor [ohm]")->capture_default_str();
    add_number(transistor, "--is", is, "Saturation current [A]")->capture_default_str();
    add_number(transistor, "--vt", vt, "Thermal voltage [V]")->capture_default_str();
    add_number(transistor, "--width", base_w, "Base width [m]")->capture_default_str();
    add_number(transistor, "--diffusion-length", diff_l, "Base diffusion length [m]")->capture_default_str();
    add_number(transistor, "--gamma", gamma, "Emitter injection efficiency")->capture_default_str();
    add_number(transistor, "--icbo", icbo, "Collector-base leakage [A]")->capture_default_str();
    add_number(transistor, "--vce-sat", vce_sat, "Saturation V_CE [V]")->capture_default_str();
    transistor->add_option("--max-iter", max_iterations, "Newton iteration cap")->capture_default_str();
    add_common(transistor, false);

    // fetch
    std::vector<std::string> raw_codes;
    int fetch_year = 2017;
    bool fetch_table = false;
    auto* fetch = app.add_subcommand("fetch", "Download indicator values from the World Bank API");
    fetch->add_option("--codes", raw_codes, "ISO3 codes, comma separated")->required();
    fetch->add_option("--year", fetch_year, "Year")->capture_default_str();
    fetch->add_flag("--table", fetch_table, "Emit the amplification table instead of raw records");
    add_common(fetch);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*table) {
            const auto format = parse_output_format(format_token);
            const auto built = build_amplification_table(load_records(table_data, context));
            for (const auto& name : built.skipped) err << "skipped (no value): " << name << "\n";
            write_output(output, emit_table(built.rows, format), out);
        } else if (*classify) {
            const auto format = parse_output_format(format_token);
            const auto records = load_records(classify_data, context);
            const auto result = classify_records(records, {include_aggregates});
            write_output(output, emit_classification(result, format), out);
        } else if (*curve) {
            if (curve_format != "svg") parse_output_format(curve_format);
            const auto series = curve_points(curve_min.value(), curve_max.value(), curve_n);
            write_output(output,
                         curve_format == "svg" ? render_scatter_svg({}, series, width, height)
                                               : emit_curve(series, parse_output_format(curve_format)),
                         out);
        } else if (*scatter) {
            if (width < 100 || height < 100) throw UsageError("SVG dimensions must be at least 100x100");
            const auto records = load_records(scatter_data, context);
            const auto result = classify_records(records, {include_aggregates});
            const auto series = curve_points(RegionBounds::a_low, 1.0, 200);
            write_output(output, render_scatter_svg(result.rows, series, width, height), out);
        } else if (*whatif) {
            if (whatif_format != "text" && whatif_format != "json") {
                throw UsageError("unknown format \"" + whatif_format + "\" (expected text or json)");
            }
            const auto account = whatif_account(gdp.value(), alpha.value(), consumption_share.value());
            std::string text;
            if (whatif_format == "json") {
                text = nlohmann::ordered_json{{"Y", account.income_Y},
                                              {"C", account.consumption_C},
                                              {"I", account.investment_I},
                                              {"G", account.government_G}}
                           .dump() +
                       "\n";
            } else {
                text = "Y=" + format_shortest(account.income_Y) + " C=" + format_shortest(account.consumption_C) +
                       " I=" + format_shortest(account.investment_I) + " G=" + format_shortest(account.government_G) +
                       "\n";
            }
            write_output(output, text, out);
        } else if (*transistor) {
            BiasCircuit circuit{vcc.value(), rb.value(), rc.value()};
            TransistorParams params;
            params.saturation_current_IS = is.value();
            params.thermal_voltage_VT = vt.value();
            params.base_width_W = base_w.value();
            params.diffusion_length_LB = diff_l.value();
            params.injection_efficiency_gamma = gamma.value();
            params.leakage_ICBO = icbo.value();
            params.vce_saturation = vce_sat.value();
            if (max_iterations < 1) throw UsageError("--max-iter must be at least 1");

            const auto op = solve_bias_point(circuit, params, {NewtonOptions{}.tolerance, max_iterations});
            const double beta = gain_from_base_width(params);
            std::ostringstream text;
            text << "v_BE=" << format_shortest(op.v_BE) << "\n"
                 << "i_B=" << format_shortest(op.i_B) << "\n"
                 << "i_C=" << format_shortest(op.i_C) << "\n"
                 << "v_CE=" << format_shortest(op.v_CE) << "\n"
                 << "saturated=" << (op.saturated ? "true" : "false") << "\n"
                 << "iterations=" << op.iterations << "\n"
                 << "beta_ideal=" << format_shortest(beta) << "\n";
            if (op.i_C > 0.0) {
                text << "beta_effective=" << format_shortest(effective_gain_with_leakage(op.i_C, beta, params.leakage_ICBO))
                     << "\n";
            }
            write_output(output, text.str(), out);
        } else if (*fetch) {
            const auto format = parse_output_format(format_token);
            const auto codes = split_codes(raw_codes);
            if (codes.empty()) throw UsageError("--codes needs at least one ISO3 code");
            auto transport = context.make_transport();
            const auto records = fetch_indicator(codes, fetch_year, *transport);
            write_output(output,
                         fetch_table ? emit_table(build_amplification_table(records).rows, format)
                                     : emit_records(records, format),
                         out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return kNumeric;
    } catch (const ParseError& e) {
        err << "data error: " << e.what() << "\n";
        return kData;
    } catch (const FetchError& e) {
        err << "data error: " << e.what() << "\n";
        return kData;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kData;
    }
    return kOk;
}

}  // namespace ammet::cli
