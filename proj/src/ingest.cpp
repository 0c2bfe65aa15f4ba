#include "ammet/ingest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "csv_reader.hpp"
#include "ammet/core_model.hpp"
#include "ammet/errors.hpp"
#include "ammet/numeric_format.hpp"

namespace ammet {
namespace {

using detail::CsvReader;
using detail::CsvRow;

// Region, income-group and lending-category codes used by World Development
// Indicators for aggregates rather than economies.
constexpr std::array<std::string_view, 49> kAggregateCodes = {
    "AFE", "AFW", "ARB", "CEB", "CSS", "EAP", "EAR", "EAS", "ECA", "ECS", "EMU", "EUU", "FCS",
    "HIC", "HPC", "IBD", "IBT", "IDA", "IDB", "IDX", "INX", "LAC", "LCN", "LDC", "LIC", "LMC",
    "LMY", "LTE", "MEA", "MIC", "MNA", "NAC", "OED", "OSS", "PRE", "PSS", "PST", "SAS", "SSA",
    "SSF", "SST", "TEA", "TEC", "TLA", "TMN", "TSA", "TSS", "UMC", "WLD",
};

bool blank(const CsvRow& row) {
    return std::all_of(row.fields.begin(), row.fields.end(), [](const std::string& f) { return f.empty(); });
}

bool metadata(const CsvRow& row) {
    return row.fields[0] == "Data Source" || row.fields[0] == "Last Updated Date";
}

void skip_bom(std::istream& in) {
    constexpr std::string_view bom = "\xEF\xBB\xBF";
    if (in.peek() != static_cast<unsigned char>(bom[0])) return;
    char buf[3];
    in.read(buf, 3);
    if (std::string_view(buf, static_cast<std::size_t>(in.gcount())) != bom) {
        throw ParseError(1, 1, "unexpected bytes at start of file");
    }
}

bool iso3_shape(std::string_view code) {
    return code.size() == 3 &&
           std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

}  // namespace

bool is_worldbank_aggregate(std::string_view code) {
    return std::find(kAggregateCodes.begin(), kAggregateCodes.end(), code) != kAggregateCodes.end();
}

std::vector<CountryRecord> parse_worldbank_csv(std::istream& content, std::string_view indicator_code,
                                               int year) {
    skip_bom(content);
    CsvReader reader(content);
    CsvRow row;

    bool found_header = false;
    while (reader.next(row)) {
        if (blank(row) || metadata(row)) continue;
        found_header = true;
        break;
    }
    if (!found_header) throw ParseError(row.line, 0, "no header line found");

    constexpr std::array<std::string_view, 4> kLeading = {"Country Name", "Country Code",
                                                          "Indicator Name", "Indicator Code"};
    const std::size_t header_line = row.line;
    for (std::size_t i = 0; i < kLeading.size(); ++i) {
        if (i >= row.fields.size() || row.fields[i] != kLeading[i]) {
            throw ParseError(header_line, i + 1,
                             "malformed header, expected \"" + std::string(kLeading[i]) + "\"");
        }
    }
    const std::vector<std::string> header = row.fields;
    const auto year_it = std::find(header.begin() + kLeading.size(), header.end(), std::to_string(year));
    if (year_it == header.end()) {
        throw ParseError(header_line, header.size() + 1,
                         "header has no column for year " + std::to_string(year));
    }
    const auto year_col = static_cast<std::size_t>(year_it - header.begin());

    std::vector<CountryRecord> records;
    while (reader.next(row)) {
        if (blank(row)) continue;
        if (row.fields.size() != header.size()) {
            throw ParseError(row.line, std::min(row.fields.size(), header.size()) + 1,
                             "expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(row.fields.size()));
        }
        if (row.fields[3] != indicator_code) {
            throw IndicatorMismatchError(row.line, 4,
                                         "indicator \"" + row.fields[3] + "\" does not match requested \"" +
                                             std::string(indicator_code) + "\"");
        }
        if (row.fields[0].empty()) throw ParseError(row.line, 1, "empty country name");
        if (!iso3_shape(row.fields[1])) {
            throw ParseError(row.line, 2, "country code \"" + row.fields[1] + "\" is not three uppercase letters");
        }

        CountryRecord record;
        record.name = row.fields[0];
        record.iso3 = row.fields[1];
        record.year = year;
        record.is_aggregate = is_worldbank_aggregate(record.iso3);

        const std::string& cell = row.fields[year_col];
        if (!cell.empty()) {
            double pct = 0.0;
            try {
                pct = parse_decimal(cell);
            } catch (const UsageError&) {
                throw ParseError(row.line, year_col + 1, "not a number: \"" + cell + "\"");
            }
            if (!(pct >= 0.0 && pct <= 100.0)) {
                throw ParseError(row.line, year_col + 1, "percentage outside [0, 100]: " + cell);
            }
            record.expenditure_pct = pct;
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<CountryRecord> parse_worldbank_csv(std::string_view content, std::string_view indicator_code,
                                               int year) {
    std::istringstream in{std::string(content)};
    return parse_worldbank_csv(in, indicator_code, year);
}

double to_alpha(double expenditure_pct) {
    if (!(expenditure_pct > 0.0 && expenditure_pct <= 100.0)) {
        throw DomainError("expenditure share must lie in (0, 100], got " + std::to_string(expenditure_pct));
    }
    return round_to_decimals(expenditure_pct / 100.0, 3);
}

std::optional<double> record_alpha(const CountryRecord& record) {
    if (!record.expenditure_pct || !(*record.expenditure_pct > 0.0)) return std::nullopt;
    // Shares under 0.05 % round to alpha = 0, where beta is undefined.
    const double alpha = to_alpha(*record.expenditure_pct);
    if (alpha == 0.0) return std::nullopt;
    return alpha;
}

AmplificationTable build_amplification_table(std::span<const CountryRecord> records) {
    AmplificationTable table;
    for (const auto& record : records) {
        const auto alpha = record_alpha(record);
        if (!alpha) {
            table.skipped.push_back(record.name);
            continue;
        }
        table.rows.push_back({record.name, *alpha, round_to_decimals(beta_from_alpha(*alpha), 6)});
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const AmplificationRow& a, const AmplificationRow& b) { return a.name < b.name; });
    return table;
}

}  // namespace ammet
