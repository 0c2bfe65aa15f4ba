#pragma once

// World Bank indicator ingestion: the bulk-download CSV layout and the
// normalization of "% of GDP" values into spending shares.

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ammet {

/// General government final consumption expenditure (% of GDP).
inline constexpr std::string_view kGovernmentExpenditureIndicator = "NE.CON.GOVT.ZS";

struct CountryRecord {
    std::string name;
    std::string iso3;
    int year = 0;
    std::optional<double> expenditure_pct;  // in [0, 100] when present
    bool is_aggregate = false;              // World Bank region / income-group code

    bool operator==(const CountryRecord&) const = default;
};

/// True for the World Bank's aggregate codes ("EUU", "OED", "WLD", ...).
bool is_worldbank_aggregate(std::string_view code);

/// Parses the World Bank bulk CSV: two metadata lines, a blank line, the
/// quoted header ("Country Name","Country Code","Indicator Name",
/// "Indicator Code","1960",...) and one row per economy.
///
/// Throws ParseError (with line and column) on a malformed header, a missing
/// year column, ragged rows or non-numeric cells, and IndicatorMismatchError
/// when a row carries a different indicator code.
std::vector<CountryRecord> parse_worldbank_csv(std::istream& content, std::string_view indicator_code,
                                               int year);
std::vector<CountryRecord> parse_worldbank_csv(std::string_view content, std::string_view indicator_code,
                                               int year);

/// pct / 100 rounded to 3 decimals, the precision of the published table.
double to_alpha(double expenditure_pct);

/// to_alpha of the record's value, or nullopt when the value is missing or
/// rounds to a zero share.
std::optional<double> record_alpha(const CountryRecord& record);

/// One row of the amplification table. beta is already rounded to 6 decimals.
struct AmplificationRow {
    std::string name;
    double alpha = 0.0;
    double beta = 0.0;

    bool operator==(const AmplificationRow&) const = default;
};

struct AmplificationTable {
    std::vector<AmplificationRow> rows;  // sorted by name
    std::vector<std::string> skipped;    // names of records without a usable value
};

AmplificationTable build_amplification_table(std::span<const CountryRecord> records);

}  // namespace ammet
