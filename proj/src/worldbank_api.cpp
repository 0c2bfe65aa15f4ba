#include "ammet/worldbank_api.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <httplib.h>
#include <json.hpp>

#include "ammet/errors.hpp"

namespace ammet {
namespace {

using nlohmann::json;

constexpr int kPerPage = 500;

class HttplibTransport final : public HttpTransport {
public:
    explicit HttplibTransport(std::string_view host) : client_(std::string(host)) {
        client_.set_connection_timeout(10);
        client_.set_read_timeout(30);
        client_.set_follow_location(true);
    }

    HttpResponse get(std::string_view path) override {
        auto result = client_.Get(std::string(path));
        if (!result) {
            throw TransportError("request to " + std::string(path) +
                                 " failed: " + httplib::to_string(result.error()));
        }
        return {result->status, result->body};
    }

private:
    httplib::Client client_;
};

bool valid_code(std::string_view code) {
    return (code.size() == 2 || code.size() == 3) &&
           std::all_of(code.begin(), code.end(), [](unsigned char c) { return std::isalnum(c); });
}

const json& member(const json& object, const char* key) {
    if (!object.is_object() || !object.contains(key)) {
        throw PayloadError(std::string("observation is missing \"") + key + "\"");
    }
    return object.at(key);
}

int as_int(const json& value, const char* what) {
    if (value.is_number_integer()) return value.get<int>();
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw PayloadError(std::string("field \"") + what + "\" is not an integer");
}

}  // namespace

std::unique_ptr<HttpTransport> make_http_transport(std::string_view host) {
    return std::make_unique<HttplibTransport>(host);
}

std::string indicator_request_path(std::span<const std::string> iso3_codes, int year, int page,
                                   std::string_view indicator_code) {
    std::string joined;
    for (const auto& code : iso3_codes) {
        if (!joined.empty()) joined += ';';
        joined += code;
    }
    std::string path = "/v2/country/" + joined + "/indicator/" + std::string(indicator_code) +
                       "?date=" + std::to_string(year) + "&format=json&per_page=" + std::to_string(kPerPage);
    if (page > 1) path += "&page=" + std::to_string(page);
    return path;
}

IndicatorPage parse_indicator_payload(std::string_view body, std::string_view indicator_code) {
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::parse_error& e) {
        throw PayloadError(std::string("response is not JSON: ") + e.what());
    }
    if (doc.is_array() && doc.size() == 1 && doc[0].is_object() && doc[0].contains("message")) {
        throw PayloadError("API error: " + doc[0]["message"].dump());
    }
    if (!doc.is_array() || doc.size() != 2 || !doc[0].is_object()) {
        throw PayloadError("expected a two-element array [metadata, observations]");
    }

    IndicatorPage page;
    page.page = as_int(member(doc[0], "page"), "page");
    page.pages = as_int(member(doc[0], "pages"), "pages");

    // The API returns null instead of an array when nothing matched.
    if (doc[1].is_null()) return page;
    if (!doc[1].is_array()) throw PayloadError("observations are not an array");

    for (const auto& obs : doc[1]) {
        const auto& indicator = member(obs, "indicator");
        if (!member(indicator, "id").is_string() || member(indicator, "id").get<std::string>() != indicator_code) {
            throw PayloadError("observation for a different indicator: " + indicator.dump());
        }
        const auto& country = member(obs, "country");
        const auto& iso3 = member(obs, "countryiso3code");
        const auto& name = member(country, "value");
        if (!iso3.is_string() || !name.is_string()) throw PayloadError("country fields must be strings");

        CountryRecord record;
        record.name = name.get<std::string>();
        record.iso3 = iso3.get<std::string>();
        record.year = as_int(member(obs, "date"), "date");
        record.is_aggregate = is_worldbank_aggregate(record.iso3);

        const auto& value = member(obs, "value");
        if (value.is_number()) {
            const double pct = value.get<double>();
            if (!(pct >= 0.0 && pct <= 100.0)) {
                throw PayloadError("percentage outside [0, 100] for " + record.iso3);
            }
            record.expenditure_pct = pct;
        } else if (!value.is_null()) {
            throw PayloadError("value for " + record.iso3 + " is neither a number nor null");
        }
        page.records.push_back(std::move(record));
    }
    return page;
}

std::vector<CountryRecord> fetch_indicator(std::span<const std::string> iso3_codes, int year,
                                           HttpTransport& transport, std::string_view indicator_code) {
    if (iso3_codes.empty()) throw UsageError("no country codes given");
    for (const auto& code : iso3_codes) {
        if (!valid_code(code)) throw UsageError("invalid country code \"" + code + "\"");
    }

    std::vector<CountryRecord> records;
    int pages = 1;
    for (int page = 1; page <= pages; ++page) {
        const HttpResponse response = transport.get(indicator_request_path(iso3_codes, year, page, indicator_code));
        if (response.status != 200) {
            throw HttpStatusError(response.status, "HTTP status " + std::to_string(response.status));
        }
        IndicatorPage decoded = parse_indicator_payload(response.body, indicator_code);
        if (decoded.page != page) throw PayloadError("server returned page " + std::to_string(decoded.page) +
                                                     " for request " + std::to_string(page));
        pages = decoded.pages;
        std::move(decoded.records.begin(), decoded.records.end(), std::back_inserter(records));
    }
    return records;
}

}  // namespace ammet
