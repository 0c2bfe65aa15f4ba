#pragma once

// Client for the World Bank API v2 indicator endpoint:
//   GET https://api.worldbank.org/v2/country/{ISO3;ISO3;...}/indicator/{code}
//       ?date={year}&format=json&per_page=500[&page=N]
// The response is a two-element JSON array: page metadata, then observations.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ammet/ingest.hpp"

namespace ammet {

inline constexpr std::string_view kWorldBankHost = "https://api.worldbank.org";

struct HttpResponse {
    int status = 0;
    std::string body;
};

/// Minimal GET interface so the client can run against recorded payloads.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    /// Throws TransportError when no response could be obtained.
    virtual HttpResponse get(std::string_view path) = 0;
};

/// HTTPS transport to `host` (scheme included).
std::unique_ptr<HttpTransport> make_http_transport(std::string_view host = kWorldBankHost);

/// Request path (no host) for one page of the indicator query.
std::string indicator_request_path(std::span<const std::string> iso3_codes, int year, int page = 1,
                                   std::string_view indicator_code = kGovernmentExpenditureIndicator);

struct IndicatorPage {
    int page = 1;
    int pages = 1;
    std::vector<CountryRecord> records;
};

/// Decodes one response body. Throws PayloadError on anything that does not
/// follow the documented layout, including an API error message object.
IndicatorPage parse_indicator_payload(std::string_view body,
                                      std::string_view indicator_code = kGovernmentExpenditureIndicator);

/// Fetches all pages for the given codes. Throws UsageError on an empty or
/// malformed code list before any request is made; TransportError,
/// HttpStatusError or PayloadError on failure.
std::vector<CountryRecord> fetch_indicator(std::span<const std::string> iso3_codes, int year,
                                           HttpTransport& transport,
                                           std::string_view indicator_code = kGovernmentExpenditureIndicator);

}  // namespace ammet
