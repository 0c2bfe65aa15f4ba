#include "ammet/numeric_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "ammet/errors.hpp"

namespace ammet {

double round_to_decimals(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

std::string format_fixed(double value, int decimals) {
    std::array<char, 128> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, decimals);
    if (ec != std::errc{}) throw std::range_error("value too large to format");
    std::string s(buf.data(), end);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

std::string format_trimmed(double value, int decimals) {
    std::string s = format_fixed(round_to_decimals(value, decimals), decimals);
    if (s.find('.') != std::string::npos) {
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::range_error("value too large to format");
    return std::string(buf.data(), end);
}

double parse_decimal(std::string_view text) {
    std::string s(text);
    if (const auto comma = s.find(','); comma != std::string::npos) {
        if (s.find('.') != std::string::npos || s.find(',', comma + 1) != std::string::npos) {
            throw UsageError("not a number: '" + std::string(text) + "'");
        }
        s[comma] = '.';
    }
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc{} || ptr != last) {
        throw UsageError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace ammet
