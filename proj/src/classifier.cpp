#include "ammet/classifier.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ammet/core_model.hpp"
#include "ammet/errors.hpp"

namespace ammet {

std::string_view to_string(Region region) {
    switch (region) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::BelowA: return "BelowA";
        case Region::GapAB: return "GapAB";
    }
    return "?";
}

Region classify_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw DomainError("alpha must be finite and positive, got " + std::to_string(alpha));
    }
    if (alpha < RegionBounds::a_low) return Region::BelowA;
    if (alpha <= RegionBounds::a_high) return Region::A;
    if (alpha < RegionBounds::b_low) return Region::GapAB;
    if (alpha <= RegionBounds::b_high) return Region::B;
    return Region::C;
}

std::size_t RegionCensus::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

Classification classify_records(std::span<const CountryRecord> records, const ClassifyOptions& options) {
    Classification out;
    for (const auto& record : records) {
        if (record.is_aggregate && !options.include_aggregates) {
            out.excluded_aggregates.push_back(record);
            continue;
        }
        const auto alpha = record_alpha(record);
        if (!alpha) {
            out.skipped.push_back(record);
            continue;
        }
        ClassifiedRecord row{record, *alpha, beta_from_alpha(*alpha), classify_alpha(*alpha)};
        out.census.add(row.region);
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace ammet
