#pragma once

// Intervention-threshold regions over the government spending share alpha:
//   A      0.085 <= alpha <= 0.35   sustainable mixed economy
//   B      0.4   <= alpha <= 0.75   extended social protection
//   C      alpha >  0.75            weak growth (beta < 4/3)
// plus two labels for shares no region covers: BelowA (alpha < 0.085) and
// GapAB (0.35 < alpha < 0.4).

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ammet/ingest.hpp"

namespace ammet {

enum class Region { A, B, C, BelowA, GapAB };

inline constexpr std::array<Region, 5> kAllRegions = {Region::A, Region::B, Region::C, Region::BelowA,
                                                      Region::GapAB};

struct RegionBounds {
    static constexpr double a_low = 0.085;
    static constexpr double a_high = 0.35;
    static constexpr double b_low = 0.4;
    static constexpr double b_high = 0.75;
};

std::string_view to_string(Region region);

Region classify_alpha(double alpha);

struct ClassifiedRecord {
    CountryRecord country;
    double alpha = 0.0;
    double beta = 0.0;
    Region region = Region::A;
};

class RegionCensus {
public:
    void add(Region r) { ++counts_[static_cast<std::size_t>(r)]; }
    std::size_t operator[](Region r) const { return counts_[static_cast<std::size_t>(r)]; }
    std::size_t total() const;

    bool operator==(const RegionCensus&) const = default;

private:
    std::array<std::size_t, kAllRegions.size()> counts_{};
};

struct ClassifyOptions {
    bool include_aggregates = false;
};

/// rows.size() + skipped.size() + excluded_aggregates.size() == input size,
/// and census.total() == rows.size().
struct Classification {
    std::vector<ClassifiedRecord> rows;
    RegionCensus census;
    std::vector<CountryRecord> skipped;              // missing or zero value
    std::vector<CountryRecord> excluded_aggregates;  // only when !include_aggregates
};

Classification classify_records(std::span<const CountryRecord> records, const ClassifyOptions& options = {});

}  // namespace ammet
