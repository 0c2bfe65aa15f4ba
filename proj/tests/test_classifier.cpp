#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ammet/classifier.hpp"
#include "ammet/errors.hpp"
#include "test_support.hpp"

using namespace ammet;

namespace {

CountryRecord record(std::string name, std::optional<double> pct, bool aggregate = false) {
    return {std::move(name), "XXX", 2017, pct, aggregate};
}

}  // namespace

TEST_CASE("classify_alpha examples") {
    CHECK(classify_alpha(0.182) == Region::A);
    CHECK(classify_alpha(0.5) == Region::B);
    CHECK(classify_alpha(0.8) == Region::C);
    CHECK(classify_alpha(0.37) == Region::GapAB);
    CHECK(classify_alpha(0.05) == Region::BelowA);
    CHECK(classify_alpha(1.7) == Region::C);
}

TEST_CASE("classify_alpha boundaries are inclusive on the stated bounds") {
    CHECK(classify_alpha(0.085) == Region::A);
    CHECK(classify_alpha(0.35) == Region::A);
    CHECK(classify_alpha(0.4) == Region::B);
    CHECK(classify_alpha(0.75) == Region::B);
    CHECK(classify_alpha(std::nextafter(0.085, 0.0)) == Region::BelowA);
    CHECK(classify_alpha(std::nextafter(0.35, 1.0)) == Region::GapAB);
    CHECK(classify_alpha(std::nextafter(0.4, 0.0)) == Region::GapAB);
    CHECK(classify_alpha(std::nextafter(0.75, 1.0)) == Region::C);
}

TEST_CASE("classify_alpha rejects non-positive and non-finite shares") {
    CHECK_THROWS_AS(classify_alpha(0.0), DomainError);
    CHECK_THROWS_AS(classify_alpha(-0.2), DomainError);
    CHECK_THROWS_AS(classify_alpha(NAN), DomainError);
    CHECK_THROWS_AS(classify_alpha(INFINITY), DomainError);
}

TEST_CASE("property: every positive share gets exactly one label, C implies beta < 4/3") {
    auto rng = testing::seeded_rng(5);
    std::uniform_real_distribution<double> log_alpha(-6.0, 1.0);
    for (int k = 0; k < 20000; ++k) {
        const double a = std::pow(10.0, log_alpha(rng));
        const Region r = classify_alpha(a);
        const int matches = (a >= 0.085 && a <= 0.35) + (a >= 0.4 && a <= 0.75) + (a > 0.75) + (a < 0.085) +
                            (a > 0.35 && a < 0.4);
        REQUIRE(matches == 1);
        if (r == Region::C && a <= 1.0) REQUIRE(1.0 / a < 1.3334);
    }
}

TEST_CASE("classify_records census") {
    const std::vector<CountryRecord> records = {record("a", 5.0), record("b", 20.0), record("c", 50.0),
                                                record("d", 90.0)};
    const auto result = classify_records(records);
    CHECK(result.rows.size() == 4);
    CHECK(result.census[Region::BelowA] == 1);
    CHECK(result.census[Region::A] == 1);
    CHECK(result.census[Region::B] == 1);
    CHECK(result.census[Region::C] == 1);
    CHECK(result.census[Region::GapAB] == 0);
    CHECK(result.census.total() == 4);
    for (const auto& row : result.rows) CHECK(std::abs(row.alpha * row.beta - 1.0) <= 1e-12);
}

TEST_CASE("classify_records on empty input") {
    const auto result = classify_records({});
    CHECK(result.rows.empty());
    CHECK(result.census == RegionCensus{});
    CHECK(result.skipped.empty());
}

TEST_CASE("missing and zero values are reported, never dropped") {
    const std::vector<CountryRecord> records = {record("missing", std::nullopt), record("zero", 0.0),
                                                record("tiny", 0.01), record("ok", 18.2),
                                                record("agg", 20.4, true)};
    const auto result = classify_records(records);
    CHECK(result.rows.size() == 1);
    CHECK(result.skipped.size() == 3);
    CHECK(result.excluded_aggregates.size() == 1);
    CHECK(result.rows.size() + result.skipped.size() + result.excluded_aggregates.size() == records.size());

    const auto with_aggregates = classify_records(records, {true});
    CHECK(with_aggregates.rows.size() == 2);
    CHECK(with_aggregates.excluded_aggregates.empty());
}

TEST_CASE("golden-table entries all land in region A") {
    std::vector<CountryRecord> countries, everything;
    for (const auto& g : testing::golden_table()) {
        CountryRecord r{g.name, g.iso3, 2017, std::stod(g.alpha) * 100.0, testing::is_table_aggregate(g.iso3)};
        everything.push_back(r);
        if (!r.is_aggregate) countries.push_back(r);
    }
    REQUIRE(countries.size() == 36);

    const auto result = classify_records(countries);
    CHECK(result.census[Region::A] == 36);
    CHECK(result.census[Region::C] == 0);
    CHECK(result.census.total() == 36);

    const auto all = classify_records(everything, {true});
    CHECK(all.census[Region::A] == 42);
    CHECK(all.census[Region::C] == 0);
}

TEST_CASE("property: census is invariant under permutation") {
    auto rng = testing::seeded_rng(6);
    std::uniform_real_distribution<double> pct(0.0, 100.0);
    std::vector<CountryRecord> records;
    for (int k = 0; k < 300; ++k) records.push_back(record("r" + std::to_string(k), pct(rng)));
    const auto reference = classify_records(records).census;
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(records.begin(), records.end(), rng);
        REQUIRE(classify_records(records).census == reference);
    }
}
