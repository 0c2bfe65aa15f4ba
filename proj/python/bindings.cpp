#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ammet/classifier.hpp"
#include "ammet/core_model.hpp"
#include "ammet/errors.hpp"
#include "ammet/ingest.hpp"
#include "ammet/report.hpp"
#include "ammet/transistor.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

ammet::OutputFormat format_from(const std::string& token) { return ammet::parse_output_format(token); }

}  // namespace

PYBIND11_MODULE(_ammet, m) {
    m.doc() = "Economic-amplifier algebra, transistor analog, threshold classifier and table reports";

    auto domain_error = py::register_exception<ammet::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ammet::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ammet::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ammet::NumericError>(m, "NumericError", PyExc_ArithmeticError);
    (void)domain_error;

    // core model
    py::class_<ammet::EconomicAccount>(m, "EconomicAccount")
        .def_readonly("income_Y", &ammet::EconomicAccount::income_Y)
        .def_readonly("consumption_C", &ammet::EconomicAccount::consumption_C)
        .def_readonly("investment_I", &ammet::EconomicAccount::investment_I)
        .def_readonly("government_G", &ammet::EconomicAccount::government_G)
        .def("__repr__", [](const ammet::EconomicAccount& a) {
            return "EconomicAccount(Y=" + std::to_string(a.income_Y) + ", C=" + std::to_string(a.consumption_C) +
                   ", I=" + std::to_string(a.investment_I) + ", G=" + std::to_string(a.government_G) + ")";
        });
    py::class_<ammet::AmplificationPoint>(m, "AmplificationPoint")
        .def_readonly("alpha", &ammet::AmplificationPoint::alpha)
        .def_readonly("beta", &ammet::AmplificationPoint::beta);

    m.def("equilibrium_income", &ammet::equilibrium_income, "consumption"_a, "investment"_a, "government"_a);
    m.def("beta_from_alpha", &ammet::beta_from_alpha, "alpha"_a);
    m.def("alpha_from_beta", &ammet::alpha_from_beta, "beta"_a);
    m.def("government_spending", &ammet::government_spending, "alpha"_a, "gdp"_a);
    m.def("investment_amplification", &ammet::investment_amplification, "income"_a, "investment"_a);
    m.def("whatif_account", &ammet::whatif_account, "gdp"_a, "alpha"_a, "consumption_share"_a);

    // transistor analog
    py::class_<ammet::TransistorParams>(m, "TransistorParams")
        .def(py::init<>())
        .def_readwrite("saturation_current_IS", &ammet::TransistorParams::saturation_current_IS)
        .def_readwrite("thermal_voltage_VT", &ammet::TransistorParams::thermal_voltage_VT)
        .def_readwrite("base_width_W", &ammet::TransistorParams::base_width_W)
        .def_readwrite("diffusion_length_LB", &ammet::TransistorParams::diffusion_length_LB)
        .def_readwrite("injection_efficiency_gamma", &ammet::TransistorParams::injection_efficiency_gamma)
        .def_readwrite("leakage_ICBO", &ammet::TransistorParams::leakage_ICBO)
        .def_readwrite("vce_saturation", &ammet::TransistorParams::vce_saturation);
    py::class_<ammet::BiasCircuit>(m, "BiasCircuit")
        .def(py::init<>())
        .def(py::init([](double vcc, double rb, double rc) { return ammet::BiasCircuit{vcc, rb, rc}; }),
             "supply_VCC"_a, "base_resistor_RB"_a, "collector_resistor_RC"_a)
        .def_readwrite("supply_VCC", &ammet::BiasCircuit::supply_VCC)
        .def_readwrite("base_resistor_RB", &ammet::BiasCircuit::base_resistor_RB)
        .def_readwrite("collector_resistor_RC", &ammet::BiasCircuit::collector_resistor_RC);
    py::class_<ammet::OperatingPoint>(m, "OperatingPoint")
        .def_readonly("v_BE", &ammet::OperatingPoint::v_BE)
        .def_readonly("i_B", &ammet::OperatingPoint::i_B)
        .def_readonly("i_C", &ammet::OperatingPoint::i_C)
        .def_readonly("v_CE", &ammet::OperatingPoint::v_CE)
        .def_readonly("saturated", &ammet::OperatingPoint::saturated)
        .def_readonly("iterations", &ammet::OperatingPoint::iterations);

    m.def("current_gain", &ammet::current_gain, "i_c"_a, "i_b"_a);
    m.def("base_current", &ammet::base_current, "i_r"_a, "i_cbo"_a);
    m.def("gain_from_base_width", &ammet::gain_from_base_width, "params"_a);
    m.def("effective_gain_with_leakage", &ammet::effective_gain_with_leakage, "i_c"_a, "beta_ideal"_a, "i_cbo"_a);
    m.def(
        "solve_bias_point",
        [](const ammet::BiasCircuit& c, const ammet::TransistorParams& p, int max_iterations) {
            return ammet::solve_bias_point(c, p, {ammet::NewtonOptions{}.tolerance, max_iterations});
        },
        "circuit"_a, "params"_a, "max_iterations"_a = 100);

    // ingestion
    py::class_<ammet::CountryRecord>(m, "CountryRecord")
        .def(py::init<>())
        .def(py::init([](std::string name, std::string iso3, int year, std::optional<double> pct, bool agg) {
                 return ammet::CountryRecord{std::move(name), std::move(iso3), year, pct, agg};
             }),
             "name"_a, "iso3"_a, "year"_a, "expenditure_pct"_a = py::none(), "is_aggregate"_a = false)
        .def_readwrite("name", &ammet::CountryRecord::name)
        .def_readwrite("iso3", &ammet::CountryRecord::iso3)
        .def_readwrite("year", &ammet::CountryRecord::year)
        .def_readwrite("expenditure_pct", &ammet::CountryRecord::expenditure_pct)
        .def_readwrite("is_aggregate", &ammet::CountryRecord::is_aggregate);
    py::class_<ammet::AmplificationRow>(m, "AmplificationRow")
        .def_readonly("name", &ammet::AmplificationRow::name)
        .def_readonly("alpha", &ammet::AmplificationRow::alpha)
        .def_readonly("beta", &ammet::AmplificationRow::beta);

    m.def(
        "parse_worldbank_csv",
        [](const std::string& content, int year, const std::string& indicator) {
            return ammet::parse_worldbank_csv(std::string_view(content), indicator, year);
        },
        "content"_a, "year"_a = 2017, "indicator_code"_a = std::string(ammet::kGovernmentExpenditureIndicator));
    m.def("to_alpha", &ammet::to_alpha, "expenditure_pct"_a);
    m.def(
        "build_amplification_table",
        [](const std::vector<ammet::CountryRecord>& records) {
            auto table = ammet::build_amplification_table(records);
            return py::make_tuple(table.rows, table.skipped);
        },
        "records"_a, "Returns (rows, skipped_names).");

    // classifier
    py::enum_<ammet::Region>(m, "Region")
        .value("A", ammet::Region::A)
        .value("B", ammet::Region::B)
        .value("C", ammet::Region::C)
        .value("BelowA", ammet::Region::BelowA)
        .value("GapAB", ammet::Region::GapAB);
    py::class_<ammet::ClassifiedRecord>(m, "ClassifiedRecord")
        .def_readonly("country", &ammet::ClassifiedRecord::country)
        .def_readonly("alpha", &ammet::ClassifiedRecord::alpha)
        .def_readonly("beta", &ammet::ClassifiedRecord::beta)
        .def_readonly("region", &ammet::ClassifiedRecord::region);
    m.def("classify_alpha", &ammet::classify_alpha, "alpha"_a);
    m.def(
        "classify_records",
        [](const std::vector<ammet::CountryRecord>& records, bool include_aggregates) {
            auto result = ammet::classify_records(records, {include_aggregates});
            py::dict census;
            for (auto region : ammet::kAllRegions) census[py::str(std::string(ammet::to_string(region)))] = result.census[region];
            return py::make_tuple(result.rows, census, result.skipped);
        },
        "records"_a, "include_aggregates"_a = false, "Returns (rows, census, skipped).");

    // report
    m.def(
        "curve_points",
        [](double lo, double hi, std::size_t n) { return ammet::curve_points(lo, hi, n).points; }, "alpha_min"_a,
        "alpha_max"_a, "n"_a);
    m.def(
        "emit_table",
        [](const std::vector<ammet::AmplificationRow>& rows, const std::string& format) {
            return ammet::emit_table(rows, format_from(format));
        },
        "rows"_a, "format"_a = "csv");
    m.def(
        "render_scatter_svg",
        [](const std::vector<ammet::ClassifiedRecord>& rows, double lo, double hi, std::size_t n, int width,
           int height) { return ammet::render_scatter_svg(rows, ammet::curve_points(lo, hi, n), width, height); },
        "rows"_a, "alpha_min"_a = 0.085, "alpha_max"_a = 1.0, "n"_a = 200, "width"_a = 800, "height"_a = 600);
}
