#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extropy/bounds.hpp"
#include "extropy/censored.hpp"
#include "extropy/conditional.hpp"
#include "extropy/empirical.hpp"
#include "extropy/error.hpp"
#include "extropy/estimators.hpp"
#include "extropy/measures.hpp"
#include "extropy/spec.hpp"
#include "extropy/systems.hpp"

namespace py = pybind11;
using namespace extropy;

namespace {

std::vector<CensoredRecord> to_records(const std::vector<double>& time, const std::vector<int>& status) {
    if (time.size() != status.size()) throw DomainError("time and status must have equal length");
    std::vector<CensoredRecord> out;
    for (std::size_t i = 0; i < time.size(); ++i) {
        if (status[i] != 0 && status[i] != 1) throw DomainError("status must be 0 or 1");
        out.push_back({time[i], status[i] == 1});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_extropy, m) {
    m.doc() = "Weighted cumulative residual and negative cumulative extropy";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_RuntimeError);

    py::class_<Distribution>(m, "Distribution")
        .def_static("uniform", &Distribution::uniform, py::arg("a"), py::arg("b"))
        .def_static("exponential", &Distribution::exponential, py::arg("rate"))
        .def_static("power", &Distribution::power, py::arg("exponent"))
        .def_static("degenerate", &Distribution::degenerate, py::arg("point"))
        .def_static("empirical", &Distribution::empirical, py::arg("values"))
        .def_static("affine", &Distribution::affine, py::arg("base"), py::arg("scale"), py::arg("shift"))
        .def_static("parse", [](const std::string& s) { return parse_model(s); }, py::arg("spec"))
        .def("cdf", &Distribution::cdf)
        .def("survival", &Distribution::survival)
        .def("pdf", &Distribution::pdf)
        .def("hazard", &Distribution::hazard)
        .def("quantile", &Distribution::quantile)
        .def("sample", &Distribution::sample, py::arg("n"), py::arg("seed"), py::arg("stream") = 0)
        .def("describe", &Distribution::describe)
        .def("__repr__", [](const Distribution& d) { return "Distribution('" + d.describe() + "')"; });

    py::class_<WeightSpec>(m, "WeightSpec")
        .def_static("power", &WeightSpec::power, py::arg("m"))
        .def_static("identity", &WeightSpec::identity)
        .def("describe", &WeightSpec::describe);

    py::enum_<Origin>(m, "Origin").value("SUPPORT", Origin::Support).value("ZERO", Origin::Zero);

    py::class_<MeasureValue>(m, "MeasureValue")
        .def_readonly("value", &MeasureValue::value)
        .def_readonly("abs_error_bound", &MeasureValue::abs_error_bound)
        .def_readonly("divergent", &MeasureValue::divergent)
        .def_property_readonly("method", [](const MeasureValue& v) { return to_string(v.method); })
        .def("__float__", [](const MeasureValue& v) { return v.value; });

    auto weight_arg = py::arg("weight") = WeightSpec::power(1.0);
    m.def(
        "gwncj",
        [](const Distribution& d, const WeightSpec& w, Origin o) { return gwncj(d, w, {o, false}); },
        py::arg("model"), weight_arg, py::arg("origin") = Origin::Support);
    m.def(
        "gwcrj",
        [](const Distribution& d, const WeightSpec& w, Origin o) { return gwcrj(d, w, {o, false}); },
        py::arg("model"), py::arg("weight") = WeightSpec::power(1.0), py::arg("origin") = Origin::Support);
    m.def("extropy", &extropy::extropy, py::arg("model"));
    m.def("wncj_max_order_stat", &wncj_max_order_stat, py::arg("model"), py::arg("n"));
    m.def("cumulative_residual_extropy", &cumulative_residual_extropy, py::arg("model"));
    m.def("cumulative_past_extropy", &cumulative_past_extropy, py::arg("model"));

    py::class_<EstimateResult>(m, "EstimateResult")
        .def_readonly("point", &EstimateResult::point)
        .def_readonly("variance", &EstimateResult::variance)
        .def_readonly("ci_low", &EstimateResult::ci_low)
        .def_readonly("ci_high", &EstimateResult::ci_high)
        .def_readonly("level", &EstimateResult::level)
        .def_readonly("n", &EstimateResult::n)
        .def_readonly("m", &EstimateResult::m)
        .def_readonly("method", &EstimateResult::method)
        .def_readonly("warnings", &EstimateResult::warnings);

    m.def(
        "t1m", [](const std::vector<double>& x, double mm, double level) { return t1m(CompleteSample(x), mm, level); },
        py::arg("sample"), py::arg("m"), py::arg("level") = 0.95);
    m.def(
        "t2m", [](const std::vector<double>& x, double mm, double level) { return t2m(CompleteSample(x), mm, level); },
        py::arg("sample"), py::arg("m"), py::arg("level") = 0.95);
    m.def(
        "t1cm",
        [](const std::vector<double>& t, const std::vector<int>& s, double mm) {
            return t1cm(CensoredSample(to_records(t, s)), mm);
        },
        py::arg("time"), py::arg("status"), py::arg("m"));
    m.def(
        "t2cm",
        [](const std::vector<double>& t, const std::vector<int>& s, double mm) {
            return t2cm(CensoredSample(to_records(t, s)), mm);
        },
        py::arg("time"), py::arg("status"), py::arg("m"));
    m.def(
        "bootstrap_ci",
        [](const std::vector<double>& t, const std::vector<int>& s, double mm, const std::string& which,
           std::size_t b, double level, std::uint64_t seed) {
            if (which != "t1c" && which != "t2c") throw DomainError("which must be 't1c' or 't2c'");
            return bootstrap_ci(CensoredSample(to_records(t, s)), mm,
                                which == "t1c" ? CensoredEstimator::T1c : CensoredEstimator::T2c, b, level, seed);
        },
        py::arg("time"), py::arg("status"), py::arg("m"), py::arg("which"), py::arg("replicates"),
        py::arg("level"), py::arg("seed"));
    m.def(
        "wncj_empirical_step", [](const std::vector<double>& x) { return wncj_empirical_step(CompleteSample(x)); },
        py::arg("sample"));
    m.def(
        "wncj_empirical_vasicek",
        [](const std::vector<double>& x, std::size_t w) {
            return w ? wncj_empirical_vasicek(CompleteSample(x), w) : wncj_empirical_vasicek(CompleteSample(x));
        },
        py::arg("sample"), py::arg("window") = 0);
    m.def("ncj_empirical", [](const std::vector<double>& x) { return ncj_empirical(CompleteSample(x)); });
    m.def("ncre_empirical", [](const std::vector<double>& x) { return ncre_empirical(CompleteSample(x)); });

    py::class_<DistortionFunction>(m, "DistortionFunction")
        .def_static("polynomial", &DistortionFunction::polynomial, py::arg("coefficients"))
        .def_static("parallel", &DistortionFunction::parallel, py::arg("n"))
        .def_static("series", &DistortionFunction::series, py::arg("n"))
        .def_static("identity", &DistortionFunction::identity)
        .def("__call__", &DistortionFunction::operator())
        .def("describe", &DistortionFunction::describe);
    m.def("system_wncj", &system_wncj, py::arg("model"), py::arg("q"));
    m.def(
        "system_bounds_distortion",
        [](const Distribution& d, const DistortionFunction& q) {
            const auto b = system_bounds_distortion(d, q);
            return py::make_tuple(b.c_low, b.c_high, b.lower, b.upper);
        },
        py::arg("model"), py::arg("q"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("name", &BoundReport::name)
        .def_readonly("lhs", &BoundReport::lhs)
        .def_readonly("rhs", &BoundReport::rhs)
        .def_readonly("satisfied", &BoundReport::satisfied)
        .def_readonly("slack", &BoundReport::slack)
        .def_readonly("excluded", &BoundReport::excluded)
        .def_readonly("diagnostic", &BoundReport::diagnostic)
        .def_readonly("note", &BoundReport::note)
        .def_property_readonly("relation", [](const BoundReport& r) { return to_string(r.relation); });
    m.def("run_bounds", &run_bounds, py::arg("model"));
    m.def(
        "cwncj_expectation_gap",
        [](const std::vector<double>& w, const std::vector<Distribution>& parts) {
            return cwncj_expectation_gap(MixtureModel(w, parts));
        },
        py::arg("weights"), py::arg("components"));
}
