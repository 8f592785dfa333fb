#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fstype/admissibility.hpp"
#include "fstype/algebra.hpp"
#include "fstype/relations.hpp"
#include "fstype/verifier.hpp"

namespace py = pybind11;

namespace {

fstype::HighestWeight make_weight(const std::vector<int>& weights) {
    return fstype::HighestWeight(weights);
}

std::vector<std::vector<std::string>> basis(int ell, const std::vector<int>& weights, int max_degree) {
    if (static_cast<int>(weights.size()) != ell + 1)
        throw std::invalid_argument("weights needs exactly ell+1 components");
    auto buckets = fstype::enumerate_basis(make_weight(weights), max_degree);
    std::vector<std::vector<std::string>> out(buckets.size());
    for (std::size_t d = 0; d < buckets.size(); ++d)
        for (const auto& m : buckets[d]) out[d].push_back(m.str());
    return out;
}

std::vector<long long> character(int ell, const std::vector<int>& weights, int max_degree) {
    if (static_cast<int>(weights.size()) != ell + 1)
        throw std::invalid_argument("weights needs exactly ell+1 components");
    return fstype::character(make_weight(weights), max_degree).coefficients;
}

std::vector<std::tuple<int, std::vector<int>, long long>> refined_character(
    int ell, const std::vector<int>& weights, int max_degree) {
    if (static_cast<int>(weights.size()) != ell + 1)
        throw std::invalid_argument("weights needs exactly ell+1 components");
    auto series = fstype::character(make_weight(weights), max_degree, true);
    std::vector<std::tuple<int, std::vector<int>, long long>> out;
    for (const auto& block : series.refined) out.emplace_back(block.degree, block.weight, block.count);
    return out;
}

std::vector<std::pair<std::string, std::string>> relations(int ell, const std::vector<int>& weights,
                                                           int max_degree) {
    if (static_cast<int>(weights.size()) != ell + 1)
        throw std::invalid_argument("weights needs exactly ell+1 components");
    auto gens = fstype::generators(make_weight(weights), max_degree);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& gen : gens.entries) out.emplace_back(gen.provenance.str(), gen.poly.str());
    return out;
}

bool verify(int ell, const std::vector<int>& weights, int max_degree) {
    if (static_cast<int>(weights.size()) != ell + 1)
        throw std::invalid_argument("weights needs exactly ell+1 components");
    return fstype::verify_presentation(make_weight(weights), max_degree).match;
}

std::string verify_report_json(int ell, const std::vector<int>& weights, int max_degree) {
    if (static_cast<int>(weights.size()) != ell + 1)
        throw std::invalid_argument("weights needs exactly ell+1 components");
    return fstype::report_json(fstype::verify_presentation(make_weight(weights), max_degree));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Admissible bases and ideal presentations of type C principal-like subspaces";

    m.def("basis", &basis, py::arg("ell"), py::arg("weights"), py::arg("max_degree"),
          "Admissible monomials per degree, as canonical strings.");
    m.def("character", &character, py::arg("ell"), py::arg("weights"), py::arg("max_degree"),
          "Number of admissible monomials per degree.");
    m.def("refined_character", &refined_character, py::arg("ell"), py::arg("weights"),
          py::arg("max_degree"), "(degree, weight, count) blocks of the graded character.");
    m.def("relations", &relations, py::arg("ell"), py::arg("weights"), py::arg("max_degree"),
          "Ideal generators up to the degree bound, as (tag, polynomial) pairs.");
    m.def("verify", &verify, py::arg("ell"), py::arg("weights"), py::arg("max_degree"),
          "True when standard monomials equal admissible monomials at every degree.");
    m.def("verify_report_json", &verify_report_json, py::arg("ell"), py::arg("weights"),
          py::arg("max_degree"), "Full blockwise verification report as JSON.");
}
