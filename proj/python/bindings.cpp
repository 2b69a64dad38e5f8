#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tcc/io.hpp>

#include <sstream>

namespace py = pybind11;
using namespace tcc;

namespace {

std::string cert_sha(const CanonicalCert& cert) {
    return io::sha256_hex(
        {reinterpret_cast<const char*>(cert.bytes.data()), cert.bytes.size()});
}

std::string code_repr(const LinearCode& c) {
    std::ostringstream out;
    out << "LinearCode([" << c.n() << "," << c.k() << "]";
    for (const auto& row : c.row_strings()) out << " " << row;
    out << ")";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_tcc, m) {
    m.doc() = "classification of ternary linear codes up to monomial equivalence";

    py::class_<WeightEnumerator>(m, "WeightEnumerator")
        .def_readonly("coeffs", &WeightEnumerator::coeffs)
        .def("__str__", &WeightEnumerator::str)
        .def("__repr__",
             [](const WeightEnumerator& w) { return "WeightEnumerator(" + w.str() + ")"; })
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<LinearCode>(m, "LinearCode")
        .def(py::init(
                 [](const std::vector<std::string>& rows) { return LinearCode::parse(rows); }),
             py::arg("rows"), "Span of the given rows, each a string of digits 0/1/2.")
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("k", &LinearCode::k)
        .def("rows", &LinearCode::row_strings)
        .def("min_weight", &LinearCode::min_weight)
        .def("hamming_we", &LinearCode::hamming_we)
        .def("puncture", &LinearCode::puncture, py::arg("drop"),
             "Delete the given 1-based coordinates from every codeword.")
        .def("dual", &LinearCode::dual)
        .def("is_formally_self_dual", &LinearCode::is_formally_self_dual)
        .def("same_code_as", &LinearCode::same_code_as, py::arg("other"))
        .def("codeword_strings",
             [](const LinearCode& c) {
                 std::vector<std::string> out;
                 c.for_each_codeword([&](const gf3::Vec& v) { out.push_back(v.str()); });
                 return out;
             })
        .def("__repr__", &code_repr);

    py::class_<MonomialMap>(m, "MonomialMap")
        .def_readonly("perm", &MonomialMap::perm)
        .def_readonly("signs", &MonomialMap::signs)
        .def_property_readonly("degree", &MonomialMap::degree)
        .def("inverse", &MonomialMap::inverse)
        .def_static("identity", &MonomialMap::identity, py::arg("n"))
        .def_static("compose", &MonomialMap::compose, py::arg("f"), py::arg("g"))
        .def(py::self == py::self);

    m.def("apply_monomial", &apply_monomial, py::arg("code"), py::arg("map"));
    m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"),
          "Monomial equivalence of two codes of the same length.",
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "equivalence_witness",
        [](const LinearCode& a, const LinearCode& b) -> std::optional<MonomialMap> {
            return equivalence_witness(a, b);
        },
        py::arg("a"), py::arg("b"),
        "A monomial map carrying a onto b, or None.",
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "automorphism_order",
        [](const LinearCode& c) { return automorphisms(c).order; }, py::arg("code"),
        "Order of the monomial automorphism group.",
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "cert_sha256", [](const LinearCode& c) { return cert_sha(canonical_cert(gamma(c))); },
        py::arg("code"),
        "SHA-256 of the canonical certificate; equal exactly for equivalent codes.",
        py::call_guard<py::gil_scoped_release>());

    py::class_<DesignReport>(m, "DesignReport")
        .def_readonly("point_count", &DesignReport::point_count)
        .def_readonly("block_size", &DesignReport::block_size)
        .def_readonly("blocks", &DesignReport::blocks)
        .def_readonly("max_t", &DesignReport::max_t)
        .def_readonly("lambda_", &DesignReport::lambda);

    m.def("design_strength", &design_strength, py::arg("code"),
          "Block system of the minimum-weight supports and its largest design strength.");

    py::class_<RefinedWeightEnumerator>(m, "RefinedWeightEnumerator")
        .def("at", &RefinedWeightEnumerator::at, py::arg("w"), py::arg("n1"), py::arg("n2"))
        .def("terms", &RefinedWeightEnumerator::terms)
        .def("total", &RefinedWeightEnumerator::total)
        .def("hamming_marginal", &RefinedWeightEnumerator::hamming_marginal)
        .def("x_marginal", &RefinedWeightEnumerator::x_marginal)
        .def("__str__", &RefinedWeightEnumerator::str)
        .def("__repr__",
             [](const RefinedWeightEnumerator& r) {
                 return "RefinedWeightEnumerator(" + r.str() + ")";
             })
        .def(py::self == py::self)
        .def(py::self < py::self);

    m.def("refined_we", &refined_we, py::arg("code12"),
          "Weight enumerator of a [12,5] code keeping the last two coordinates symbolic.");

    py::class_<CodeClass>(m, "CodeClass")
        .def_readonly("rep", &CodeClass::rep)
        .def_readonly("we", &CodeClass::we)
        .def_readonly("aut_order", &CodeClass::aut_order)
        .def_readonly("formally_self_dual", &CodeClass::formally_self_dual)
        .def_readonly("design", &CodeClass::design)
        .def("a_string", &CodeClass::a_string)
        .def_property_readonly("cert_sha256",
                               [](const CodeClass& c) { return cert_sha(c.cert); });

    py::class_<ClassificationResult>(m, "ClassificationResult")
        .def_readonly("target_d", &ClassificationResult::target_d)
        .def_readonly("matrix_count", &ClassificationResult::matrix_count)
        .def_readonly("we_class_count", &ClassificationResult::we_class_count)
        .def_readonly("classes", &ClassificationResult::classes)
        .def("class_count", &ClassificationResult::class_count);

    m.def(
        "classify10",
        [](int min_weight, unsigned threads, const std::string& checkpoint_dir) {
            ClassifyOptions opts;
            opts.threads = threads;
            opts.checkpoint_dir = checkpoint_dir;
            return classify10(SearchConfig::for_min_weight(min_weight), opts);
        },
        py::arg("min_weight"), py::arg("threads") = 0, py::arg("checkpoint_dir") = "",
        "Enumerate and classify all [10,5,min_weight] codes (min_weight 3 or 4).",
        py::call_guard<py::gil_scoped_release>());
    m.def("classify_codes", &classify_codes, py::arg("codes"),
          "Group explicit codes of one (n, k) into equivalence classes.",
          py::call_guard<py::gil_scoped_release>());

    m.def("builtin_10_5_5", &builtin_10_5_5, "The unique [10,5,5] code.");
    m.def("check_c1", &check_c1, py::arg("code12"));
    m.def("check_c2", &check_c2, py::arg("code12"));
    m.def("check_c3", &check_c3, py::arg("code12"));
    m.def("sz_equivalent", &sz_equivalent, py::arg("a"), py::arg("b"),
          "Equivalence preserving the 10+2 coordinate split; inputs must satisfy c1-c3.",
          py::call_guard<py::gil_scoped_release>());

    py::class_<Survivor>(m, "Survivor")
        .def_readonly("code", &Survivor::code)
        .def_readonly("min_weight", &Survivor::min_weight)
        .def_readonly("source_d", &Survivor::source_d)
        .def_readonly("refined", &Survivor::refined)
        .def_readonly("sz_class_size", &Survivor::sz_class_size)
        .def_property_readonly("punctured_cert_sha256",
                               [](const Survivor& s) { return cert_sha(s.punctured_cert); });

    py::class_<Extend12Result>(m, "Extend12Result")
        .def_readonly("survivors", &Extend12Result::survivors)
        .def_readonly("d5_c1_classes", &Extend12Result::d5_c1_classes)
        .def_readonly("d4_c1_classes", &Extend12Result::d4_c1_classes)
        .def_readonly("d4_c1c3_classes", &Extend12Result::d4_c1c3_classes)
        .def_readonly("d3_c1_classes", &Extend12Result::d3_c1_classes)
        .def_readonly("d3_c1c3_classes", &Extend12Result::d3_c1c3_classes);

    m.def("extend_fixture_only", &extend_fixture_only,
          "Extensions of the built-in [10,5,5] code only.",
          py::call_guard<py::gil_scoped_release>());
    m.def("classify_12_5", &classify_12_5, py::arg("d3"), py::arg("d4"),
          "The complete [12,5] classification from both [10,5] classifications.",
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "read_codes_file",
        [](const std::string& path) { return io::read_codes_file(path); }, py::arg("path"));
    m.def(
        "write_codes_file",
        [](const std::string& path, const std::vector<LinearCode>& codes,
           const std::string& header) { io::write_codes_file(path, codes, header); },
        py::arg("path"), py::arg("codes"), py::arg("header") = "");
    m.def(
        "load_classification",
        [](const std::string& dir, int target_d) {
            return io::load_classification(dir, target_d);
        },
        py::arg("dir"), py::arg("target_d"),
        "Rebuild a classification from an output directory, re-deriving all metadata.",
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "classification_summary_json",
        [](const ClassificationResult& r) { return io::classification_summary(r).dump(2); },
        py::arg("result"));
    m.def(
        "extension_summary_json",
        [](const Extend12Result& r) { return io::extension_summary(r).dump(2); },
        py::arg("result"));
    m.def(
        "analysis_summary_json",
        [](const std::vector<LinearCode>& codes) {
            return io::analysis_summary(codes).dump(2);
        },
        py::arg("codes"));

    m.attr("__version__") = io::kToolVersion;
}
