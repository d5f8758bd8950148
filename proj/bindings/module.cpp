#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "motivic/hilbert.hpp"
#include "motivic/json_io.hpp"
#include "motivic/localization.hpp"
#include "motivic/parser.hpp"
#include "motivic/ring.hpp"
#include "motivic/snc.hpp"

namespace py = pybind11;
using namespace motivic;

namespace {

Int int_from_py(const py::int_& v) { return Int(py::str(v).cast<std::string>()); }
py::int_ int_to_py(const Int& v) { return py::int_(py::str(v.str())); }

SncModel model_from_json_text(const std::string& text, const AtomTable& table) {
    return load_snc_model(nlohmann::json::parse(text), table);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic in the localized equivariant Grothendieck ring of varieties, "
              "motivic integration over SNC resolution data, torus localization, and the "
              "refined DT series of points on affine 3-space.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedSmash>(m, "UnsupportedSmashError", PyExc_ValueError);
    py::register_exception<NonGenericAction>(m, "NonGenericActionError", PyExc_ValueError);
    py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
    py::register_exception<SpecializationError>(m, "SpecializationError", PyExc_ValueError);

    py::class_<AtomTable>(m, "AtomTable", "Atom/bundle lookup table; constructed with the built-ins")
        .def(py::init<>())
        .def("add_atom",
             [](AtomTable& t, const std::string& name, long long euler, int mu_order,
                const std::string& poincare) {
                 Atom a{name, euler, mu_order, std::nullopt, std::nullopt};
                 if (!poincare.empty()) a.poincare = parse_laurent(poincare);
                 t.add_atom(std::move(a));
             },
             py::arg("name"), py::arg("euler"), py::arg("mu_order") = 1, py::arg("poincare") = "")
        .def("add_bundle",
             [](AtomTable& t, const std::string& name, int euler_sign) {
                 t.add_bundle({name, euler_sign});
             },
             py::arg("name"), py::arg("euler_sign") = 1)
        .def_static("from_json", [](const std::string& text) {
            return load_atom_table(nlohmann::json::parse(text));
        });

    py::class_<MotivicClass>(m, "MotivicClass", "Ring element in canonical normal form")
        .def(py::init<>())
        .def_static("integer", [](const py::int_& n) { return MotivicClass::integer(int_from_py(n)); })
        .def_static("lefschetz", [](long long twice) { return MotivicClass::lefschetz(HalfInt::halves(twice)); },
                    py::arg("twice_exponent"), "L^{twice_exponent/2}")
        .def("__add__", [](const MotivicClass& a, const MotivicClass& b) { return a + b; })
        .def("__sub__", [](const MotivicClass& a, const MotivicClass& b) { return a - b; })
        .def("__mul__", &MotivicClass::smash)
        .def("__neg__", [](const MotivicClass& a) { return -a; })
        .def("__eq__", [](const MotivicClass& a, const MotivicClass& b) { return a == b; })
        .def("__repr__", [](const MotivicClass& a) { return print_canonical(a); })
        .def("__str__", [](const MotivicClass& a) { return print_canonical(a); })
        .def("is_zero", &MotivicClass::is_zero);

    m.def("parse", &parse, py::arg("text"), py::arg("table") = AtomTable(),
          "Parse an expression to a MotivicClass");
    m.def("print_canonical", &print_canonical);
    m.def("smash", [](const MotivicClass& a, const MotivicClass& b) { return a.smash(b); });
    m.def("upsilon",
          [](const std::string& generator, const MotivicClass& base, const AtomTable& table) {
              const BundleGenerator* g = table.find_bundle(generator);
              if (!g) throw ModelError("unknown bundle generator '" + generator + "'");
              return upsilon(*g, base);
          },
          py::arg("generator"), py::arg("base"), py::arg("table"));
    m.def("euler_specialize",
          [](const MotivicClass& x, const AtomTable& table) { return int_to_py(euler_specialize(x, table)); },
          py::arg("x"), py::arg("table") = AtomTable());
    m.def("weight_specialize",
          [](const MotivicClass& x, const AtomTable& table) { return weight_specialize(x, table).str(); },
          py::arg("x"), py::arg("table") = AtomTable(),
          "Laurent polynomial in q^{1/2}, as canonical text");
    m.def("rewrite_mu2", &rewrite_mu2);

    py::class_<SncModel>(m, "SncModel", "Combinatorial SNC resolution data")
        .def_static("from_json", &model_from_json_text, py::arg("text"), py::arg("table") = AtomTable());
    m.def("snc_integral", &integral, py::arg("model"), py::arg("m"));
    m.def("snc_expansion",
          [](const SncModel& model, long long order) { return expand(volume_series(model), order); },
          py::arg("model"), py::arg("order"),
          "Coefficients of T^0..T^order of the volume Poincare series");
    m.def("motivic_volume", &motivic_volume);
    m.def("nearby_cycle", &nearby_cycle);
    m.def("vanishing_cycle", &vanishing_cycle);
    m.def("piece_volume", &piece_volume, py::arg("open_dims"), py::arg("closed_dims"));
    m.def("annulus_volume", &annulus_volume);

    m.def("virtual_index",
          [](const std::vector<long long>& weights) { return virtual_index(weights); });
    m.def("localize",
          [](const std::vector<std::tuple<std::string, long long, MotivicClass>>& strata) {
              std::vector<FixedStratum> v;
              for (const auto& [name, index, motive] : strata) v.push_back({name, motive, index});
              return localize(v);
          },
          py::arg("strata"), "strata: list of (name, index, motive) tuples");
    m.def("isolated_sum",
          [](const std::vector<long long>& indices) { return isolated_sum(indices); });

    py::class_<PlanePartition>(m, "PlanePartition")
        .def_property_readonly("boxes", [](const PlanePartition& p) { return p.boxes; })
        .def("__len__", &PlanePartition::size)
        .def("__repr__", &PlanePartition::str);
    m.def("plane_partitions", &enumerate_plane_partitions, py::arg("n"));
    m.def("macmahon_counts", [](int order) {
        std::vector<py::int_> out;
        for (const auto& c : macmahon_counts(order)) out.push_back(int_to_py(c));
        return out;
    });
    m.def("tangent_character", [](const PlanePartition& p) {
        std::map<std::tuple<int, int, int>, long long> out;
        for (const auto& [w, mult] : tangent_character(p).weights)
            out[{w[0], w[1], w[2]}] = mult;
        return out;
    });
    m.def("tangent_dimension",
          [](const PlanePartition& p) { return tangent_character(p).dimension(); });
    m.def("index_of", &index_of, py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("bbs_series", &bbs_series, py::arg("order"),
          "Coefficients of T^0..T^order of the refined degree-zero DT series");
    m.def("conjecture_series", &conjecture_series, py::arg("order"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("compare_series", [](int order, long long a, long long b, long long c) {
        CompareReport report = compare_series(order, a, b, c);
        py::list rows;
        for (const auto& row : report.rows) {
            py::dict d;
            d["n"] = row.n;
            d["bbs"] = print_canonical(row.bbs);
            d["conjecture"] = print_canonical(row.conjecture);
            d["refined_equal"] = row.refined_equal;
            d["euler_bbs"] = int_to_py(row.euler_bbs);
            d["euler_conjecture"] = int_to_py(row.euler_conjecture);
            d["signed_index_sum"] = int_to_py(row.signed_index_sum);
            d["euler_consistent"] = row.euler_consistent;
            rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["status"] = report.status;
        return out;
    });
}
