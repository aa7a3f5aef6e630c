#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "equilayer/basis.hpp"
#include "equilayer/combinatorics.hpp"
#include "equilayer/errors.hpp"
#include "equilayer/oracle.hpp"
#include "equilayer/orbits.hpp"
#include "equilayer/serialize.hpp"

namespace py = pybind11;
using namespace equilayer;

namespace {

py::object py_int(const Int& value) {
    return py::module_::import("builtins").attr("int")(value.get_str());
}

py::object py_fraction(const Rat& value) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_int(value.get_num()), py_int(value.get_den()));
}

Rat rat_from_py(const py::handle& obj) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    const py::object exact = fraction(obj);
    const Int num(py::str(exact.attr("numerator")).cast<std::string>());
    const Int den(py::str(exact.attr("denominator")).cast<std::string>());
    return make_rat(num, den);
}

std::vector<Rat> rats_from_py(const py::sequence& values) {
    std::vector<Rat> out;
    out.reserve(values.size());
    for (const auto& value : values) out.push_back(rat_from_py(value));
    return out;
}

py::list entries_to_py(const SparseMatrix& matrix) {
    py::list out;
    for (const auto& entry : matrix.entries()) {
        out.append(py::make_tuple(entry.row, entry.col, py_fraction(entry.value)));
    }
    return out;
}

FactorSpec factor_from_tuple(const py::tuple& item) {
    if (item.size() != 4) throw std::invalid_argument("factor must be (n, k, l, group)");
    return FactorSpec{item[0].cast<int>(), item[1].cast<int>(), item[2].cast<int>(),
                      group_from_string(item[3].cast<std::string>())};
}

}  // namespace

PYBIND11_MODULE(_equilayer, m) {
    m.doc() = "exact equivariant-layer bases for symmetric and alternating groups";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError");

    py::class_<SetPartition>(m, "SetPartition")
        .def(py::init<std::vector<int>>(), py::arg("rgs"))
        .def_property_readonly("rgs", &SetPartition::rgs)
        .def_property_readonly("m", &SetPartition::m)
        .def_property_readonly("num_blocks", &SetPartition::num_blocks)
        .def("blocks", &SetPartition::blocks)
        .def("__repr__", &SetPartition::to_string)
        .def("__str__", &SetPartition::to_string)
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("images"))
        .def_static("identity", &Permutation::identity, py::arg("n"))
        .def_property_readonly("images", &Permutation::images)
        .def_property_readonly("degree", &Permutation::degree)
        .def("sign", &Permutation::sign)
        .def("inverse", &Permutation::inverse)
        .def("__call__", [](const Permutation& sigma, int i) { return sigma(i); })
        .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
        .def("__repr__", &Permutation::to_string)
        .def(py::self == py::self);

    py::class_<SparseMatrix>(m, "SparseMatrix")
        .def_property_readonly("rows", &SparseMatrix::rows)
        .def_property_readonly("cols", &SparseMatrix::cols)
        .def_property_readonly("nnz", &SparseMatrix::nnz)
        .def("entries", &entries_to_py)
        .def("at", [](const SparseMatrix& m_, std::int64_t r, std::int64_t c) {
            return py_fraction(m_.at(r, c));
        })
        .def(py::self == py::self)
        .def("__mul__", [](const SparseMatrix& a, const SparseMatrix& b) { return a * b; })
        .def("__add__", [](const SparseMatrix& a, const SparseMatrix& b) { return a + b; });

    py::class_<Orbit>(m, "Orbit")
        .def_readonly("partition", &Orbit::partition)
        .def_readonly("n", &Orbit::n)
        .def_readonly("l", &Orbit::l)
        .def_readonly("k", &Orbit::k)
        .def_property_readonly("sign_class",
                               [](const Orbit& orbit) { return to_string(orbit.sign_class); })
        .def_readonly("members", &Orbit::members)
        .def("__len__", [](const Orbit& orbit) { return orbit.members.size(); });

    py::class_<BasisElement>(m, "BasisElement")
        .def_property_readonly("provenance",
                               [](const BasisElement& element) {
                                   py::list out;
                                   for (const auto& p : element.provenance) {
                                       out.append(py::make_tuple(p.partition,
                                                                 std::string(to_string(p.sign_class))));
                                   }
                                   return out;
                               })
        .def_readonly("feature_row", &BasisElement::feature_row)
        .def_readonly("feature_col", &BasisElement::feature_col)
        .def_readonly("matrix", &BasisElement::matrix);

    py::class_<LayerBasis>(m, "LayerBasis")
        .def_property_readonly("factors",
                               [](const LayerBasis& basis) {
                                   py::list out;
                                   for (const auto& f : basis.factors) {
                                       out.append(py::make_tuple(f.n, f.k, f.l,
                                                                 std::string(to_string(f.group))));
                                   }
                                   return out;
                               })
        .def_readonly("d_k", &LayerBasis::d_k)
        .def_readonly("d_l", &LayerBasis::d_l)
        .def_readonly("elements", &LayerBasis::elements)
        .def_property_readonly("rows", &LayerBasis::rows)
        .def_property_readonly("cols", &LayerBasis::cols)
        .def("__len__", [](const LayerBasis& basis) { return basis.elements.size(); });

    py::class_<SubspaceReport>(m, "SubspaceReport")
        .def_property_readonly("dimension",
                               [](const SubspaceReport& report) { return py_int(report.dimension); })
        .def_readonly("basis_ok", &SubspaceReport::basis_ok)
        .def_readonly("span_ok", &SubspaceReport::span_ok)
        .def_property_readonly("failures",
                               [](const SubspaceReport& report) {
                                   py::list out;
                                   for (const auto& f : report.failures) {
                                       out.append(py::make_tuple(f.element_index, f.group_element,
                                                                 f.detail));
                                   }
                                   return out;
                               })
        .def("ok", &SubspaceReport::ok);

    m.def("enumerate_partitions", &enumerate_partitions, py::arg("m"), py::arg("max_blocks"));
    m.def("stirling2",
          [](int m_, int t) { return py_int(stirling2(m_, t)); }, py::arg("m"), py::arg("t"));
    m.def("bell_restricted",
          [](int m_, int n) { return py_int(bell_restricted(m_, n)); }, py::arg("m"),
          py::arg("n"));
    m.def("block_labelling", &block_labelling, py::arg("partition"), py::arg("l"), py::arg("k"));

    m.def("sign", [](const Permutation& sigma) { return sigma.sign(); });
    m.def("act", &act, py::arg("sigma"), py::arg("x"));
    m.def("enumerate_group",
          [](int n, const std::string& group) {
              return enumerate_group(n, group_from_string(group));
          },
          py::arg("n"), py::arg("group"));
    m.def("linearize", &linearize, py::arg("x"), py::arg("n"));
    m.def("rho", [](const Permutation& sigma, int order) { return rho(sigma, order); },
          py::arg("sigma"), py::arg("order"));

    m.def("sn_orbit", &sn_orbit, py::arg("partition"), py::arg("n"), py::arg("l"), py::arg("k"));
    m.def("splits", &splits, py::arg("partition"), py::arg("n"));
    m.def("jellyfish_sign", &jellyfish_sign, py::arg("partition"), py::arg("x"), py::arg("n"));
    m.def("split_orbit", &split_orbit, py::arg("partition"), py::arg("n"), py::arg("l"),
          py::arg("k"));

    m.def("layer_basis",
          [](int n, int k, int l, const std::string& group) {
              return layer_basis(n, k, l, group_from_string(group));
          },
          py::arg("n"), py::arg("k"), py::arg("l"), py::arg("group"));
    m.def("an_dim", [](int n, int k, int l) { return py_int(an_dim(n, k, l)); }, py::arg("n"),
          py::arg("k"), py::arg("l"));
    m.def("sn_dim", [](int n, int k, int l) { return py_int(sn_dim(n, k, l)); }, py::arg("n"),
          py::arg("k"), py::arg("l"));
    m.def("weight_matrix",
          [](const LayerBasis& basis, const py::sequence& params) {
              return weight_matrix(basis, rats_from_py(params));
          },
          py::arg("basis"), py::arg("params"));
    m.def("with_features",
          [](const LayerBasis& basis, int d_k, int d_l) {
              return with_features(basis, d_k, d_l);
          },
          py::arg("basis"), py::arg("d_k"), py::arg("d_l"));
    m.def("bias_basis",
          [](int n, int l, const std::string& group) {
              return bias_basis(n, l, group_from_string(group));
          },
          py::arg("n"), py::arg("l"), py::arg("group"));
    m.def("local_basis",
          [](const py::sequence& factors) {
              std::vector<FactorSpec> specs;
              for (const auto& item : factors) {
                  specs.push_back(factor_from_tuple(item.cast<py::tuple>()));
              }
              return local_basis(specs);
          },
          py::arg("factors"));

    m.def("equivariant_dimension_bruteforce",
          [](int n, int k, int l, const std::string& group, int d_k, int d_l,
             bool use_generators) {
              return py_int(equivariant_dimension_bruteforce(n, k, l, group_from_string(group),
                                                             d_k, d_l, use_generators));
          },
          py::arg("n"), py::arg("k"), py::arg("l"), py::arg("group"), py::arg("d_k") = 1,
          py::arg("d_l") = 1, py::arg("use_generators") = false);
    m.def("verify_equivariance",
          [](const SparseMatrix& matrix, int n, int k, int l, const std::string& group, int d_k,
             int d_l) {
              const auto result =
                  verify_equivariance(matrix, n, k, l, group_from_string(group), d_k, d_l);
              return py::make_tuple(result.ok, result.detail);
          },
          py::arg("matrix"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("group"),
          py::arg("d_k") = 1, py::arg("d_l") = 1);
    m.def("split_sign_table",
          [](const SetPartition& partition, int n, int l, int k) {
              py::dict table;
              for (const auto& [index, value] : split_sign_table(partition, n, l, k)) {
                  table[py::tuple(py::cast(index))] = value;
              }
              return table;
          },
          py::arg("partition"), py::arg("n"), py::arg("l"), py::arg("k"));
    m.def("check_basis",
          [](const LayerBasis& basis) { return check_basis(basis); }, py::arg("basis"));

    m.def("element_to_json",
          [](const LayerBasis& basis, std::size_t index) {
              return to_json(document_from_element(basis, index));
          },
          py::arg("basis"), py::arg("index"));
}
