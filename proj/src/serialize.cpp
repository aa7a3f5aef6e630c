#include "equilayer/serialize.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace equilayer {

using nlohmann::json;

namespace {

json int_to_json(const Int& value) {
    if (value.fits_slong_p()) return static_cast<long>(value.get_si());
    return value.get_str();
}

Int int_from_json(const json& value) {
    if (value.is_number_integer()) return Int(static_cast<long>(value.get<std::int64_t>()));
    if (value.is_string()) return Int(value.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

json factor_to_json(const FactorSpec& factor) {
    return json{{"n", factor.n},
                {"k", factor.k},
                {"l", factor.l},
                {"group", to_string(factor.group)}};
}

FactorSpec factor_from_json(const json& j) {
    return FactorSpec{j.at("n").get<int>(), j.at("k").get<int>(), j.at("l").get<int>(),
                      group_from_string(j.at("group").get<std::string>())};
}

json provenance_to_json(const MatrixDocument::ProvenanceInfo& provenance) {
    return json{{"rgs", provenance.rgs}, {"sign_class", provenance.sign_class}};
}

MatrixDocument::ProvenanceInfo provenance_from_json(const json& j) {
    MatrixDocument::ProvenanceInfo provenance;
    provenance.rgs = j.at("rgs").get<std::vector<int>>();
    provenance.sign_class = j.at("sign_class").get<std::string>();
    SetPartition validate(provenance.rgs);  // rejects malformed strings
    (void)validate;
    if (provenance.sign_class != "unsplit" && provenance.sign_class != "plus" &&
        provenance.sign_class != "minus") {
        throw std::invalid_argument("unknown sign class '" + provenance.sign_class + "'");
    }
    return provenance;
}

MatrixDocument::ProvenanceInfo provenance_info(const Provenance& provenance) {
    return {provenance.partition.rgs(), to_string(provenance.sign_class)};
}

}  // namespace

GroupKind group_from_string(const std::string& name) {
    if (name == "sn" || name == "symmetric") return GroupKind::symmetric;
    if (name == "an" || name == "alternating") return GroupKind::alternating;
    throw std::invalid_argument("unknown group '" + name + "' (expected sn or an)");
}

MatrixDocument document_from_element(const LayerBasis& basis, std::size_t index) {
    const BasisElement& element = basis.elements.at(index);
    MatrixDocument doc;
    doc.kind = "basis_element";
    doc.factors = basis.factors;
    doc.d_k = basis.d_k;
    doc.d_l = basis.d_l;
    doc.rows = basis.rows();
    doc.cols = basis.cols();
    for (const auto& provenance : element.provenance) {
        doc.provenance.push_back(provenance_info(provenance));
    }
    if (basis.d_k > 1 || basis.d_l > 1) {
        doc.feature = {element.feature_row, element.feature_col};
    }
    for (const auto& entry : element.matrix.entries()) {
        doc.entries.push_back({entry.row, entry.col, Int(entry.value.get_num()),
                               Int(entry.value.get_den())});
    }
    return doc;
}

MatrixDocument document_from_weight(const LayerBasis& basis, const std::vector<Rat>& params,
                                    const SparseMatrix& weight) {
    MatrixDocument doc;
    doc.kind = "weight_matrix";
    doc.factors = basis.factors;
    doc.d_k = basis.d_k;
    doc.d_l = basis.d_l;
    doc.rows = weight.rows();
    doc.cols = weight.cols();
    for (const auto& entry : weight.entries()) {
        doc.entries.push_back({entry.row, entry.col, Int(entry.value.get_num()),
                               Int(entry.value.get_den())});
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        const BasisElement& element = basis.elements[i];
        doc.parameters.push_back({static_cast<std::int64_t>(i),
                                  provenance_info(element.provenance.front()),
                                  element.feature_row, element.feature_col,
                                  Int(params[i].get_num()), Int(params[i].get_den())});
    }
    return doc;
}

SparseMatrix matrix_from_document(const MatrixDocument& doc) {
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(doc.entries.size());
    for (const auto& entry : doc.entries) {
        triplets.push_back({entry.row, entry.col, make_rat(entry.num, entry.den)});
    }
    return SparseMatrix::from_triplets(doc.rows, doc.cols, std::move(triplets));
}

namespace {

json document_skeleton(const MatrixDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["kind"] = doc.kind;
    json spec;
    spec["factors"] = json::array();
    for (const auto& factor : doc.factors) spec["factors"].push_back(factor_to_json(factor));
    if (doc.factors.size() == 1) {
        // convenience mirror of the single factor
        spec["n"] = doc.factors[0].n;
        spec["k"] = doc.factors[0].k;
        spec["l"] = doc.factors[0].l;
        spec["group"] = to_string(doc.factors[0].group);
    }
    spec["d_k"] = doc.d_k;
    spec["d_l"] = doc.d_l;
    j["spec"] = std::move(spec);
    j["shape"] = json{{"rows", doc.rows}, {"cols", doc.cols}};
    if (!doc.provenance.empty()) {
        j["provenance"] = json::array();
        for (const auto& provenance : doc.provenance) {
            j["provenance"].push_back(provenance_to_json(provenance));
        }
    }
    if (doc.feature) {
        j["feature"] = json{{"row", doc.feature->first}, {"col", doc.feature->second}};
    }
    if (!doc.parameters.empty()) {
        j["parameters"] = json::array();
        for (const auto& parameter : doc.parameters) {
            j["parameters"].push_back(json{{"index", parameter.index},
                                           {"rgs", parameter.provenance.rgs},
                                           {"sign_class", parameter.provenance.sign_class},
                                           {"feature_row", parameter.feature_row},
                                           {"feature_col", parameter.feature_col},
                                           {"value", json::array({int_to_json(parameter.num),
                                                                  int_to_json(parameter.den)})}});
        }
    }
    return j;
}

}  // namespace

std::string to_json(const MatrixDocument& doc) {
    json j = document_skeleton(doc);
    j["entries"] = json::array();
    for (const auto& entry : doc.entries) {
        j["entries"].push_back(
            json::array({entry.row, entry.col, int_to_json(entry.num), int_to_json(entry.den)}));
    }
    return j.dump();
}

std::string to_json_float(const MatrixDocument& doc) {
    json j = document_skeleton(doc);
    j["encoding"] = "float";
    j["entries"] = json::array();
    for (const auto& entry : doc.entries) {
        const double value = make_rat(entry.num, entry.den).get_d();
        j["entries"].push_back(json::array({entry.row, entry.col, value}));
    }
    return j.dump();
}

MatrixDocument document_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    try {
        MatrixDocument doc;
        doc.schema_version = j.at("schema_version").get<int>();
        if (doc.schema_version != 1) {
            throw std::invalid_argument("unsupported schema_version " +
                                        std::to_string(doc.schema_version));
        }
        if (j.contains("encoding") && j.at("encoding") == "float") {
            throw std::invalid_argument("float documents are export-only and cannot be parsed");
        }
        doc.kind = j.at("kind").get<std::string>();
        if (doc.kind != "basis_element" && doc.kind != "weight_matrix") {
            throw std::invalid_argument("unknown document kind '" + doc.kind + "'");
        }
        const json& spec = j.at("spec");
        for (const auto& factor : spec.at("factors")) {
            doc.factors.push_back(factor_from_json(factor));
        }
        if (doc.factors.empty()) throw std::invalid_argument("document has no factors");
        doc.d_k = spec.at("d_k").get<int>();
        doc.d_l = spec.at("d_l").get<int>();
        if (doc.d_k < 1 || doc.d_l < 1) throw std::invalid_argument("invalid feature dimensions");
        doc.rows = j.at("shape").at("rows").get<std::int64_t>();
        doc.cols = j.at("shape").at("cols").get<std::int64_t>();

        std::int64_t expected_rows = doc.d_l;
        std::int64_t expected_cols = doc.d_k;
        for (const auto& factor : doc.factors) {
            for (int i = 0; i < factor.l; ++i) expected_rows *= factor.n;
            for (int i = 0; i < factor.k; ++i) expected_cols *= factor.n;
        }
        if (doc.rows != expected_rows || doc.cols != expected_cols) {
            throw std::invalid_argument("shape does not match the layer specification");
        }

        if (j.contains("provenance")) {
            for (const auto& provenance : j.at("provenance")) {
                doc.provenance.push_back(provenance_from_json(provenance));
            }
        }
        if (j.contains("feature")) {
            doc.feature = {j.at("feature").at("row").get<int>(),
                           j.at("feature").at("col").get<int>()};
        }
        for (const auto& item : j.at("entries")) {
            if (!item.is_array() || item.size() != 4) {
                throw std::invalid_argument("entry is not a [row, col, num, den] quadruple");
            }
            MatrixDocument::EntryInfo entry{item[0].get<std::int64_t>(),
                                            item[1].get<std::int64_t>(), int_from_json(item[2]),
                                            int_from_json(item[3])};
            if (entry.row < 0 || entry.row >= doc.rows || entry.col < 0 ||
                entry.col >= doc.cols) {
                throw std::invalid_argument("entry coordinates out of bounds");
            }
            if (entry.den <= 0) throw std::invalid_argument("entry denominator must be positive");
            if (entry.num == 0) throw std::invalid_argument("explicit zero entry");
            Int divisor;
            mpz_gcd(divisor.get_mpz_t(), entry.num.get_mpz_t(), entry.den.get_mpz_t());
            if (divisor != 1) throw std::invalid_argument("entry fraction is not reduced");
            if (!doc.entries.empty() &&
                std::pair(doc.entries.back().row, doc.entries.back().col) >=
                    std::pair(entry.row, entry.col)) {
                throw std::invalid_argument("entries are not strictly sorted by (row, col)");
            }
            doc.entries.push_back(std::move(entry));
        }
        if (j.contains("parameters")) {
            for (const auto& item : j.at("parameters")) {
                MatrixDocument::ParameterInfo parameter;
                parameter.index = item.at("index").get<std::int64_t>();
                parameter.provenance = provenance_from_json(item);
                parameter.feature_row = item.at("feature_row").get<int>();
                parameter.feature_col = item.at("feature_col").get<int>();
                parameter.num = int_from_json(item.at("value").at(0));
                parameter.den = int_from_json(item.at("value").at(1));
                if (parameter.den <= 0) {
                    throw std::invalid_argument("parameter denominator must be positive");
                }
                doc.parameters.push_back(std::move(parameter));
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid document: ") + e.what());
    }
}

std::string to_json(const SubspaceReport& report) {
    json j;
    j["kind"] = "subspace_report";
    j["dimension"] = int_to_json(report.dimension);
    j["basis_ok"] = report.basis_ok;
    j["span_ok"] = report.span_ok;
    j["failures"] = json::array();
    for (const auto& failure : report.failures) {
        j["failures"].push_back(json{{"element_index", failure.element_index},
                                     {"group_element", failure.group_element},
                                     {"detail", failure.detail}});
    }
    return j.dump();
}

namespace {

std::string render(const Rat& value, bool as_float) {
    if (!as_float) return to_string(value);
    std::ostringstream out;
    out << value.get_d();
    return out.str();
}

}  // namespace

std::string to_coo_text(const SparseMatrix& m, bool as_float) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
    for (const auto& entry : m.entries()) {
        out << entry.row << " " << entry.col << " " << render(entry.value, as_float) << "\n";
    }
    return out.str();
}

std::string to_dense_text(const SparseMatrix& m, bool as_float) {
    std::ostringstream out;
    std::size_t next = 0;
    for (std::int64_t row = 0; row < m.rows(); ++row) {
        for (std::int64_t col = 0; col < m.cols(); ++col) {
            if (col > 0) out << " ";
            if (next < m.entries().size() && m.entries()[next].row == row &&
                m.entries()[next].col == col) {
                out << render(m.entries()[next].value, as_float);
                ++next;
            } else {
                out << "0";
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace equilayer
