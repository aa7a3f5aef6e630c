#include <doctest.h>

#include <string>

#include "equilayer/serialize.hpp"

using namespace equilayer;

TEST_SUITE("serialize") {

TEST_CASE("documents round-trip bit-exactly") {
    // Element documents across plain, featured and local bases.
    const auto plain = layer_basis(2, 2, 1, GroupKind::alternating);
    for (std::size_t i = 0; i < plain.elements.size(); ++i) {
        const auto doc = document_from_element(plain, i);
        CHECK(document_from_json(to_json(doc)) == doc);
        CHECK(matrix_from_document(doc) == plain.elements[i].matrix);
    }

    const auto featured = with_features(layer_basis(2, 1, 1, GroupKind::symmetric), 2, 3);
    const auto featured_doc = document_from_element(featured, 5);
    CHECK(document_from_json(to_json(featured_doc)) == featured_doc);
    CHECK(featured_doc.feature.has_value());

    const auto local = local_basis(
        {{2, 1, 1, GroupKind::alternating}, {3, 1, 1, GroupKind::alternating}});
    const auto local_doc = document_from_element(local, 7);
    CHECK(document_from_json(to_json(local_doc)) == local_doc);
    CHECK(local_doc.provenance.size() == 2);

    // Weight documents carry the parameter table.
    std::vector<Rat> params;
    for (long i = 1; i <= 8; ++i) params.push_back(make_rat(i, 3));
    const auto weight = weight_matrix(plain, params);
    const auto weight_doc = document_from_weight(plain, params, weight);
    CHECK(document_from_json(to_json(weight_doc)) == weight_doc);
    CHECK(weight_doc.parameters.size() == 8);
    CHECK(matrix_from_document(weight_doc) == weight);
}

TEST_CASE("parser rejects non-canonical and malformed input") {
    const auto basis = layer_basis(2, 2, 1, GroupKind::symmetric);
    const auto doc = document_from_element(basis, 0);
    const std::string good = to_json(doc);
    CHECK(document_from_json(good) == doc);

    CHECK_THROWS_AS(document_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(document_from_json("{}"), std::invalid_argument);

    auto corrupt = [&](const std::string& from, const std::string& to) {
        std::string text = good;
        const auto at = text.find(from);
        REQUIRE(at != std::string::npos);
        text.replace(at, from.size(), to);
        return text;
    };

    // unsorted / duplicate entries
    CHECK_THROWS_AS(
        document_from_json(corrupt("[[0,0,1,1],[1,3,1,1]]", "[[1,3,1,1],[0,0,1,1]]")),
        std::invalid_argument);
    // unreduced fraction
    CHECK_THROWS_AS(document_from_json(corrupt("[0,0,1,1]", "[0,0,2,4]")),
                    std::invalid_argument);
    // negative denominator
    CHECK_THROWS_AS(document_from_json(corrupt("[0,0,1,1]", "[0,0,1,-1]")),
                    std::invalid_argument);
    // out-of-bounds coordinate
    CHECK_THROWS_AS(document_from_json(corrupt("[1,3,1,1]", "[1,4,1,1]")),
                    std::invalid_argument);
    // wrong shape for the spec
    CHECK_THROWS_AS(document_from_json(corrupt("\"rows\":2", "\"rows\":3")),
                    std::invalid_argument);
    // unknown group, sign class, kind, schema version
    CHECK_THROWS_AS(document_from_json(corrupt("\"group\":\"sn\"", "\"group\":\"so\"")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        document_from_json(corrupt("\"sign_class\":\"unsplit\"", "\"sign_class\":\"half\"")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        document_from_json(corrupt("\"kind\":\"basis_element\"", "\"kind\":\"mystery\"")),
        std::invalid_argument);
    CHECK_THROWS_AS(document_from_json(corrupt("\"schema_version\":1", "\"schema_version\":9")),
                    std::invalid_argument);
    // malformed restricted-growth string
    CHECK_THROWS_AS(document_from_json(corrupt("\"rgs\":[1,1,1]", "\"rgs\":[2,1,1]")),
                    std::invalid_argument);
}

TEST_CASE("big numerators survive the string fallback") {
    MatrixDocument doc;
    doc.kind = "weight_matrix";
    doc.factors = {{2, 0, 1, GroupKind::symmetric}};
    doc.rows = 2;
    doc.cols = 1;
    doc.entries.push_back({0, 0, Int("123456789012345678901234567890"), Int(1)});
    doc.entries.push_back({1, 0, Int(1), Int("98765432109876543210")});
    const auto round_tripped = document_from_json(to_json(doc));
    CHECK(round_tripped == doc);
}

TEST_CASE("float export is one-way") {
    const auto basis = layer_basis(2, 2, 1, GroupKind::symmetric);
    std::vector<Rat> params{make_rat(1, 2), Rat(0), Rat(0), Rat(0)};
    const auto weight = weight_matrix(basis, params);
    const auto doc = document_from_weight(basis, params, weight);
    const std::string text = to_json_float(doc);
    CHECK(text.find("\"encoding\":\"float\"") != std::string::npos);
    CHECK(text.find("0.5") != std::string::npos);
    CHECK_THROWS_AS(document_from_json(text), std::invalid_argument);
}

TEST_CASE("text formats") {
    const auto basis = layer_basis(2, 2, 1, GroupKind::symmetric);
    const auto& matrix = basis.elements[1].matrix;
    CHECK(to_coo_text(matrix) == "2 4 2\n0 1 1\n1 2 1\n");
    CHECK(to_dense_text(matrix) == "0 1 0 0\n0 0 1 0\n");
    const auto fractional = SparseMatrix::from_triplets(1, 2, {{0, 1, make_rat(-3, 7)}});
    CHECK(to_coo_text(fractional) == "1 2 1\n0 1 -3/7\n");
}

TEST_CASE("group names") {
    CHECK(group_from_string("sn") == GroupKind::symmetric);
    CHECK(group_from_string("alternating") == GroupKind::alternating);
    CHECK_THROWS_AS(group_from_string("o2"), std::invalid_argument);
}

}  // TEST_SUITE
