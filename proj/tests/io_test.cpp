#include <doctest.h>

#include "fixtures.hpp"
#include "hyperinc/io.hpp"

using namespace hyperinc;

TEST_CASE("text format") {
    const auto h = parse_hypergraph_text(
        "# two edges\n"
        "vertices: 1 2 3 12\n"
        "\n"
        "a: 1 2   # trailing comment\n"
        "b:3 2\r\n");
    CHECK(h.vertices() == LabelList{"1", "2", "3", "12"});
    CHECK(h.edge_names() == LabelList{"a", "b"});
    CHECK(h.edge_labels(1) == LabelList{"2", "3"});
    CHECK(star(h, "12").edges.empty());

    const auto inferred = parse_hypergraph_text("x: p q\ny: q r\n");
    CHECK(inferred.vertices() == LabelList{"p", "q", "r"});
}

TEST_CASE("text parse errors carry positions") {
    auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_hypergraph_text(text);
        } catch (const ParseFailure& e) {
            CHECK(e.code() == ErrorCode::ParseError);
            return {e.line(), e.column()};
        }
        FAIL("expected ParseFailure");
        return {0, 0};
    };
    CHECK(position("e1: 1 2\n  oops 3\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(position("e1 e2: 1\n") == std::pair<std::size_t, std::size_t>{1, 4});
    CHECK(position("e1: 1 2\ne2:\n") == std::pair<std::size_t, std::size_t>{2, 4});
    CHECK(position("e1: 1:2\n") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(position("vertices: 1\nvertices: 2\n").first == 2);
    CHECK_THROWS_AS(parse_hypergraph_text("e1: 1\ne2: 1\n"), Error);
    CHECK_THROWS_AS(parse_hypergraph_text("e1: 1\ne1: 2\n"), Error);
    CHECK_THROWS_AS(parse_hypergraph_text("# nothing\n"), Error);
}

TEST_CASE("JSON format") {
    const auto h = parse_hypergraph(R"({"vertices": [1, 2, "x"], "edges": {"e1": [1, "x"], "big": [2]}})");
    CHECK(h.vertices() == LabelList{"1", "2", "x"});
    CHECK(h.edge_names() == LabelList{"e1", "big"});
    CHECK(parse_hypergraph(R"({"edges": [[1, 2], [2, 3]]})").edge_names() == LabelList{"e1", "e2"});
    try {
        parse_hypergraph("{\n  \"edges\": [1,,]\n}");
        FAIL("expected ParseFailure");
    } catch (const ParseFailure& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_hypergraph(R"({"vertices": [1]})"), Error);
    CHECK_THROWS_AS(parse_hypergraph(R"({"edges": {"e1": [1.5]}})"), Error);
    CHECK_THROWS_AS(parse_hypergraph(R"({"vertices": [1], "edges": {"e1": [2]}})"), Error);
}

TEST_CASE("round trips on canonical form") {
    std::mt19937_64 rng(12);
    std::vector<Hypergraph> corpus{fixtures::unit_example(), fixtures::k4(), uniform_cycle(8, 4),
                                   Hypergraph::build({"a", "b", "lonely"}, {{"a", "b"}})};
    for (int i = 0; i < 50; ++i) corpus.push_back(fixtures::random_instance(rng, 10, 8));
    for (const auto& h : corpus) {
        const auto text = to_text(h);
        const auto back = parse_hypergraph(text);
        CHECK(back == h);
        CHECK(to_text(back) == text);
        const auto json = to_json(h).dump();
        CHECK(parse_hypergraph(json) == h);
        CHECK(to_json(parse_hypergraph(json)).dump() == json);
    }
}

TEST_CASE("weight files") {
    const auto j = parse_weights(R"({"e1": "1/2", "e2": 3, "e3": 0.25})");
    CHECK(j.at("e1") == Rational(1, 2));
    CHECK(j.at("e2") == 3);
    CHECK(j.at("e3") == Rational(1, 4));
    const auto t = parse_weights("# weights\ne1: 2/4\ne2 7\n");
    CHECK(t.at("e1") == Rational(1, 2));
    CHECK(t.at("e2") == 7);
    auto code = [](const std::string& text) {
        try {
            parse_weights(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code("e1: 0\n") == ErrorCode::BadWeightFile);
    CHECK(code("e1: -1/2\n") == ErrorCode::BadWeightFile);
    CHECK(code("e1: pi\n") == ErrorCode::BadWeightFile);
    CHECK(code(R"({"e1": true})") == ErrorCode::BadWeightFile);
    CHECK(code("e1: 1\ne1: 2\n") == ErrorCode::BadWeightFile);
}

TEST_CASE("certificate JSON") {
    const auto h = fixtures::equal_partition_example();
    const auto c = certificate_from_json(h, Json::parse(R"({"kind": "EqualEdgePartition", "sets": {"U": ["5", "1"], "V": [2, 3, 4]}})"));
    CHECK(c.sets == std::vector<LabelList>{{"1", "5"}, {"2", "3", "4"}});
    const auto j = to_json(h, c, verify_certificate(h, c));
    CHECK(j["valid"] == true);
    CHECK(j["vector"]["2"] == "-1");
    const auto again = certificate_from_json(h, j);
    CHECK(again.sets == c.sets);
    CHECK(std::get<VertexVector>(again.induced_vector) == std::get<VertexVector>(c.induced_vector));

    const auto k = fixtures::k4();
    const auto r = certificate_from_json(
        k, Json::parse(R"({"kind": "RatioVertexPartition", "sets": [["e1", "e2"], ["e3", "e4", "e5", "e6"]], "ratio": "1/2"})"));
    CHECK(verify_certificate(k, r).valid);

    const auto cyc = uniform_cycle(8, 4);
    const auto w = certificate_from_json(cyc, Json::parse(R"({"kind": "RootOfUnityCycle", "order": 4, "power": 1})"));
    const auto wj = to_json(cyc, w, verify_certificate(cyc, w));
    CHECK(wj["valid"] == true);
    CHECK(wj["vector"]["1"] == "z");

    CHECK_THROWS_AS(certificate_from_json(h, Json::parse(R"({"kind": "Nope", "sets": []})")), Error);
    CHECK_THROWS_AS(certificate_from_json(h, Json::parse(R"({"kind": "RatioEdgePartition", "sets": [["1"], ["2"]]})")), Error);
    CHECK_THROWS_AS(certificate_from_json(h, Json::parse(R"({"kind": "EqualEdgePartition", "sets": [["1"]]})")), Error);
}

TEST_CASE("report JSON uses exact fractions") {
    const auto h = fixtures::unit_example();
    const auto pairs = predict_unit_eigenpairs(h, EdgeWeighting::banerjee(h));
    const auto j = to_json(pairs[2]);
    CHECK(j["eigenvalue"] == "-5/12");
    CHECK(j["class"] == Json::array({"5", "6", "7"}));
    CHECK(j["verified"] == true);
    const auto m = to_json(weighted_adjacency(h, EdgeWeighting::banerjee(h)).matrix);
    CHECK(m["entries"][0][1] == "1/2");
    CHECK(to_json(nullity_decomposition(h))["decomposition_holds"] == true);
}
