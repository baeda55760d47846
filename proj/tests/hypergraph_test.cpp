#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "hyperinc/hypergraph.hpp"
#include "hyperinc/labels.hpp"
#include "hyperinc/matrix.hpp"

using namespace hyperinc;

namespace {

LabelList star_names(const Hypergraph& h, const std::string& v) {
    LabelList out;
    for (auto e : star(h, v).edges) out.push_back(h.edge_name(e));
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("natural label order") {
    CHECK(natural_compare("2", "10") < 0);
    CHECK(natural_compare("e9", "e10") < 0);
    CHECK(natural_compare("a", "a") == 0);
    CHECK(natural_compare("1+2", "10") < 0);
    CHECK(canonical_labels({"10", "2", "2", "b", "a"}) == LabelList{"2", "10", "a", "b"});
}

TEST_CASE("build rejects malformed input") {
    CHECK(code_of([] { Hypergraph::build({}, {}); }) == ErrorCode::EmptyVertexSet);
    CHECK(code_of([] { Hypergraph::build({"1", "2"}, {{"1"}, {"1"}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { Hypergraph::build({"1"}, {{}}); }) == ErrorCode::EmptyEdge);
    CHECK(code_of([] { Hypergraph::build({"1"}, {{"2"}}); }) == ErrorCode::UnknownVertexInEdge);
    CHECK(code_of([] { Hypergraph::build({"1", "1"}, {}); }) == ErrorCode::DuplicateVertex);
    CHECK(code_of([] { Hypergraph::build({"1", "2"}, {{"1"}, {"2"}}, {"a", "a"}); }) == ErrorCode::DuplicateEdgeName);
}

TEST_CASE("minimal and example hypergraphs") {
    const auto one = Hypergraph::build({"v"}, {{"v"}});
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 1);

    const auto h = fixtures::unit_example();
    CHECK(h.vertex_count() == 11);
    CHECK(h.edge_count() == 5);
    CHECK(h.vertices().front() == "1");
    CHECK(h.vertices().back() == "11");
    CHECK(star_names(h, "10") == LabelList{"e1", "e3", "e5"});
    CHECK(star_names(h, "11") == LabelList{"e1", "e5"});
    CHECK(code_of([&] { star(h, "12"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("uniform cycles") {
    const auto c = uniform_cycle(8, 4);
    CHECK(c.edge_count() == 8);
    CHECK(c.edge_labels(0) == LabelList{"0", "1", "2", "3"});
    CHECK(c.edge_labels(7) == LabelList{"0", "1", "2", "7"});

    // windows {i..i+3} that contain vertex 0
    LabelList expected;
    for (int i = 0; i < 8; ++i) {
        bool covers = false;
        for (int s = 0; s < 4; ++s) covers |= (i + s) % 8 == 0;
        if (covers) expected.push_back("e" + std::to_string(i));
    }
    CHECK(star_names(c, "0") == canonical_labels(expected));

    CHECK(uniform_cycle(4, 4).edge_count() == 1);
    CHECK(uniform_cycle(2, 2).edge_count() == 1);
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto g = uniform_cycle(n, 2);
        CHECK(g.edge_count() == n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(g.edge(i).size() == 2);
            CHECK(g.incident(i, i));
            CHECK(g.incident(i, (i + 1) % n));
        }
    }
    CHECK(uniform_cycle(6, 4).edge_count() == 6);
    CHECK(code_of([] { uniform_cycle(3, 4); }) == ErrorCode::CycleTooShort);
    CHECK(code_of([] { uniform_cycle(3, 1); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("induced subhypergraphs") {
    const auto h = fixtures::induced_cycle_example();
    const auto sub = induced_subhypergraph(h, fixtures::range_labels(1, 6));
    CHECK(are_isomorphic(sub.hypergraph, uniform_cycle(6, 4)).has_value());

    const auto seven = fixtures::seven_vertex_example();
    const auto c63 = induced_subhypergraph(seven, fixtures::range_labels(1, 6));
    CHECK(c63.hypergraph.edge_count() == 6);
    CHECK(are_isomorphic(c63.hypergraph, uniform_cycle(6, 3)).has_value());
    CHECK_FALSE(are_isomorphic(c63.hypergraph, uniform_cycle(6, 4)).has_value());

    const auto whole = induced_subhypergraph(h, h.vertices());
    CHECK(whole.hypergraph == h);

    // {1,2} meets e1, e4 ({1}), e5, e6 in {1,2} or {1}: merged as sets
    const auto small = induced_subhypergraph(h, {"1", "2"});
    CHECK(small.hypergraph.edge_count() == 3);
    CHECK_FALSE(small.edge_map[2].has_value());
    CHECK(code_of([&] { induced_subhypergraph(h, {}); }) == ErrorCode::EmptySubset);
}

TEST_CASE("units against pairwise star comparison") {
    const auto h = fixtures::unit_example();
    const auto units = compute_units(h);
    std::vector<LabelList> got;
    for (std::size_t u = 0; u < units.units.size(); ++u) got.push_back(units.member_labels(h, u));
    CHECK(got == fixtures::brute_force_units(h));
    CHECK(got == std::vector<LabelList>{{"1", "2"}, {"3", "4"}, {"5", "6", "7"}, {"8", "9"}, {"10"}, {"11"}});

    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const auto r = fixtures::random_instance(rng, 9, 7);
        const auto p = compute_units(r);
        std::vector<LabelList> labels;
        for (std::size_t u = 0; u < p.units.size(); ++u) labels.push_back(p.member_labels(r, u));
        CHECK(labels == fixtures::brute_force_units(r));
        // a vertex separating two edges carries its whole unit with it
        CHECK(unit_contraction(r).hypergraph.edge_count() == r.edge_count());
    }
}

TEST_CASE("unit contraction") {
    const auto h = fixtures::unit_example();
    const auto c = unit_contraction(h);
    CHECK(c.hypergraph.vertex_count() == 6);
    CHECK(c.hypergraph.edge_count() == 5);
    CHECK(c.hypergraph.find_vertex("5+6+7").has_value());
    const auto sub = induced_subhypergraph(h, {"1", "3", "5", "8", "10", "11"});
    CHECK(are_isomorphic(sub.hypergraph, c.hypergraph).has_value());

    for (std::size_t n = 5; n <= 9; ++n)
        for (std::size_t k = 2; k < n; ++k) {
            const auto cyc = uniform_cycle(n, k);
            CHECK(compute_units(cyc).units.size() == n);
            CHECK(are_isomorphic(unit_contraction(cyc).hypergraph, cyc).has_value());
        }
}

TEST_CASE("dual hypergraph") {
    const auto k = fixtures::k4();
    const auto d = dual(k);
    CHECK(d.hypergraph.vertex_count() == 6);
    CHECK(d.hypergraph.edge_count() == 4);
    for (std::size_t v = 0; v < k.vertex_count(); ++v) {
        LabelList expected;
        for (std::size_t e = 0; e < k.edge_count(); ++e)
            if (k.incident(e, v)) expected.push_back(k.edge_name(e));
        CHECK(d.hypergraph.edge_labels(d.vertex_to_edge[v]) == canonical_labels(expected));
    }

    const auto single = dual(Hypergraph::build({"a", "b"}, {{"a", "b"}}));
    CHECK(single.hypergraph.vertex_count() == 1);
    CHECK(single.hypergraph.edge_count() == 1);

    const auto h = fixtures::unit_example();
    const auto hd = dual(h);
    CHECK(hd.hypergraph.vertex_count() == 5);
    CHECK(hd.hypergraph.edge_count() == 6);
    // B of the dual is the transpose of B_H under the index maps.
    const auto b = edge_vertex_incidence(h);
    const auto bd = edge_vertex_incidence(hd.hypergraph);
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (std::size_t v = 0; v < h.vertex_count(); ++v) CHECK(b(e, v) == bd(hd.vertex_to_edge[v], hd.edge_to_vertex[e]));

    CHECK(code_of([] { dual(Hypergraph::build({"1", "2"}, {{"1"}})); }) == ErrorCode::IsolatedVertex);
}

TEST_CASE("isomorphism search") {
    const auto h = fixtures::unit_example();
    const auto f = are_isomorphic(h, h);
    REQUIRE(f.has_value());
    CHECK_FALSE(are_isomorphic(uniform_cycle(6, 3), uniform_cycle(6, 4)).has_value());

    // relabelled copy
    const auto c = uniform_cycle(7, 3);
    std::vector<LabelList> edges;
    for (std::size_t e = 0; e < c.edge_count(); ++e) {
        LabelList l;
        for (auto v : c.edge(e)) l.push_back("v" + std::to_string((v * 3) % 7));
        edges.push_back(l);
    }
    LabelList vs;
    for (int i = 0; i < 7; ++i) vs.push_back("v" + std::to_string(i));
    const auto copy = Hypergraph::build(vs, edges);
    const auto g = are_isomorphic(c, copy);
    REQUIRE(g.has_value());
    for (std::size_t e = 0; e < c.edge_count(); ++e) {
        IndexList image;
        for (auto v : c.edge(e)) image.push_back((*g)[v]);
        std::sort(image.begin(), image.end());
        CHECK(std::find(copy.edges().begin(), copy.edges().end(), image) != copy.edges().end());
    }

    CHECK(code_of([] { are_isomorphic(uniform_cycle(13, 2), uniform_cycle(13, 2), 12); }) == ErrorCode::InstanceTooLarge);
}

TEST_CASE("isomorphism bound from the environment") {
    ::setenv("HYPERINC_ISO_BOUND", "20", 1);
    CHECK(isomorphism_bound_from_env() == 20);
    CHECK(are_isomorphic(uniform_cycle(13, 2), uniform_cycle(13, 2)).has_value());
    ::setenv("HYPERINC_ISO_BOUND", "junk", 1);
    CHECK(isomorphism_bound_from_env() == kDefaultIsomorphismBound);
    ::unsetenv("HYPERINC_ISO_BOUND");
}

TEST_CASE("extend by zero") {
    const auto h = fixtures::induced_cycle_example();
    VertexVector y;
    for (int i = 1; i <= 6; ++i) y.set(std::to_string(i), Rational(i % 2 == 0 ? 1 : -1));
    const auto ext = extend_vector(h, fixtures::range_labels(1, 6), y);
    CHECK(ext["7"] == 0);
    CHECK(ext["8"] == 0);
    CHECK(ext["2"] == 1);
    CHECK(extend_vector(h, {"1"}, VertexVector{}).is_zero());
    VertexVector outside;
    outside.set("7", Rational(1));
    CHECK(code_of([&] { extend_vector(h, {"1", "2"}, outside); }) == ErrorCode::SupportOutsideSubset);
}
