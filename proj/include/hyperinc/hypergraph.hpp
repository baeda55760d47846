#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperinc/error.hpp"
#include "hyperinc/labeled_vector.hpp"
#include "hyperinc/labels.hpp"

namespace hyperinc {

using IndexList = std::vector<std::size_t>;

/// Immutable hypergraph with a reproducible indexing: vertices sorted in natural
/// label order, edges kept in input order, each edge stored as sorted vertex
/// indices. Edge collections have set semantics (no repeated edges).
class Hypergraph {
   public:
    /// Builds and validates. Edge names default to "e1".."em".
    /// Throws EmptyVertexSet, DuplicateVertex, EmptyEdge, UnknownVertexInEdge,
    /// DuplicateEdge or DuplicateEdgeName.
    static Hypergraph build(LabelList vertices, const std::vector<LabelList>& edges, LabelList edge_names = {});

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const LabelList& vertices() const noexcept { return vertices_; }
    const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
    const LabelList& edge_names() const noexcept { return edge_names_; }
    const std::string& edge_name(std::size_t i) const { return edge_names_.at(i); }
    const std::vector<IndexList>& edges() const noexcept { return edges_; }
    const IndexList& edge(std::size_t i) const { return edges_.at(i); }
    LabelList edge_labels(std::size_t i) const;

    bool incident(std::size_t edge, std::size_t vertex) const;

    std::optional<std::size_t> find_vertex(const std::string& label) const;
    std::optional<std::size_t> find_edge(const std::string& name) const;
    /// Throw UnknownVertex / UnknownEdge.
    std::size_t vertex_index(const std::string& label) const;
    std::size_t edge_index(const std::string& name) const;

    /// Resolves labels to sorted, de-duplicated indices.
    IndexList vertex_indices(const LabelList& labels) const;
    IndexList edge_indices(const LabelList& names) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.edge_names_ == b.edge_names_;
    }

   private:
    LabelList vertices_;
    std::vector<IndexList> edges_;
    LabelList edge_names_;
    std::map<std::string, std::size_t, NaturalLess> vertex_lookup_;
    std::map<std::string, std::size_t, NaturalLess> edge_lookup_;
};

inline Hypergraph build_hypergraph(LabelList vertices, const std::vector<LabelList>& edges, LabelList edge_names = {}) {
    return Hypergraph::build(std::move(vertices), edges, std::move(edge_names));
}

/// C_n^k: vertices "0".."n-1"; edge "e<i>" is the window {i, ..., i+k-1} mod n.
/// When k == n all windows coincide and C_n^n has the single edge e0 = V.
/// Throws InvalidParameters for k < 2 and CycleTooShort for n < k.
Hypergraph uniform_cycle(std::size_t n, std::size_t k);

struct Star {
    std::string vertex;
    IndexList edges;
};

Star star(const Hypergraph& h, const std::string& vertex);
IndexList star_of(const Hypergraph& h, std::size_t vertex);

struct InducedSubhypergraph {
    Hypergraph hypergraph;
    /// Original edge index -> induced edge index; empty when e ∩ U = ∅.
    std::vector<std::optional<std::size_t>> edge_map;
};

/// Throws EmptySubset or UnknownVertex.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const LabelList& subset);

struct Unit {
    IndexList members;
    IndexList generator;
};

/// Units ordered by their smallest member.
struct UnitPartition {
    std::vector<Unit> units;
    IndexList vertex_to_unit;

    LabelList member_labels(const Hypergraph& h, std::size_t unit) const;
};

UnitPartition compute_units(const Hypergraph& h);

struct Contraction {
    Hypergraph hypergraph;
    UnitPartition units;
    /// Original vertex index -> contracted vertex index.
    IndexList vertex_map;
    /// Original edge index -> contracted edge index (merged edges share a target).
    IndexList edge_map;
};

/// Contracted vertices are labelled by their members joined with '+'.
Contraction unit_contraction(const Hypergraph& h);

struct Dual {
    Hypergraph hypergraph;
    /// Vertex v of H -> the edge E_v(H) of H*.
    IndexList vertex_to_edge;
    /// Edge e of H -> the vertex e of H*.
    IndexList edge_to_vertex;
};

/// Throws IsolatedVertex when some star is empty.
Dual dual(const Hypergraph& h);

inline constexpr std::size_t kDefaultIsomorphismBound = 12;

/// kDefaultIsomorphismBound unless HYPERINC_ISO_BOUND holds a positive integer.
std::size_t isomorphism_bound_from_env();

/// Backtracking search for f: V(h1) -> V(h2) mapping E(h1) onto E(h2).
/// result[i] is the image of vertex i. Throws InstanceTooLarge when either
/// side exceeds the vertex bound.
std::optional<IndexList> are_isomorphic(const Hypergraph& h1, const Hypergraph& h2,
                                        std::size_t vertex_bound = isomorphism_bound_from_env());

/// y' agrees with y on the subset and vanishes elsewhere. Throws
/// SupportOutsideSubset when y is non-zero outside the subset, UnknownVertex
/// when the subset leaves V(h).
template <class Scalar>
LabeledVector<Scalar> extend_vector(const Hypergraph& h, const LabelList& subset, const LabeledVector<Scalar>& y) {
    const IndexList idx = h.vertex_indices(subset);
    std::vector<bool> inside(h.vertex_count(), false);
    for (auto i : idx) inside[i] = true;
    LabeledVector<Scalar> out(y.zero());
    for (const auto& [label, value] : y.entries()) {
        const auto v = h.find_vertex(label);
        if (!v || !inside[*v]) throw Error(ErrorCode::SupportOutsideSubset, "vector is non-zero at '" + label + "'");
        out.set(h.vertex(*v), value);
    }
    return out;
}

}  // namespace hyperinc
