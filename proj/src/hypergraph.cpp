#include "hyperinc/hypergraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace hyperinc {

Hypergraph Hypergraph::build(LabelList vertices, const std::vector<LabelList>& edges, LabelList edge_names) {
    if (vertices.empty()) throw Error(ErrorCode::EmptyVertexSet, "a hypergraph needs at least one vertex");
    Hypergraph h;
    std::sort(vertices.begin(), vertices.end(), NaturalLess{});
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i] == vertices[i + 1]) throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertices[i] + "' listed twice");
    }
    h.vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < h.vertices_.size(); ++i) h.vertex_lookup_.emplace(h.vertices_[i], i);

    if (!edge_names.empty() && edge_names.size() != edges.size())
        throw Error(ErrorCode::InvalidParameters, "edge name count does not match edge count");
    if (edge_names.empty()) {
        for (std::size_t i = 0; i < edges.size(); ++i) edge_names.push_back("e" + std::to_string(i + 1));
    }

    std::map<IndexList, std::size_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string& name = edge_names[i];
        if (name.empty()) throw Error(ErrorCode::InvalidParameters, "edge " + std::to_string(i + 1) + " has an empty name");
        if (!h.edge_lookup_.emplace(name, i).second)
            throw Error(ErrorCode::DuplicateEdgeName, "edge name '" + name + "' used twice");
        if (edges[i].empty()) throw Error(ErrorCode::EmptyEdge, "edge '" + name + "' is empty");
        IndexList members;
        for (const auto& label : edges[i]) {
            auto it = h.vertex_lookup_.find(label);
            if (it == h.vertex_lookup_.end())
                throw Error(ErrorCode::UnknownVertexInEdge, "edge '" + name + "' mentions unknown vertex '" + label + "'");
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (auto [it, fresh] = seen.emplace(members, i); !fresh)
            throw Error(ErrorCode::DuplicateEdge,
                        "edges '" + edge_names[it->second] + "' and '" + name + "' are the same vertex set");
        h.edges_.push_back(std::move(members));
    }
    h.edge_names_ = std::move(edge_names);
    return h;
}

LabelList Hypergraph::edge_labels(std::size_t i) const {
    LabelList out;
    for (auto v : edges_.at(i)) out.push_back(vertices_[v]);
    return out;
}

bool Hypergraph::incident(std::size_t edge, std::size_t vertex) const {
    const auto& e = edges_.at(edge);
    return std::binary_search(e.begin(), e.end(), vertex);
}

std::optional<std::size_t> Hypergraph::find_vertex(const std::string& label) const {
    auto it = vertex_lookup_.find(label);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Hypergraph::find_edge(const std::string& name) const {
    auto it = edge_lookup_.find(name);
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t Hypergraph::vertex_index(const std::string& label) const {
    if (auto v = find_vertex(label)) return *v;
    throw Error(ErrorCode::UnknownVertex, "no vertex '" + label + "'");
}

std::size_t Hypergraph::edge_index(const std::string& name) const {
    if (auto e = find_edge(name)) return *e;
    throw Error(ErrorCode::UnknownEdge, "no edge '" + name + "'");
}

IndexList Hypergraph::vertex_indices(const LabelList& labels) const {
    IndexList out;
    for (const auto& l : labels) out.push_back(vertex_index(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IndexList Hypergraph::edge_indices(const LabelList& names) const {
    IndexList out;
    for (const auto& n : names) out.push_back(edge_index(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Hypergraph uniform_cycle(std::size_t n, std::size_t k) {
    if (k < 2) throw Error(ErrorCode::InvalidParameters, "uniform cycles need k >= 2");
    if (n < k) throw Error(ErrorCode::CycleTooShort, "C_n^k needs n >= k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    LabelList vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
    std::vector<LabelList> edges;
    LabelList names;
    // For k == n every window is V itself; E is a set, so it appears once.
    const std::size_t edge_count = k == n ? 1 : n;
    for (std::size_t i = 0; i < edge_count; ++i) {
        LabelList e;
        for (std::size_t s = 0; s < k; ++s) e.push_back(std::to_string((i + s) % n));
        edges.push_back(std::move(e));
        names.push_back("e" + std::to_string(i));
    }
    return Hypergraph::build(std::move(vertices), edges, std::move(names));
}

IndexList star_of(const Hypergraph& h, std::size_t vertex) {
    IndexList out;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (h.incident(e, vertex)) out.push_back(e);
    }
    return out;
}

Star star(const Hypergraph& h, const std::string& vertex) {
    return Star{vertex, star_of(h, h.vertex_index(vertex))};
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const LabelList& subset) {
    if (subset.empty()) throw Error(ErrorCode::EmptySubset, "cannot induce on an empty vertex set");
    const IndexList keep = h.vertex_indices(subset);
    std::vector<bool> inside(h.vertex_count(), false);
    for (auto v : keep) inside[v] = true;

    LabelList vertices;
    for (auto v : keep) vertices.push_back(h.vertex(v));

    InducedSubhypergraph out{Hypergraph{}, std::vector<std::optional<std::size_t>>(h.edge_count())};
    std::vector<LabelList> edges;
    LabelList names;
    std::map<IndexList, std::size_t> seen;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        IndexList cut;
        for (auto v : h.edge(e)) {
            if (inside[v]) cut.push_back(v);
        }
        if (cut.empty()) continue;
        auto [it, fresh] = seen.emplace(cut, edges.size());
        if (fresh) {
            LabelList labels;
            for (auto v : cut) labels.push_back(h.vertex(v));
            edges.push_back(std::move(labels));
            names.push_back(h.edge_name(e));
        }
        out.edge_map[e] = it->second;
    }
    out.hypergraph = Hypergraph::build(std::move(vertices), edges, std::move(names));
    return out;
}

LabelList UnitPartition::member_labels(const Hypergraph& h, std::size_t unit) const {
    LabelList out;
    for (auto v : units.at(unit).members) out.push_back(h.vertex(v));
    return out;
}

UnitPartition compute_units(const Hypergraph& h) {
    UnitPartition p;
    p.vertex_to_unit.resize(h.vertex_count());
    std::map<IndexList, std::size_t> by_star;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        IndexList s = star_of(h, v);
        auto [it, fresh] = by_star.emplace(s, p.units.size());
        if (fresh) p.units.push_back(Unit{{}, std::move(s)});
        p.units[it->second].members.push_back(v);
        p.vertex_to_unit[v] = it->second;
    }
    return p;
}

Contraction unit_contraction(const Hypergraph& h) {
    UnitPartition units = compute_units(h);
    LabelList unit_labels;
    for (std::size_t u = 0; u < units.units.size(); ++u) unit_labels.push_back(join_labels(units.member_labels(h, u), "+"));

    std::vector<LabelList> edges;
    LabelList names;
    IndexList edge_map(h.edge_count());
    std::map<IndexList, std::size_t> seen;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        IndexList image;
        for (auto v : h.edge(e)) image.push_back(units.vertex_to_unit[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        auto [it, fresh] = seen.emplace(image, edges.size());
        if (fresh) {
            LabelList labels;
            for (auto u : image) labels.push_back(unit_labels[u]);
            edges.push_back(std::move(labels));
            names.push_back(h.edge_name(e));
        }
        edge_map[e] = it->second;
    }
    Hypergraph contracted = Hypergraph::build(unit_labels, edges, std::move(names));
    IndexList vertex_map(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        vertex_map[v] = contracted.vertex_index(unit_labels[units.vertex_to_unit[v]]);
    return Contraction{std::move(contracted), std::move(units), std::move(vertex_map), std::move(edge_map)};
}

Dual dual(const Hypergraph& h) {
    std::vector<LabelList> edges;
    LabelList names;
    IndexList vertex_to_edge(h.vertex_count());
    std::map<IndexList, std::size_t> seen;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        IndexList s = star_of(h, v);
        if (s.empty()) throw Error(ErrorCode::IsolatedVertex, "vertex '" + h.vertex(v) + "' lies in no edge");
        auto [it, fresh] = seen.emplace(s, edges.size());
        if (fresh) {
            LabelList labels;
            for (auto e : s) labels.push_back(h.edge_name(e));
            edges.push_back(std::move(labels));
            names.push_back(h.vertex(v));
        }
        vertex_to_edge[v] = it->second;
    }
    Hypergraph d = Hypergraph::build(h.edge_names(), edges, std::move(names));
    IndexList edge_to_vertex(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) edge_to_vertex[e] = d.vertex_index(h.edge_name(e));
    return Dual{std::move(d), std::move(vertex_to_edge), std::move(edge_to_vertex)};
}

std::size_t isomorphism_bound_from_env() {
    if (const char* raw = std::getenv("HYPERINC_ISO_BOUND")) {
        char* end = nullptr;
        const long long value = std::strtoll(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    return kDefaultIsomorphismBound;
}

namespace {

struct IsoProfile {
    std::vector<IndexList> stars;
    std::vector<std::vector<std::size_t>> size_profile;  // sorted sizes of the edges at each vertex
    std::vector<std::vector<std::size_t>> shared;        // |E_u ∩ E_v|
};

IsoProfile profile(const Hypergraph& h) {
    IsoProfile p;
    const std::size_t n = h.vertex_count();
    p.stars.resize(n);
    p.size_profile.resize(n);
    p.shared.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& members = h.edge(e);
        for (auto u : members) {
            p.stars[u].push_back(e);
            p.size_profile[u].push_back(members.size());
            for (auto v : members) ++p.shared[u][v];
        }
    }
    for (auto& s : p.size_profile) std::sort(s.begin(), s.end());
    return p;
}

class IsoSearch {
   public:
    IsoSearch(const Hypergraph& a, const Hypergraph& b) : a_(a), b_(b), pa_(profile(a)), pb_(profile(b)) {
        for (const auto& e : b.edges()) b_edges_.insert(e);
        order_vertices();
        completes_at_.resize(a.vertex_count());
        for (std::size_t e = 0; e < a.edge_count(); ++e) {
            std::size_t last = 0;
            for (auto v : a.edge(e)) last = std::max(last, position_[v]);
            completes_at_[last].push_back(e);
        }
        image_.assign(a.vertex_count(), kUnset);
        used_.assign(b.vertex_count(), false);
    }

    std::optional<IndexList> run() {
        if (extend(0)) return image_;
        return std::nullopt;
    }

   private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // Greedy order: next vertex is the one sharing most edges with those already placed.
    void order_vertices() {
        const std::size_t n = a_.vertex_count();
        position_.assign(n, 0);
        std::vector<bool> placed(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = kUnset;
            std::size_t best_links = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                std::size_t links = 0;
                for (auto u : order_) links += pa_.shared[u][v];
                if (best == kUnset || links > best_links ||
                    (links == best_links && pa_.stars[v].size() > pa_.stars[best].size())) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            position_[best] = step;
            order_.push_back(best);
        }
    }

    bool consistent(std::size_t v, std::size_t w) const {
        if (pa_.size_profile[v] != pb_.size_profile[w]) return false;
        for (std::size_t u = 0; u < a_.vertex_count(); ++u) {
            if (image_[u] == kUnset) continue;
            if (pa_.shared[u][v] != pb_.shared[image_[u]][w]) return false;
        }
        return true;
    }

    bool edges_closed(std::size_t step) const {
        for (auto e : completes_at_[step]) {
            IndexList img;
            for (auto v : a_.edge(e)) img.push_back(image_[v]);
            std::sort(img.begin(), img.end());
            if (!b_edges_.count(img)) return false;
        }
        return true;
    }

    bool extend(std::size_t step) {
        if (step == order_.size()) return true;
        const std::size_t v = order_[step];
        for (std::size_t w = 0; w < b_.vertex_count(); ++w) {
            if (used_[w] || !consistent(v, w)) continue;
            image_[v] = w;
            used_[w] = true;
            if (edges_closed(step) && extend(step + 1)) return true;
            used_[w] = false;
            image_[v] = kUnset;
        }
        return false;
    }

    const Hypergraph& a_;
    const Hypergraph& b_;
    IsoProfile pa_;
    IsoProfile pb_;
    std::set<IndexList> b_edges_;
    IndexList order_;
    IndexList position_;
    std::vector<IndexList> completes_at_;
    IndexList image_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<IndexList> are_isomorphic(const Hypergraph& h1, const Hypergraph& h2, std::size_t vertex_bound) {
    if (h1.vertex_count() > vertex_bound || h2.vertex_count() > vertex_bound)
        throw Error(ErrorCode::InstanceTooLarge, "isomorphism search is limited to " + std::to_string(vertex_bound) + " vertices");
    if (h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count()) return std::nullopt;
    auto sizes = [](const Hypergraph& h) {
        std::vector<std::size_t> s;
        for (const auto& e : h.edges()) s.push_back(e.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(h1) != sizes(h2)) return std::nullopt;
    return IsoSearch(h1, h2).run();
}

}  // namespace hyperinc
