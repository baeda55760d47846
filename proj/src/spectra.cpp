#include "hyperinc/spectra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hyperinc/labels.hpp"

namespace hyperinc {

std::string_view to_string(WeightingPreset preset) noexcept {
    switch (preset) {
        case WeightingPreset::Unit: return "unit";
        case WeightingPreset::Banerjee: return "banerjee";
        case WeightingPreset::Custom: return "custom";
    }
    return "unknown";
}

std::string_view to_string(EigenSource source) noexcept {
    return source == EigenSource::Unit ? "unit" : "class";
}

EdgeWeighting EdgeWeighting::unit(const Hypergraph& h) {
    return EdgeWeighting{WeightingPreset::Unit, std::vector<Rational>(h.edge_count(), Rational(1))};
}

EdgeWeighting EdgeWeighting::banerjee(const Hypergraph& h) {
    EdgeWeighting w{WeightingPreset::Banerjee, {}};
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const std::size_t size = h.edge(e).size();
        if (size < 2)
            throw Error(ErrorCode::SingletonEdgeWithBanerjeeWeight,
                        "edge '" + h.edge_name(e) + "' has one vertex, so 1/(|e|-1) is undefined");
        w.weights.emplace_back(1, static_cast<long long>(size - 1));
    }
    return w;
}

EdgeWeighting EdgeWeighting::custom(const Hypergraph& h, const std::map<std::string, Rational>& weights) {
    for (const auto& [name, value] : weights) {
        h.edge_index(name);
        if (value <= 0)
            throw Error(ErrorCode::NonPositiveWeight, "weight of '" + name + "' is " + to_string(value));
    }
    EdgeWeighting w{WeightingPreset::Custom, {}};
    for (const auto& name : h.edge_names()) {
        auto it = weights.find(name);
        if (it == weights.end()) throw Error(ErrorCode::InvalidParameters, "no weight given for edge '" + name + "'");
        w.weights.push_back(it->second);
    }
    return w;
}

namespace {

void check_weighting(const Hypergraph& h, const EdgeWeighting& w) {
    if (w.weights.size() != h.edge_count())
        throw Error(ErrorCode::DimensionMismatch, "weighting has " + std::to_string(w.weights.size()) +
                                                      " entries for " + std::to_string(h.edge_count()) + " edges");
}

}  // namespace

WeightedAdjacency weighted_adjacency(const Hypergraph& h, const EdgeWeighting& w) {
    check_weighting(h, w);
    RationalMatrix a(h.vertices(), h.vertices());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& members = h.edge(e);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                a(members[i], members[j]) += w.weights[e];
                a(members[j], members[i]) += w.weights[e];
            }
    }
    return WeightedAdjacency{std::move(a), w};
}

Rational column_inner_product(const Hypergraph& h, const std::string& u, const std::string& v,
                              const EdgeWeighting& w) {
    check_weighting(h, w);
    const std::size_t iu = h.vertex_index(u);
    const std::size_t iv = h.vertex_index(v);
    Rational sum = 0;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (h.incident(e, iu) && h.incident(e, iv)) sum += w.weights[e];
    return sum;
}

namespace {

PredictedEigenpair predict_for_class(const Hypergraph& h, const EdgeWeighting& w, const RationalMatrix& a,
                                     LabelList members, EigenSource source) {
    PredictedEigenpair p;
    p.source = source;
    p.class_members = std::move(members);
    const std::string& v0 = p.class_members.front();
    p.eigenvalue = -column_inner_product(h, v0, p.class_members[1], w);
    p.verified = true;
    for (std::size_t i = 1; i < p.class_members.size(); ++i) {
        VertexVector x;
        x.set(v0, Rational(1));
        x.set(p.class_members[i], Rational(-1));
        VertexVector expected;
        for (const auto& [label, value] : x.entries()) expected.set(label, p.eigenvalue * value);
        if (!(matvec(a, x) == expected)) p.verified = false;
        p.eigenvectors.push_back(std::move(x));
    }
    p.multiplicity_lower_bound = p.eigenvectors.size();
    p.independent = span_dimension(p.eigenvectors, h.vertices()) == p.eigenvectors.size();
    return p;
}

}  // namespace

std::vector<PredictedEigenpair> predict_unit_eigenpairs(const Hypergraph& h, const EdgeWeighting& w) {
    const RationalMatrix a = weighted_adjacency(h, w).matrix;
    const UnitPartition units = compute_units(h);
    std::vector<PredictedEigenpair> out;
    for (const auto& unit : units.units) {
        if (unit.members.size() < 2) continue;
        LabelList members;
        for (auto v : unit.members) members.push_back(h.vertex(v));
        auto p = predict_for_class(h, w, a, std::move(members), EigenSource::Unit);
        Rational star_weight = 0;
        for (auto e : star_of(h, unit.members.front())) star_weight += w.weights[e];
        if (p.eigenvalue != -star_weight) throw std::logic_error("unit eigenvalue differs from its star weight");
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

bool related(const RationalMatrix& m, std::size_t u, std::size_t v) {
    if (m(u, u) != m(v, v) || m(u, v) != m(v, u)) return false;
    for (std::size_t x = 0; x < m.rows(); ++x) {
        if (x == u || x == v) continue;
        if (m(u, x) != m(v, x) || m(x, u) != m(x, v)) return false;
    }
    return true;
}

struct Signature {
    Rational diagonal;
    std::vector<Rational> row;
    std::vector<Rational> column;
    bool operator<(const Signature& o) const {
        return std::tie(diagonal, row, column) < std::tie(o.diagonal, o.row, o.column);
    }
};

Partition canonical(Partition p) {
    for (auto& c : p) std::sort(c.begin(), c.end(), NaturalLess{});
    std::sort(p.begin(), p.end(), [](const LabelList& a, const LabelList& b) {
        return natural_compare(a.front(), b.front()) < 0;
    });
    return p;
}

}  // namespace

Partition matrix_equivalence(const RationalMatrix& m) {
    if (m.rows() != m.cols() || m.row_labels() != m.col_labels())
        throw Error(ErrorCode::NonSquare, "R_M needs a square matrix with matching row and column labels");
    const std::size_t n = m.rows();
    // R_M-related vertices share their diagonal entry and their off-diagonal
    // row and column multisets, so only buckets need the pairwise test.
    std::map<Signature, std::vector<std::size_t>> buckets;
    for (std::size_t u = 0; u < n; ++u) {
        Signature s{m(u, u), {}, {}};
        for (std::size_t x = 0; x < n; ++x) {
            if (x == u) continue;
            s.row.push_back(m(u, x));
            s.column.push_back(m(x, u));
        }
        std::sort(s.row.begin(), s.row.end());
        std::sort(s.column.begin(), s.column.end());
        buckets[std::move(s)].push_back(u);
    }
    Partition out;
    for (const auto& [sig, members] : buckets) {
        std::vector<std::vector<std::size_t>> classes;
        for (auto u : members) {
            auto it = std::find_if(classes.begin(), classes.end(),
                                   [&](const auto& c) { return related(m, c.front(), u); });
            if (it == classes.end()) {
                classes.push_back({u});
            } else {
                for (auto v : *it)
                    if (!related(m, v, u)) throw std::logic_error("R_M is not transitive on this matrix");
                it->push_back(u);
            }
        }
        for (const auto& c : classes) {
            LabelList labels;
            for (auto u : c) labels.push_back(m.row_labels()[u]);
            out.push_back(std::move(labels));
        }
    }
    return canonical(std::move(out));
}

namespace {

std::map<std::string, std::size_t, NaturalLess> class_index(const Partition& p) {
    std::map<std::string, std::size_t, NaturalLess> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) throw Error(ErrorCode::GroundSetMismatch, "partition has an empty class");
        for (const auto& label : p[i])
            if (!out.emplace(label, i).second)
                throw Error(ErrorCode::GroundSetMismatch, "label '" + label + "' appears in two classes");
    }
    return out;
}

}  // namespace

bool is_finer(const Partition& finer, const Partition& coarser) {
    const auto a = class_index(finer);
    const auto b = class_index(coarser);
    if (a.size() != b.size() ||
        !std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) { return x.first == y.first; }))
        throw Error(ErrorCode::GroundSetMismatch, "partitions are over different label sets");
    for (const auto& c : finer) {
        const std::size_t target = b.at(c.front());
        for (const auto& label : c)
            if (b.at(label) != target) return false;
    }
    return true;
}

Partition unit_partition(const Hypergraph& h) {
    const UnitPartition units = compute_units(h);
    Partition out;
    for (std::size_t i = 0; i < units.units.size(); ++i) out.push_back(units.member_labels(h, i));
    return canonical(std::move(out));
}

std::vector<PredictedEigenpair> predict_class_eigenpairs(const Hypergraph& h, const EdgeWeighting& w,
                                                         const Partition& partition) {
    const RationalMatrix a = weighted_adjacency(h, w).matrix;
    if (!is_finer(partition, matrix_equivalence(a)))
        throw Error(ErrorCode::PartitionNotFiner, "partition does not refine R_A for this weighting");
    std::vector<PredictedEigenpair> out;
    for (const auto& c : canonical(partition)) {
        if (c.size() < 2) continue;
        out.push_back(predict_for_class(h, w, a, c, EigenSource::EquivalenceClass));
    }
    return out;
}

std::vector<EigenvalueBound> summarize_eigenvalues(const Hypergraph& h, const std::vector<PredictedEigenpair>& pairs) {
    std::map<Rational, std::pair<std::vector<VertexVector>, std::size_t>> pooled;
    for (const auto& p : pairs) {
        auto& [vectors, claimed] = pooled[p.eigenvalue];
        vectors.insert(vectors.end(), p.eigenvectors.begin(), p.eigenvectors.end());
        claimed += p.multiplicity_lower_bound;
    }
    std::vector<EigenvalueBound> out;
    for (const auto& [lambda, entry] : pooled) {
        const std::size_t dim = span_dimension(entry.first, h.vertices());
        out.push_back(EigenvalueBound{lambda, dim, dim == entry.second});
    }
    return out;
}

}  // namespace hyperinc
