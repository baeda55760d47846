#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperinc/hypergraph.hpp"
#include "hyperinc/matrix.hpp"

namespace fixtures {

using hyperinc::Hypergraph;
using hyperinc::LabelList;

inline LabelList range_labels(int from, int to) {
    LabelList out;
    for (int i = from; i <= to; ++i) out.push_back(std::to_string(i));
    return out;
}

inline Hypergraph make(int n, const std::vector<LabelList>& edges) {
    return Hypergraph::build(range_labels(1, n), edges);
}

// Units {1,2},{3,4},{5,6,7},{8,9},{10},{11}.
inline Hypergraph unit_example() {
    return make(11, {{"1", "2", "5", "6", "7", "10", "11"},
                     {"1", "2", "3", "4"},
                     {"3", "4", "10"},
                     {"5", "6", "7", "8", "9"},
                     {"8", "9", "10", "11"}});
}

// {1..6} induces the 4-uniform cycle on six vertices.
inline Hypergraph induced_cycle_example() {
    return make(8, {{"1", "2", "3", "4", "7"},
                    {"2", "3", "4", "5", "8"},
                    {"3", "4", "5", "6"},
                    {"4", "5", "6", "1"},
                    {"5", "6", "1", "2"},
                    {"6", "1", "2", "3"}});
}

// {1..6} induces a 3-uniform cycle; 7 lies on every edge.
inline Hypergraph seven_vertex_example() {
    return make(7, {{"1", "2", "3", "7"},
                    {"2", "3", "4", "7"},
                    {"3", "4", "5", "7"},
                    {"4", "5", "6", "7"},
                    {"5", "6", "1", "7"},
                    {"6", "1", "2", "7"}});
}

inline Hypergraph equal_partition_example() {
    return make(5, {{"1", "2", "3", "5"}, {"1", "3", "4", "5"}, {"1", "2", "4", "5"}});
}

inline Hypergraph ratio_example() { return make(5, {{"1", "3", "4"}, {"2", "4", "5"}}); }

inline Hypergraph three_set_example() {
    return make(6, {{"1", "3", "4"}, {"2", "4", "5"}, {"1", "3", "4", "5", "6"}});
}

inline Hypergraph general_combination_example() {
    return make(6, {{"1", "5", "3", "6"}, {"1", "2"}, {"2", "6"}, {"3", "4"}, {"4", "5", "6"}});
}

inline Hypergraph dual_equal_example() {
    return make(5, {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "2"}});
}

inline Hypergraph k4() {
    return make(4, {{"1", "2"}, {"3", "4"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
}

// Three 3-edges on four vertices; R_A classes {1},{2,3,4}.
inline Hypergraph adjacency_example() { return make(4, {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "2"}}); }

// Small random instances for property tests; independent of the library's generator.
inline Hypergraph random_instance(std::mt19937_64& rng, int max_vertices, int max_edges) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
    const int m = static_cast<int>(rng() % static_cast<unsigned>(max_edges + 1));
    std::set<std::vector<int>> seen;
    std::vector<LabelList> edges;
    for (int attempt = 0; attempt < 8 * m && static_cast<int>(edges.size()) < m; ++attempt) {
        std::vector<int> e;
        for (int v = 1; v <= n; ++v)
            if (rng() % 3 == 0) e.push_back(v);
        if (e.empty()) e.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
        if (!seen.insert(e).second) continue;
        LabelList labels;
        for (int v : e) labels.push_back(std::to_string(v));
        edges.push_back(labels);
    }
    return make(n, edges);
}

// Plain Gauss-Jordan over Q with full pivoting; an independent rank oracle.
inline std::size_t oracle_rank(const hyperinc::RationalMatrix& m) {
    std::vector<std::vector<hyperinc::Rational>> a(m.rows(), std::vector<hyperinc::Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (;;) {
        std::size_t pr = a.size(), pc = 0;
        for (std::size_t r = rank; r < a.size() && pr == a.size(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == a.size()) return rank;
        std::swap(a[pr], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][pc] == 0) continue;
            const hyperinc::Rational f = a[r][pc] / a[rank][pc];
            for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
}

// Pairwise star comparison, as a partition of vertex labels.
inline std::vector<LabelList> brute_force_units(const Hypergraph& h) {
    std::vector<int> cls(h.vertex_count(), -1);
    std::vector<LabelList> out;
    for (std::size_t u = 0; u < h.vertex_count(); ++u) {
        if (cls[u] >= 0) continue;
        cls[u] = static_cast<int>(out.size());
        out.push_back({h.vertex(u)});
        for (std::size_t v = u + 1; v < h.vertex_count(); ++v) {
            bool same = true;
            for (std::size_t e = 0; e < h.edge_count(); ++e)
                if (h.incident(e, u) != h.incident(e, v)) same = false;
            if (same) {
                cls[v] = cls[u];
                out.back().push_back(h.vertex(v));
            }
        }
    }
    return out;
}

}  // namespace fixtures
