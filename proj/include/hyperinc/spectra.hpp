#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperinc/hypergraph.hpp"
#include "hyperinc/matrix.hpp"

namespace hyperinc {

enum class WeightingPreset { Unit, Banerjee, Custom };

std::string_view to_string(WeightingPreset preset) noexcept;

/// Positive rational weight per edge, indexed like h.edges().
struct EdgeWeighting {
    WeightingPreset preset = WeightingPreset::Unit;
    std::vector<Rational> weights;

    /// w ≡ 1.
    static EdgeWeighting unit(const Hypergraph& h);
    /// w(e) = 1/(|e|-1). Throws SingletonEdgeWithBanerjeeWeight.
    static EdgeWeighting banerjee(const Hypergraph& h);
    /// Every edge name needs a weight (InvalidParameters if missing, UnknownEdge
    /// for extra names); NonPositiveWeight for w <= 0.
    static EdgeWeighting custom(const Hypergraph& h, const std::map<std::string, Rational>& weights);
};

struct WeightedAdjacency {
    RationalMatrix matrix;
    EdgeWeighting weighting;
};

/// a_uv = sum of w(e) over edges containing both u and v; zero diagonal.
WeightedAdjacency weighted_adjacency(const Hypergraph& h, const EdgeWeighting& w);

/// (s_u, s_v)_w. With u == v this is the weighted degree.
Rational column_inner_product(const Hypergraph& h, const std::string& u, const std::string& v,
                              const EdgeWeighting& w);

enum class EigenSource { Unit, EquivalenceClass };

std::string_view to_string(EigenSource source) noexcept;

struct PredictedEigenpair {
    Rational eigenvalue;
    LabelList class_members;
    /// x_{v0 vi} = χ_{v0} - χ_{vi}, v0 the first member.
    std::vector<VertexVector> eigenvectors;
    std::size_t multiplicity_lower_bound = 0;
    /// A x = λ x for every eigenvector, checked over Q.
    bool verified = false;
    /// The eigenvectors have rank |W| - 1.
    bool independent = false;
    EigenSource source = EigenSource::Unit;
};

/// One entry per unit with at least two members, in unit order.
std::vector<PredictedEigenpair> predict_unit_eigenpairs(const Hypergraph& h, const EdgeWeighting& w);

/// Classes of labels; each class sorted naturally, classes ordered by first member.
using Partition = std::vector<LabelList>;

/// R_M classes of a square matrix whose row and column labels coincide.
/// Throws NonSquare otherwise.
Partition matrix_equivalence(const RationalMatrix& m);

/// Every class of `finer` lies inside a class of `coarser`. Throws
/// GroundSetMismatch unless both are partitions of the same label set.
bool is_finer(const Partition& finer, const Partition& coarser);

Partition unit_partition(const Hypergraph& h);

/// Throws PartitionNotFiner unless `partition` refines R_{A_(w,H)}.
std::vector<PredictedEigenpair> predict_class_eigenpairs(const Hypergraph& h, const EdgeWeighting& w,
                                                         const Partition& partition);

struct EigenvalueBound {
    Rational eigenvalue;
    /// Rank of all predicted eigenvectors for this eigenvalue together.
    std::size_t multiplicity_lower_bound = 0;
    /// Equals the sum of the per-class bounds.
    bool classes_independent = false;
};

/// Pools predictions that share an eigenvalue, ascending by eigenvalue.
std::vector<EigenvalueBound> summarize_eigenvalues(const Hypergraph& h, const std::vector<PredictedEigenpair>& pairs);

}  // namespace hyperinc
