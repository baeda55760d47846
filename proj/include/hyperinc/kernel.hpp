#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hyperinc/cyclotomic.hpp"
#include "hyperinc/hypergraph.hpp"
#include "hyperinc/matrix.hpp"

namespace hyperinc {

enum class CertificateKind {
    EqualEdgePartition,
    RatioEdgePartition,
    ThreeSetRelation,
    GeneralCombination,
    UnitPair,
    RootOfUnityCycle,
    EqualVertexPartition,
    RatioVertexPartition,
};

std::string_view to_string(CertificateKind kind) noexcept;
std::optional<CertificateKind> parse_certificate_kind(std::string_view name);

/// B_H acts on vertex vectors, I_H on edge vectors.
enum class MatrixSide { EdgeVertex, VertexEdge };

std::string_view to_string(MatrixSide side) noexcept;

using InducedVector = std::variant<VertexVector, CyclotomicVector>;

/// A combinatorial witness together with the kernel vector it induces.
///
/// The vector is always sum_i coefficients[i] * χ_{sets[i]}, so the set order is
/// fixed per kind:
///   EqualEdgePartition    (U, V)        χ_U - χ_V
///   RatioEdgePartition    (U, V)        χ_U - r χ_V
///   ThreeSetRelation      (U, V, W)     r χ_W - (χ_U - χ_V)
///   GeneralCombination    (U_1..U_n)    sum c_i χ_{U_i}
///   UnitPair              ({u}, {v})    χ_u - χ_v
///   EqualVertexPartition  (E, F)        χ_E - χ_F        (on edges, for I_H)
///   RatioVertexPartition  (E, F)        χ_E - r χ_F      (on edges, for I_H)
///   RootOfUnityCycle      ()            x_ω, ω = ζ_order^power
struct KernelCertificate {
    CertificateKind kind = CertificateKind::EqualEdgePartition;
    MatrixSide side = MatrixSide::EdgeVertex;
    std::vector<LabelList> sets;
    std::vector<Rational> coefficients;
    Rational ratio{1};
    std::size_t order = 0;
    std::size_t power = 0;
    InducedVector induced_vector;
};

/// Names used for `sets` in reports ("U", "V", "W", "U1".., "u", "v", "E", "F").
LabelList set_names(const KernelCertificate& c);

// Builders. All validate labels (UnknownVertex / UnknownEdge), non-emptiness
// (EmptySubset) and pairwise disjointness (OverlappingSets). They do not
// decide validity; see verify_certificate.
KernelCertificate equal_edge_partition_certificate(const Hypergraph& h, const LabelList& u, const LabelList& v);
KernelCertificate ratio_edge_partition_certificate(const Hypergraph& h, const LabelList& u, const LabelList& v,
                                                   const Rational& r);
KernelCertificate three_set_certificate(const Hypergraph& h, const LabelList& u, const LabelList& v,
                                        const LabelList& w, const Rational& r);
KernelCertificate general_combination_certificate(const Hypergraph& h,
                                                  const std::vector<std::pair<LabelList, Rational>>& parts);
KernelCertificate unit_pair_certificate(const Hypergraph& h, const std::string& u, const std::string& v);
/// Needs integer vertex labels (read as residues); InvalidParameters otherwise.
KernelCertificate root_of_unity_cycle_certificate(const Hypergraph& h, std::size_t order, std::size_t power);
/// EqualVertexPartition when r == 1, RatioVertexPartition otherwise.
KernelCertificate dual_side_certificates(const Hypergraph& h, const LabelList& e, const LabelList& f,
                                         const Rational& r);

struct VerificationResult {
    /// The induced vector lies in the kernel of the certified matrix.
    bool valid = false;
    /// The counting condition of the matching theorem, evaluated on the sets alone.
    bool combinatorial = false;
    InducedVector residual;
};

/// Applies the certified matrix to the induced vector and independently checks
/// the counting side (|e∩U| = |e∩V| per edge, etc.). For every kind except
/// RootOfUnityCycle the two sides must agree; for RootOfUnityCycle the
/// counting side (each edge meets every residue class mod ord(ω) equally) is
/// only sufficient. A disagreement throws std::logic_error.
VerificationResult verify_certificate(const Hypergraph& h, const KernelCertificate& c);

struct SWReport {
    LabelList w;
    /// x_{u_i u_0} for i = 1..|w|-1, u_0 the first member in natural order.
    std::vector<VertexVector> basis;
    bool contained_in_kernel = false;
    /// No strict superset W' has S_{W'} inside ker B_H.
    bool maximal = false;
    bool is_unit = false;
};

/// Throws SubsetTooSmall for |w| < 2. Throws std::logic_error if
/// (contained ∧ maximal) disagrees with w being a unit.
SWReport sw_subspace(const Hypergraph& h, const LabelList& w);

struct NullityReport {
    std::size_t vertex_count = 0;
    std::size_t unit_count = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::size_t contraction_rank = 0;
    std::size_t contraction_nullity = 0;

    std::size_t units_deficiency() const noexcept { return vertex_count - unit_count; }
    bool decomposition_holds() const noexcept { return nullity == contraction_nullity + units_deficiency(); }
    bool ranks_equal() const noexcept { return rank == contraction_rank; }
    bool nullity_lower_bound_holds() const noexcept { return nullity >= units_deficiency(); }
    bool rank_upper_bound_holds() const noexcept { return rank <= unit_count; }
    bool all_hold() const noexcept {
        return decomposition_holds() && ranks_equal() && nullity_lower_bound_holds() && rank_upper_bound_holds();
    }
};

/// Computes both sides exactly; the identities are reported, not assumed.
NullityReport nullity_decomposition(const Hypergraph& h);

struct ExtensionReport {
    bool holds = false;
    std::size_t induced_nullity = 0;
    std::vector<VertexVector> extended;
};

/// Extends every basis vector of ker B_{H_U} by zero and tests membership in ker B_H.
ExtensionReport extension_theorem_check(const Hypergraph& h, const LabelList& u);

struct CycleRootReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;  // gcd(k, n)
    /// x_{ζ_r^j}, j = 1..r-1.
    std::vector<CyclotomicVector> vectors;
    bool all_in_kernel = false;
    /// ζ_r^1..ζ_r^{r-1} pairwise distinct, so the vectors are independent (Vandermonde).
    bool nodes_distinct = false;

    std::size_t nullity_lower_bound() const noexcept { return r - 1; }
    std::size_t rank_upper_bound() const noexcept { return n - r + 1; }
};

CycleRootReport certify_cycle_roots(std::size_t n, std::size_t k);

struct FinderBounds {
    std::size_t max_vertices = 12;
    std::size_t max_edges = 12;
    std::size_t max_results = std::numeric_limits<std::size_t>::max();
};

/// Exhaustive enumeration of valid certificates of one kind, deterministic order.
/// Supported: EqualEdgePartition, RatioEdgePartition (0 < r <= 1), ThreeSetRelation,
/// UnitPair, EqualVertexPartition, RatioVertexPartition (0 < r <= 1).
/// Sign-symmetric duplicates are dropped: the first element of the union goes in
/// the first set. Ratios are read off the per-edge (or per-vertex) counts, and a
/// pair/triple whose ratio is undetermined (no edge meets the denominator set) is
/// skipped. Throws InstanceTooLarge past the bounds, InvalidParameters for
/// unsupported kinds.
std::vector<KernelCertificate> find_certificates_exhaustive(const Hypergraph& h, CertificateKind kind,
                                                            const FinderBounds& bounds = {});

}  // namespace hyperinc
