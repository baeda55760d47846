#include "hyperinc/kernel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hyperinc {

std::string_view to_string(CertificateKind kind) noexcept {
    switch (kind) {
        case CertificateKind::EqualEdgePartition: return "EqualEdgePartition";
        case CertificateKind::RatioEdgePartition: return "RatioEdgePartition";
        case CertificateKind::ThreeSetRelation: return "ThreeSetRelation";
        case CertificateKind::GeneralCombination: return "GeneralCombination";
        case CertificateKind::UnitPair: return "UnitPair";
        case CertificateKind::RootOfUnityCycle: return "RootOfUnityCycle";
        case CertificateKind::EqualVertexPartition: return "EqualVertexPartition";
        case CertificateKind::RatioVertexPartition: return "RatioVertexPartition";
    }
    return "Unknown";
}

std::optional<CertificateKind> parse_certificate_kind(std::string_view name) {
    for (auto kind : {CertificateKind::EqualEdgePartition, CertificateKind::RatioEdgePartition,
                      CertificateKind::ThreeSetRelation, CertificateKind::GeneralCombination, CertificateKind::UnitPair,
                      CertificateKind::RootOfUnityCycle, CertificateKind::EqualVertexPartition,
                      CertificateKind::RatioVertexPartition}) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(MatrixSide side) noexcept { return side == MatrixSide::EdgeVertex ? "B_H" : "I_H"; }

LabelList set_names(const KernelCertificate& c) {
    switch (c.kind) {
        case CertificateKind::EqualEdgePartition:
        case CertificateKind::RatioEdgePartition: return {"U", "V"};
        case CertificateKind::ThreeSetRelation: return {"U", "V", "W"};
        case CertificateKind::UnitPair: return {"u", "v"};
        case CertificateKind::EqualVertexPartition:
        case CertificateKind::RatioVertexPartition: return {"E", "F"};
        case CertificateKind::RootOfUnityCycle: return {};
        case CertificateKind::GeneralCombination: break;
    }
    LabelList names;
    for (std::size_t i = 0; i < c.sets.size(); ++i) names.push_back("U" + std::to_string(i + 1));
    return names;
}

namespace {

// Resolves every set to indices on the certified side and enforces the shared
// preconditions (known labels, non-empty, pairwise disjoint).
std::vector<IndexList> resolve_sets(const Hypergraph& h, MatrixSide side, const std::vector<LabelList>& sets) {
    std::vector<IndexList> out;
    const std::size_t ground = side == MatrixSide::EdgeVertex ? h.vertex_count() : h.edge_count();
    std::vector<bool> used(ground, false);
    for (const auto& labels : sets) {
        if (labels.empty()) throw Error(ErrorCode::EmptySubset, "certificate sets must be non-empty");
        IndexList idx = side == MatrixSide::EdgeVertex ? h.vertex_indices(labels) : h.edge_indices(labels);
        for (auto i : idx) {
            if (used[i]) {
                const std::string& label = side == MatrixSide::EdgeVertex ? h.vertex(i) : h.edge_name(i);
                throw Error(ErrorCode::OverlappingSets, "'" + label + "' appears in more than one set");
            }
            used[i] = true;
        }
        out.push_back(std::move(idx));
    }
    return out;
}

LabelList labels_of(const Hypergraph& h, MatrixSide side, const IndexList& idx) {
    LabelList out;
    for (auto i : idx) out.push_back(side == MatrixSide::EdgeVertex ? h.vertex(i) : h.edge_name(i));
    return out;
}

KernelCertificate make_certificate(const Hypergraph& h, CertificateKind kind, MatrixSide side,
                                   const std::vector<LabelList>& sets, std::vector<Rational> coefficients,
                                   const Rational& ratio) {
    const auto idx = resolve_sets(h, side, sets);
    KernelCertificate c;
    c.kind = kind;
    c.side = side;
    c.ratio = ratio;
    c.coefficients = std::move(coefficients);
    VertexVector v;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        c.sets.push_back(labels_of(h, side, idx[i]));
        for (const auto& label : c.sets.back()) v.add(label, c.coefficients[i]);
    }
    c.induced_vector = std::move(v);
    return c;
}

bool parse_residue(const std::string& label, long long& out) {
    if (label.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(label, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == label.size();
}

CyclotomicVector cycle_vector(const Hypergraph& h, std::size_t order, std::size_t power) {
    CyclotomicVector x(CyclotomicNumber::zero(order));
    for (const auto& label : h.vertices()) {
        long long i = 0;
        if (!parse_residue(label, i))
            throw Error(ErrorCode::InvalidParameters, "vertex '" + label + "' is not an integer residue");
        x.set(label, CyclotomicNumber::zeta_power(order, i * static_cast<long long>(power)));
    }
    return x;
}

}  // namespace

KernelCertificate equal_edge_partition_certificate(const Hypergraph& h, const LabelList& u, const LabelList& v) {
    return make_certificate(h, CertificateKind::EqualEdgePartition, MatrixSide::EdgeVertex, {u, v},
                            {Rational(1), Rational(-1)}, Rational(1));
}

KernelCertificate ratio_edge_partition_certificate(const Hypergraph& h, const LabelList& u, const LabelList& v,
                                                   const Rational& r) {
    return make_certificate(h, CertificateKind::RatioEdgePartition, MatrixSide::EdgeVertex, {u, v},
                            {Rational(1), Rational(-r)}, r);
}

KernelCertificate three_set_certificate(const Hypergraph& h, const LabelList& u, const LabelList& v,
                                        const LabelList& w, const Rational& r) {
    return make_certificate(h, CertificateKind::ThreeSetRelation, MatrixSide::EdgeVertex, {u, v, w},
                            {Rational(-1), Rational(1), r}, r);
}

KernelCertificate general_combination_certificate(const Hypergraph& h,
                                                  const std::vector<std::pair<LabelList, Rational>>& parts) {
    if (parts.empty()) throw Error(ErrorCode::EmptySubset, "a general combination needs at least one part");
    std::vector<LabelList> sets;
    std::vector<Rational> coefficients;
    for (const auto& [set, c] : parts) {
        sets.push_back(set);
        coefficients.push_back(c);
    }
    return make_certificate(h, CertificateKind::GeneralCombination, MatrixSide::EdgeVertex, sets,
                            std::move(coefficients), Rational(1));
}

KernelCertificate unit_pair_certificate(const Hypergraph& h, const std::string& u, const std::string& v) {
    h.vertex_index(u);
    h.vertex_index(v);
    return make_certificate(h, CertificateKind::UnitPair, MatrixSide::EdgeVertex, {{u}, {v}},
                            {Rational(1), Rational(-1)}, Rational(1));
}

KernelCertificate root_of_unity_cycle_certificate(const Hypergraph& h, std::size_t order, std::size_t power) {
    if (order < 2 || power < 1 || power > order)
        throw Error(ErrorCode::InvalidParameters, "need order >= 2 and 1 <= power <= order");
    KernelCertificate c;
    c.kind = CertificateKind::RootOfUnityCycle;
    c.side = MatrixSide::EdgeVertex;
    c.order = order;
    c.power = power;
    c.induced_vector = cycle_vector(h, order, power);
    return c;
}

KernelCertificate dual_side_certificates(const Hypergraph& h, const LabelList& e, const LabelList& f,
                                         const Rational& r) {
    const auto kind = r == 1 ? CertificateKind::EqualVertexPartition : CertificateKind::RatioVertexPartition;
    return make_certificate(h, kind, MatrixSide::VertexEdge, {e, f}, {Rational(1), Rational(-r)}, r);
}

namespace {

// Counting side of each iff theorem, evaluated per block (edge for B_H, vertex
// for I_H) from the set intersection sizes only.
bool counts_satisfy(const KernelCertificate& c, const std::vector<std::size_t>& counts) {
    switch (c.kind) {
        case CertificateKind::EqualEdgePartition:
        case CertificateKind::EqualVertexPartition:
        case CertificateKind::UnitPair: return counts[0] == counts[1];
        case CertificateKind::RatioEdgePartition:
        case CertificateKind::RatioVertexPartition:
            if (counts[1] == 0) return counts[0] == 0;
            return Rational(counts[0], counts[1]) == c.ratio;
        case CertificateKind::ThreeSetRelation: {
            if (counts[2] == 0) return counts[0] == counts[1];
            const Rational diff = Rational(counts[0]) - Rational(counts[1]);
            return diff / Rational(counts[2]) == c.ratio;
        }
        case CertificateKind::GeneralCombination: {
            Rational sum = 0;
            for (std::size_t i = 0; i < counts.size(); ++i) sum += c.coefficients[i] * counts[i];
            return sum == 0;
        }
        case CertificateKind::RootOfUnityCycle: break;
    }
    return false;
}

bool residues_balanced(const Hypergraph& h, const KernelCertificate& c) {
    const std::size_t m = c.order / std::gcd(c.order, c.power);
    if (m == 1) return false;  // ω = 1: every edge sums to |e| > 0
    for (const auto& e : h.edges()) {
        std::vector<std::size_t> per_class(m, 0);
        for (auto v : e) {
            long long i = 0;
            parse_residue(h.vertex(v), i);
            const long long mm = static_cast<long long>(m);
            ++per_class[static_cast<std::size_t>(((i % mm) + mm) % mm)];
        }
        if (std::adjacent_find(per_class.begin(), per_class.end(), std::not_equal_to<>()) != per_class.end())
            return false;
    }
    return true;
}

}  // namespace

VerificationResult verify_certificate(const Hypergraph& h, const KernelCertificate& c) {
    VerificationResult out;
    if (c.kind == CertificateKind::RootOfUnityCycle) {
        const CyclotomicVector x = cycle_vector(h, c.order, c.power);
        const auto residual = matvec(edge_vertex_incidence(h), x);
        out.valid = residual.is_zero();
        out.combinatorial = residues_balanced(h, c);
        out.residual = residual;
        if (out.combinatorial && !out.valid)
            throw std::logic_error("balanced residues but x_ω is not in the kernel");
        return out;
    }

    const auto idx = resolve_sets(h, c.side, c.sets);
    if (c.coefficients.size() != idx.size())
        throw Error(ErrorCode::InvalidParameters, "one coefficient per set is required");
    VertexVector prescribed;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (const auto& label : labels_of(h, c.side, idx[i])) prescribed.add(label, c.coefficients[i]);
    if (const auto* stored = std::get_if<VertexVector>(&c.induced_vector); stored && !(*stored == prescribed))
        throw Error(ErrorCode::InvalidParameters, "stored vector differs from the one its sets prescribe");

    const RationalMatrix m =
        c.side == MatrixSide::EdgeVertex ? edge_vertex_incidence(h) : vertex_edge_incidence(h);
    const VertexVector residual = matvec(m, prescribed);
    out.valid = residual.is_zero();
    out.residual = residual;

    const std::size_t blocks = c.side == MatrixSide::EdgeVertex ? h.edge_count() : h.vertex_count();
    if (c.kind == CertificateKind::UnitPair) {
        out.combinatorial = star_of(h, idx[0].front()) == star_of(h, idx[1].front());
    } else {
        out.combinatorial = true;
        for (std::size_t b = 0; b < blocks && out.combinatorial; ++b) {
            std::vector<std::size_t> counts(idx.size(), 0);
            for (std::size_t i = 0; i < idx.size(); ++i) {
                for (auto x : idx[i]) {
                    const bool hit = c.side == MatrixSide::EdgeVertex ? h.incident(b, x) : h.incident(x, b);
                    if (hit) ++counts[i];
                }
            }
            out.combinatorial = counts_satisfy(c, counts);
        }
    }
    if (out.combinatorial != out.valid)
        throw std::logic_error("counting condition and kernel membership disagree for " + std::string(to_string(c.kind)));
    return out;
}

SWReport sw_subspace(const Hypergraph& h, const LabelList& w) {
    const IndexList members = h.vertex_indices(w);
    if (members.size() < 2) throw Error(ErrorCode::SubsetTooSmall, "S_W needs |W| >= 2");
    const RationalMatrix b = edge_vertex_incidence(h);
    const std::string& anchor = h.vertex(members.front());
    auto pair_vector = [&](std::size_t v) {
        VertexVector x;
        x.set(h.vertex(v), Rational(1));
        x.set(anchor, Rational(-1));
        return x;
    };

    SWReport report;
    for (auto v : members) report.w.push_back(h.vertex(v));
    report.contained_in_kernel = true;
    for (std::size_t i = 1; i < members.size(); ++i) {
        report.basis.push_back(pair_vector(members[i]));
        if (!matvec(b, report.basis.back()).is_zero()) report.contained_in_kernel = false;
    }

    // S_W ⊆ S_{W'} for W ⊆ W', so single-vertex extensions decide maximality.
    report.maximal = true;
    if (report.contained_in_kernel) {
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            if (std::binary_search(members.begin(), members.end(), v)) continue;
            if (matvec(b, pair_vector(v)).is_zero()) {
                report.maximal = false;
                break;
            }
        }
    }

    const UnitPartition units = compute_units(h);
    const auto& unit = units.units[units.vertex_to_unit[members.front()]];
    report.is_unit = unit.members == members;
    if ((report.contained_in_kernel && report.maximal) != report.is_unit)
        throw std::logic_error("S_W maximality disagrees with the unit partition");
    return report;
}

NullityReport nullity_decomposition(const Hypergraph& h) {
    const Contraction contraction = unit_contraction(h);
    const NullspaceBasis original = rank_and_nullspace(edge_vertex_incidence(h));
    const NullspaceBasis contracted = rank_and_nullspace(edge_vertex_incidence(contraction.hypergraph));
    NullityReport r;
    r.vertex_count = h.vertex_count();
    r.unit_count = contraction.units.units.size();
    r.rank = original.rank;
    r.nullity = original.nullity();
    r.contraction_rank = contracted.rank;
    r.contraction_nullity = contracted.nullity();
    return r;
}

ExtensionReport extension_theorem_check(const Hypergraph& h, const LabelList& u) {
    const InducedSubhypergraph induced = induced_subhypergraph(h, u);
    const NullspaceBasis basis = rank_and_nullspace(edge_vertex_incidence(induced.hypergraph));
    const RationalMatrix b = edge_vertex_incidence(h);
    ExtensionReport report;
    report.holds = true;
    report.induced_nullity = basis.nullity();
    for (const auto& y : basis.vectors) {
        report.extended.push_back(extend_vector(h, induced.hypergraph.vertices(), y));
        if (!matvec(b, report.extended.back()).is_zero()) report.holds = false;
    }
    return report;
}

CycleRootReport certify_cycle_roots(std::size_t n, std::size_t k) {
    const Hypergraph cycle = uniform_cycle(n, k);
    const RationalMatrix b = edge_vertex_incidence(cycle);
    CycleRootReport report;
    report.n = n;
    report.k = k;
    report.r = std::gcd(n, k);
    report.all_in_kernel = true;
    for (std::size_t j = 1; j < report.r; ++j) {
        report.vectors.push_back(root_of_unity_vector(n, report.r, j));
        if (!matvec(b, report.vectors.back()).is_zero()) report.all_in_kernel = false;
    }
    report.nodes_distinct = true;
    std::vector<CyclotomicNumber> nodes;
    for (std::size_t j = 1; j < report.r; ++j)
        nodes.push_back(CyclotomicNumber::zeta_power(report.r, static_cast<long long>(j)));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t c = a + 1; c < nodes.size(); ++c)
            if (nodes[a] == nodes[c]) report.nodes_distinct = false;
    return report;
}

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return std::popcount(m); }

Mask lowest_bit(Mask m) { return m & (~m + 1); }

LabelList labels_of_mask(const Hypergraph& h, MatrixSide side, Mask m) {
    LabelList out;
    for (std::size_t i = 0; m; ++i, m >>= 1) {
        if (m & 1) out.push_back(side == MatrixSide::EdgeVertex ? h.vertex(i) : h.edge_name(i));
    }
    return out;
}

// Ratio num:den shared by every block that meets the denominator set; blocks
// missing it must also miss the numerator. Empty when undetermined or violated.
template <class Numerator>
std::optional<Rational> common_ratio(const std::vector<Mask>& blocks, Mask denominator, Numerator numerator) {
    long long rn = 0, rd = 0;
    for (Mask b : blocks) {
        const long long den = popcount(b & denominator);
        const long long num = numerator(b);
        if (den == 0) {
            if (num != 0) return std::nullopt;
            continue;
        }
        if (rd == 0) {
            rn = num;
            rd = den;
        } else if (num * rd != rn * den) {
            return std::nullopt;
        }
    }
    if (rd == 0) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace

std::vector<KernelCertificate> find_certificates_exhaustive(const Hypergraph& h, CertificateKind kind,
                                                            const FinderBounds& bounds) {
    const bool edge_side = kind == CertificateKind::EqualVertexPartition || kind == CertificateKind::RatioVertexPartition;
    const MatrixSide side = edge_side ? MatrixSide::VertexEdge : MatrixSide::EdgeVertex;
    switch (kind) {
        case CertificateKind::GeneralCombination:
        case CertificateKind::RootOfUnityCycle:
            throw Error(ErrorCode::InvalidParameters,
                        "no exhaustive finder for " + std::string(to_string(kind)));
        default: break;
    }
    const std::size_t ground = edge_side ? h.edge_count() : h.vertex_count();
    const std::size_t limit = edge_side ? bounds.max_edges : bounds.max_vertices;
    if (ground > limit || ground > 30)
        throw Error(ErrorCode::InstanceTooLarge, "exhaustive search is limited to " + std::to_string(std::min<std::size_t>(limit, 30)) +
                                                     (edge_side ? " edges" : " vertices"));

    std::vector<Mask> blocks;
    if (edge_side) {
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            Mask m = 0;
            for (auto e : star_of(h, v)) m |= Mask{1} << e;
            blocks.push_back(m);
        }
    } else {
        for (const auto& e : h.edges()) {
            Mask m = 0;
            for (auto v : e) m |= Mask{1} << v;
            blocks.push_back(m);
        }
    }

    std::vector<KernelCertificate> found;
    auto full = [&] { return found.size() >= bounds.max_results; };
    const Mask all = ground == 0 ? 0 : ((Mask{1} << ground) - 1);

    if (kind == CertificateKind::UnitPair) {
        std::vector<IndexList> stars;
        for (std::size_t v = 0; v < h.vertex_count(); ++v) stars.push_back(star_of(h, v));
        for (std::size_t u = 0; u < h.vertex_count() && !full(); ++u)
            for (std::size_t v = u + 1; v < h.vertex_count() && !full(); ++v)
                if (stars[u] == stars[v]) found.push_back(unit_pair_certificate(h, h.vertex(u), h.vertex(v)));
        return found;
    }

    if (kind == CertificateKind::ThreeSetRelation) {
        for (Mask w = 1; w <= all && !full(); ++w) {
            const Mask rest = all & ~w;
            for (Mask u = rest; u; u = (u - 1) & rest) {
                const Mask rest2 = rest & ~u;
                for (Mask v = rest2; v; v = (v - 1) & rest2) {
                    if (!(lowest_bit(u | v) & u)) continue;
                    auto r = common_ratio(blocks, w, [&](Mask b) {
                        return static_cast<long long>(popcount(b & u)) - popcount(b & v);
                    });
                    if (!r) continue;
                    found.push_back(three_set_certificate(h, labels_of_mask(h, side, u), labels_of_mask(h, side, v),
                                                          labels_of_mask(h, side, w), *r));
                    if (full()) break;
                }
                if (full()) break;
            }
        }
        return found;
    }

    const bool ratio_kind = kind == CertificateKind::RatioEdgePartition || kind == CertificateKind::RatioVertexPartition;
    for (Mask u = 1; u <= all && !full(); ++u) {
        const Mask rest = all & ~u;
        // ascending enumeration of the non-empty submasks of rest
        for (Mask v = (Mask{0} - rest) & rest; v; v = (v - rest) & rest) {
            if (ratio_kind) {
                auto r = common_ratio(blocks, v, [&](Mask b) { return static_cast<long long>(popcount(b & u)); });
                if (!r || *r <= 0 || *r > 1) continue;
                if (*r == 1 && !(lowest_bit(u | v) & u)) continue;
                const auto lu = labels_of_mask(h, side, u);
                const auto lv = labels_of_mask(h, side, v);
                found.push_back(edge_side ? dual_side_certificates(h, lu, lv, *r)
                                          : ratio_edge_partition_certificate(h, lu, lv, *r));
                if (edge_side && found.back().kind != kind) found.back().kind = kind;
            } else {
                if (!(lowest_bit(u | v) & u)) continue;
                bool ok = true;
                for (Mask b : blocks) {
                    if (popcount(b & u) != popcount(b & v)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const auto lu = labels_of_mask(h, side, u);
                const auto lv = labels_of_mask(h, side, v);
                found.push_back(edge_side ? dual_side_certificates(h, lu, lv, Rational(1))
                                          : equal_edge_partition_certificate(h, lu, lv));
            }
            if (full()) break;
        }
    }
    return found;
}

}  // namespace hyperinc
