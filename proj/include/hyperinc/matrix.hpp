#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperinc/error.hpp"
#include "hyperinc/hypergraph.hpp"
#include "hyperinc/labeled_vector.hpp"
#include "hyperinc/rational.hpp"

namespace hyperinc {

using VertexVector = LabeledVector<Rational>;

/// Dense row-major matrix over Q with row and column labels (edges / vertices
/// for incidence matrices, vertices / vertices for adjacency matrices).
class RationalMatrix {
   public:
    RationalMatrix() = default;
    /// Zero matrix. Throws InvalidParameters on repeated labels.
    RationalMatrix(LabelList row_labels, LabelList col_labels);

    std::size_t rows() const noexcept { return row_labels_.size(); }
    std::size_t cols() const noexcept { return col_labels_.size(); }
    const LabelList& row_labels() const noexcept { return row_labels_; }
    const LabelList& col_labels() const noexcept { return col_labels_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    RationalMatrix transpose() const;
    bool has_integer_entries() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ && a.data_ == b.data_;
    }

   private:
    LabelList row_labels_;
    LabelList col_labels_;
    std::vector<Rational> data_;
};

/// B_H: rows are edges (input order), columns are vertices (natural order).
RationalMatrix edge_vertex_incidence(const Hypergraph& h);
/// I_H = B_H^T.
RationalMatrix vertex_edge_incidence(const Hypergraph& h);

struct NullspaceBasis {
    std::size_t rank = 0;
    LabelList column_labels;
    /// One vector per free column, in column order; the free column carries 1.
    std::vector<VertexVector> vectors;

    std::size_t nullity() const noexcept { return vectors.size(); }
    bool dimension_check() const noexcept { return rank + vectors.size() == column_labels.size(); }
};

/// Fraction-free (Bareiss) rank on the row-scaled integer matrix.
std::size_t bareiss_rank(const RationalMatrix& m);

/// Rank from Bareiss elimination, basis from the reduced row-echelon form over Q.
/// The two ranks are cross-checked; a disagreement is a std::logic_error.
NullspaceBasis rank_and_nullspace(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Rank over GF(p) for `prime_count` primes above 2^20 drawn from a seeded
/// generator; returns the largest. Never exceeds the rational rank.
/// Throws NonIntegerEntries.
std::size_t rank_modular_oracle(const RationalMatrix& m, std::uint64_t seed = 0x5eed, std::size_t prime_count = 3);

/// Rank of the matrix whose rows are the given vectors restricted to `labels`.
std::size_t span_dimension(const std::vector<VertexVector>& vectors, const LabelList& labels);

/// (m x)(row) = sum over columns; the result is keyed by row labels.
/// Throws DimensionMismatch when x is non-zero at a label m has no column for.
template <class Scalar>
LabeledVector<Scalar> matvec(const RationalMatrix& m, const LabeledVector<Scalar>& x) {
    std::vector<std::size_t> cols;
    std::vector<const Scalar*> values;
    for (const auto& [label, value] : x.entries()) {
        std::size_t c = 0;
        while (c < m.cols() && m.col_labels()[c] != label) ++c;
        if (c == m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix has no column '" + label + "'");
        cols.push_back(c);
        values.push_back(&value);
    }
    LabeledVector<Scalar> out(x.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar acc = x.zero();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const Rational& a = m(r, cols[i]);
            if (a == 0) continue;
            acc = acc + (*values[i]) * a;
        }
        out.set(m.row_labels()[r], std::move(acc));
    }
    return out;
}

/// Characteristic vector of a label set.
VertexVector indicator(const LabelList& labels, const Rational& coefficient = Rational(1));

}  // namespace hyperinc
