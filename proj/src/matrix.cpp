#include "hyperinc/matrix.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hyperinc {

namespace {

void require_unique(const LabelList& labels, const char* what) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw Error(ErrorCode::InvalidParameters, std::string("repeated ") + what + " label");
}

}  // namespace

RationalMatrix::RationalMatrix(LabelList row_labels, LabelList col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    require_unique(row_labels_, "row");
    require_unique(col_labels_, "column");
    data_.assign(row_labels_.size() * col_labels_.size(), Rational(0));
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(col_labels_, row_labels_);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::has_integer_entries() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return is_integer(q); });
}

RationalMatrix edge_vertex_incidence(const Hypergraph& h) {
    RationalMatrix b(h.edge_names(), h.vertices());
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (auto v : h.edge(e)) b(e, v) = 1;
    return b;
}

RationalMatrix vertex_edge_incidence(const Hypergraph& h) { return edge_vertex_incidence(h).transpose(); }

std::size_t bareiss_rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const BigInt& d = boost::multiprecision::denominator(m(r, c));
            scale = boost::multiprecision::lcm(scale, d);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational scaled = m(r, c) * scale;
            a[r][c] = boost::multiprecision::numerator(scaled);
        }
    }

    std::size_t rank = 0;
    BigInt previous = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / previous;
            }
            a[r][c] = 0;
        }
        previous = a[rank][c];
        ++rank;
    }
    return rank;
}

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
};

Echelon reduced_row_echelon(const RationalMatrix& m) {
    Echelon out;
    out.rows.assign(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.rows[r][c] = m(r, c);

    auto& a = out.rows;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[lead]);
        const Rational inv = 1 / a[lead][c];
        for (std::size_t j = c; j < m.cols(); ++j) a[lead][j] *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || a[r][c] == 0) continue;
            const Rational factor = a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= factor * a[lead][j];
        }
        out.pivots.push_back(c);
        ++lead;
    }
    return out;
}

}  // namespace

NullspaceBasis rank_and_nullspace(const RationalMatrix& m) {
    const Echelon ech = reduced_row_echelon(m);
    const std::size_t r = bareiss_rank(m);
    if (r != ech.pivots.size()) throw std::logic_error("Bareiss rank and RREF rank disagree");

    NullspaceBasis basis;
    basis.rank = r;
    basis.column_labels = m.col_labels();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        VertexVector v;
        v.set(m.col_labels()[f], Rational(1));
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            const Rational& entry = ech.rows[i][f];
            if (entry != 0) v.set(m.col_labels()[ech.pivots[i]], Rational(-entry));
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_rank(m); }

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::size_t rank_mod_p(const std::vector<std::vector<BigInt>>& entries, std::size_t cols, std::uint64_t p) {
    const std::size_t rows = entries.size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    const BigInt bp = p;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            BigInt x = entries[r][c] % bp;
            if (x < 0) x += bp;
            a[r][c] = static_cast<std::uint64_t>(x);
        }
    }
    auto power = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t result = 1;
        b %= p;
        while (e) {
            if (e & 1) result = result * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const std::uint64_t inv = power(a[rank][c], p - 2);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t factor = a[r][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] + (p - factor) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_modular_oracle(const RationalMatrix& m, std::uint64_t seed, std::size_t prime_count) {
    if (!m.has_integer_entries()) throw Error(ErrorCode::NonIntegerEntries, "modular rank needs an integer matrix");
    std::vector<std::vector<BigInt>> entries(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries[r][c] = boost::multiprecision::numerator(m(r, c));

    std::mt19937_64 rng(seed);
    std::size_t best = 0;
    for (std::size_t i = 0; i < prime_count; ++i) {
        std::uint64_t candidate = (1ULL << 20) + 1 + rng() % ((1ULL << 31) - (1ULL << 20));
        while (!is_prime(candidate)) ++candidate;
        best = std::max(best, rank_mod_p(entries, m.cols(), candidate));
    }
    return best;
}

std::size_t span_dimension(const std::vector<VertexVector>& vectors, const LabelList& labels) {
    LabelList rows;
    for (std::size_t i = 0; i < vectors.size(); ++i) rows.push_back("v" + std::to_string(i));
    RationalMatrix m(rows, labels);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t c = 0; c < labels.size(); ++c) m(i, c) = vectors[i][labels[c]];
    return rank(m);
}

VertexVector indicator(const LabelList& labels, const Rational& coefficient) {
    VertexVector v;
    for (const auto& l : labels) v.set(l, coefficient);
    return v;
}

}  // namespace hyperinc
