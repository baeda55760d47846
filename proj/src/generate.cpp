#include "hyperinc/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hyperinc/rational.hpp"

namespace hyperinc {

namespace {

// Rejection sampling keeps draws identical across standard libraries, unlike
// std::uniform_int_distribution.
BigInt draw_below(std::mt19937_64& rng, const BigInt& bound) {
    const std::size_t bits = msb(bound) + 1;
    for (;;) {
        BigInt x = 0;
        for (std::size_t have = 0; have < bits; have += 64) x = (x << 64) | BigInt(rng());
        x &= (BigInt(1) << bits) - 1;
        if (x < bound) return x;
    }
}

std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(draw_below(rng, BigInt(bound)));
}

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_size, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::InvalidParameters, "need at least one vertex");
    if (max_size == 0) throw Error(ErrorCode::InvalidParameters, "max edge size must be positive");
    max_size = std::min(max_size, n);
    std::vector<BigInt> by_size(max_size + 1, 0);
    BigInt total = 0;
    for (std::size_t s = 1; s <= max_size; ++s) {
        by_size[s] = binomial(n, s);
        total += by_size[s];
    }
    if (total < m) throw Error(ErrorCode::InvalidParameters, "only " + total.str() + " distinct edges of size <= " +
                                                                 std::to_string(max_size) + " exist");

    std::mt19937_64 rng(seed);
    std::set<std::vector<std::size_t>> seen;
    std::vector<LabelList> edges;
    while (edges.size() < m) {
        BigInt pick = draw_below(rng, total);
        std::size_t size = 1;
        while (pick >= by_size[size]) pick -= by_size[size++];
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + draw_below(rng, n - i)]);
        std::vector<std::size_t> members(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(members.begin(), members.end());
        if (!seen.insert(members).second) continue;
        LabelList e;
        for (auto v : members) e.push_back(std::to_string(v));
        edges.push_back(std::move(e));
    }
    LabelList vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
    return Hypergraph::build(std::move(vertices), edges);
}

}  // namespace hyperinc
