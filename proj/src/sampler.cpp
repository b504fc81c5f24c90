#include "defzero/sampler.hpp"

#include "defzero/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace defzero {

void ErTrialConfig::validate() const
{
    if (n < 1)
        throw DomainError("species count must be at least 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1], got " + std::to_string(p));
}

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t rank)
{
    // Largest v with v(v-1)/2 <= rank.
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(rank))) / 2.0);
    while (pair_count(v) > rank)
        --v;
    while (pair_count(v + 1) <= rank)
        ++v;
    return {rank - pair_count(v), v};
}

std::uint64_t rank_pair(std::uint64_t u, std::uint64_t v)
{
    if (u > v)
        std::swap(u, v);
    return pair_count(v) + u;
}

std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p)
{
    if (trials == 0 || p <= 0.0)
        return 0;
    if (p >= 1.0)
        return trials;
    if (p > 0.5)
        return trials - sample_binomial(rng, trials, 1.0 - p);

    // Count successes by jumping over geometric runs of failures.
    const double log_fail = std::log1p(-p);
    std::uint64_t successes = 0;
    std::uint64_t position = 0; // index of the next trial to examine
    for (;;) {
        const double u = 1.0 - rng.uniform(); // (0, 1]
        const double skip = std::floor(std::log(u) / log_fail);
        if (skip >= static_cast<double>(trials - position))
            break;
        position += static_cast<std::uint64_t>(skip) + 1;
        ++successes;
        if (position >= trials)
            break;
    }
    return successes;
}

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t population, std::uint64_t count)
{
    if (count > population)
        throw DomainError("cannot draw " + std::to_string(count) + " distinct values from " + std::to_string(population));

    const bool complement = count > population / 2;
    const std::uint64_t draws = complement ? population - count : count;

    // Floyd's algorithm.
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(draws * 2);
    for (std::uint64_t j = population - draws; j < population; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }

    std::vector<std::uint64_t> out;
    if (complement) {
        out.reserve(count);
        for (std::uint64_t x = 0; x < population; ++x)
            if (!chosen.contains(x))
                out.push_back(x);
    } else {
        out.assign(chosen.begin(), chosen.end());
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_er_edges(const ErTrialConfig& cfg)
{
    cfg.validate();
    const std::uint64_t pairs = pair_count(universe_size(cfg.n));
    Rng rng(cfg.seed);
    const std::uint64_t edge_count = sample_binomial(rng, pairs, cfg.p);
    const auto ranks = sample_distinct(rng, pairs, edge_count);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.reserve(ranks.size());
    for (std::uint64_t r : ranks)
        edges.push_back(unrank_pair(r));
    return edges;
}

ReactionNetwork sample_er_network(const ErTrialConfig& cfg)
{
    const auto edges = sample_er_edges(cfg);
    return from_edge_list(cfg.n, edges);
}

std::uint64_t count_isolated(const ReactionNetwork& net)
{
    return universe_size(net.species_count()) - net.vertices().size();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_k_pairing(std::uint32_t n, std::uint32_t k,
                                                                      std::uint64_t seed)
{
    const std::uint64_t vertices = universe_size(n);
    if (2ull * k > vertices)
        throw DomainError("a " + std::to_string(k) + "-paired network needs " + std::to_string(2ull * k) +
                          " vertices but C0_" + std::to_string(n) + " has " + std::to_string(vertices));

    // Partial Fisher-Yates over a virtual array [0, N): the first 2k slots form a
    // uniformly random ordered sample, paired as (v1 v2)(v3 v4)...
    Rng rng(seed);
    std::unordered_map<std::uint64_t, std::uint64_t> swapped;
    auto value_at = [&](std::uint64_t i) {
        auto it = swapped.find(i);
        return it == swapped.end() ? i : it->second;
    };
    std::vector<std::uint64_t> picked;
    picked.reserve(2ull * k);
    for (std::uint64_t i = 0; i < 2ull * k; ++i) {
        const std::uint64_t j = i + rng.below(vertices - i);
        const std::uint64_t vi = value_at(i);
        const std::uint64_t vj = value_at(j);
        swapped[j] = vi;
        swapped[i] = vj;
        picked.push_back(vj);
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(k);
    for (std::size_t i = 0; i + 1 < picked.size(); i += 2)
        pairs.emplace_back(picked[i], picked[i + 1]);
    return pairs;
}

ReactionNetwork sample_k_paired(std::uint32_t n, std::uint32_t k, std::uint64_t seed)
{
    const auto pairs = sample_k_pairing(n, k, seed);
    return from_edge_list(n, pairs);
}

DnMatrix::DnMatrix(std::uint32_t n, std::vector<DnColumn> columns, Supports supports)
    : n_(n), columns_(std::move(columns))
{
    for (const DnColumn& c : columns_) {
        for (std::size_t i = 0; i < 4; ++i) {
            if (c.rows[i] >= n_)
                throw DomainError("column row index out of range");
            if (i > 0 && c.rows[i] <= c.rows[i - 1])
                throw DomainError("column rows must be strictly ascending");
        }
        int plus = 0, minus = 0;
        for (auto s : c.signs) {
            plus += s == 1;
            minus += s == -1;
        }
        if (plus != 2 || minus != 2)
            throw DomainError("each column needs two +1 and two -1 entries");
    }
    if (supports == Supports::Distinct) {
        std::vector<std::array<std::uint32_t, 4>> seen;
        seen.reserve(columns_.size());
        for (const DnColumn& c : columns_)
            seen.push_back(c.rows);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw DomainError("column supports must be distinct");
    }
}

IntMatrix DnMatrix::dense() const
{
    IntMatrix m(n_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (std::size_t i = 0; i < 4; ++i)
            m(columns_[j].rows[i], j) = columns_[j].signs[i];
    return m;
}

namespace {

// Colex unranking of a 4-subset of [0, n).
std::array<std::uint32_t, 4> unrank_quad(std::uint64_t rank, std::uint32_t n)
{
    std::array<std::uint32_t, 4> out{};
    std::uint32_t hi = n;
    for (int k = 4; k >= 1; --k) {
        // Largest c < hi with C(c, k) <= rank.
        std::uint32_t lo = static_cast<std::uint32_t>(k - 1);
        std::uint32_t top = hi - 1;
        while (lo < top) {
            const std::uint32_t mid = lo + (top - lo + 1) / 2;
            if (binomial_coefficient(mid, static_cast<std::uint64_t>(k)) <= rank)
                lo = mid;
            else
                top = mid - 1;
        }
        out[static_cast<std::size_t>(k - 1)] = lo;
        rank -= binomial_coefficient(lo, static_cast<std::uint64_t>(k));
        hi = lo;
    }
    return out;
}

} // namespace

DnMatrix sample_dn_matrix(std::uint32_t n, std::uint64_t k, std::uint64_t seed)
{
    if (n < 4)
        throw DomainError("D_n matrices need n >= 4");
    const std::uint64_t supports = binomial_coefficient(n, 4);
    if (k > supports)
        throw DomainError("k=" + std::to_string(k) + " exceeds the " + std::to_string(supports) + " available supports");

    Rng rng(seed);
    const auto ranks = sample_distinct(rng, supports, k);
    std::vector<DnColumn> columns;
    columns.reserve(k);
    for (std::uint64_t r : ranks) {
        DnColumn c;
        c.rows = unrank_quad(r, n);
        const auto partner = 1 + rng.below(3);
        for (std::size_t i = 0; i < 4; ++i)
            c.signs[i] = (i == 0 || i == partner) ? 1 : -1;
        columns.push_back(c);
    }
    return DnMatrix(n, std::move(columns));
}

bool is_columns_independent(const DnMatrix& m)
{
    if (m.cols() > m.rows())
        return false;
    return exact_rank(m.dense()) == m.cols();
}

} // namespace defzero
