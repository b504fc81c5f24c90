#pragma once

#include "defzero/network.hpp"
#include "defzero/rng.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace defzero {

/// One Erdős–Rényi draw over the complex universe C0_n.
struct ErTrialConfig {
    std::uint32_t n = 1;
    double p = 0.0;
    std::uint64_t seed = 0;

    /// Throws DomainError unless n >= 1 and 0 <= p <= 1.
    void validate() const;
};

/// n choose k; saturates at UINT64_MAX.
std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k);

/// Number of unordered vertex pairs among `vertices` vertices.
constexpr std::uint64_t pair_count(std::uint64_t vertices)
{
    return vertices < 2 ? 0 : vertices * (vertices - 1) / 2;
}

/// Colex unranking of unordered pairs: 0 -> {0,1}, 1 -> {0,2}, 2 -> {1,2},
/// 3 -> {0,3}, ... Returns (u, v) with u < v.
std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t rank);
std::uint64_t rank_pair(std::uint64_t u, std::uint64_t v);

/// Binomial(trials, p), exact in law; expected cost O(trials * min(p, 1-p)).
std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p);

/// `count` distinct values drawn uniformly from [0, population), sorted.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t population, std::uint64_t count);

/// Edge set of G(N_n, p) as sorted universe-index pairs (u < v).
///
/// Draws E ~ Binomial(M, p) with M = N_n (N_n - 1) / 2, then E distinct pair
/// ranks uniformly, then unranks each with unrank_pair. This has the same law
/// as M independent Bernoulli(p) trials.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_er_edges(const ErTrialConfig& cfg);

ReactionNetwork sample_er_network(const ErTrialConfig& cfg);

/// N_n - |C|: universe vertices not used by the (binary) network.
std::uint64_t count_isolated(const ReactionNetwork& net);

/// Uniform k-paired network: k disjoint random vertex pairs of C0_n, each a
/// reversible reaction. Throws DomainError when 2k > N_n.
ReactionNetwork sample_k_paired(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Vertex pairs behind sample_k_paired, in draw order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_k_pairing(std::uint32_t n, std::uint32_t k,
                                                                      std::uint64_t seed);

/// A column with exactly four non-zeros: rows (0-based, ascending) and their signs.
struct DnColumn {
    std::array<std::uint32_t, 4> rows{};
    std::array<std::int8_t, 4> signs{};

    bool operator==(const DnColumn&) const = default;
};

/// n x k matrix of four-sparse +-1 columns (two +1, two -1 each), distinct supports.
class DnMatrix {
public:
    enum class Supports { Distinct, AllowRepeated };

    /// Throws DomainError if any column violates the shape invariants, or if
    /// two columns share a support and `supports` is Distinct.
    DnMatrix(std::uint32_t n, std::vector<DnColumn> columns, Supports supports = Supports::Distinct);

    std::uint32_t rows() const { return n_; }
    std::size_t cols() const { return columns_.size(); }
    const std::vector<DnColumn>& columns() const { return columns_; }

    IntMatrix dense() const;

private:
    std::uint32_t n_;
    std::vector<DnColumn> columns_;
};

/// k distinct 4-subsets of {1..n} uniformly without replacement. The partner
/// of the smallest index is chosen uniformly among the other three; that pair
/// is +1 and the remaining pair -1.
DnMatrix sample_dn_matrix(std::uint32_t n, std::uint64_t k, std::uint64_t seed);

/// Exact rank equals the number of columns.
bool is_columns_independent(const DnMatrix& m);

} // namespace defzero
