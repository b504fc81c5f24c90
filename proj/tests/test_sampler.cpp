#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defzero/errors.hpp"
#include "defzero/sampler.hpp"
#include "fixtures.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace defzero;

namespace {

// Chi-square critical values at the 1e-3 level.
constexpr double kChi2Df2 = 13.816;
constexpr double kChi2Df7 = 24.322;
constexpr double kChi2Df14 = 36.123;

double chi_square(const std::vector<double>& observed, const std::vector<double>& expected)
{
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i)
        stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
    return stat;
}

// Reference sampler: one Bernoulli draw per vertex pair.
std::uint64_t naive_edge_mask(std::uint32_t n, double p, Rng& rng)
{
    const auto pairs = pair_count(universe_size(n));
    std::uint64_t mask = 0;
    for (std::uint64_t r = 0; r < pairs; ++r)
        if (rng.bernoulli(p))
            mask |= std::uint64_t{1} << r;
    return mask;
}

std::uint64_t edge_mask(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges)
{
    std::uint64_t mask = 0;
    for (auto [u, v] : edges)
        mask |= std::uint64_t{1} << rank_pair(u, v);
    return mask;
}

} // namespace

TEST_CASE("pair ranking")
{
    CHECK(unrank_pair(0) == std::pair<std::uint64_t, std::uint64_t>{0, 1});
    CHECK(unrank_pair(1) == std::pair<std::uint64_t, std::uint64_t>{0, 2});
    CHECK(unrank_pair(2) == std::pair<std::uint64_t, std::uint64_t>{1, 2});
    CHECK(unrank_pair(3) == std::pair<std::uint64_t, std::uint64_t>{0, 3});
    for (std::uint64_t r = 0; r < 200000; r += 7) {
        auto [u, v] = unrank_pair(r);
        REQUIRE(u < v);
        REQUIRE(rank_pair(u, v) == r);
    }
    const std::uint64_t huge = pair_count(3'000'000'000ull) - 1;
    auto [u, v] = unrank_pair(huge);
    CHECK(rank_pair(u, v) == huge);
    CHECK(v == 2'999'999'999ull);
}

TEST_CASE("binomial sampler moments")
{
    Rng rng(3);
    for (double p : {0.001, 0.3, 0.8}) {
        const std::uint64_t m = 2000;
        const int draws = 4000;
        double sum = 0, sum_sq = 0;
        for (int i = 0; i < draws; ++i) {
            const auto x = static_cast<double>(sample_binomial(rng, m, p));
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / draws;
        const double var = sum_sq / draws - mean * mean;
        const double expected_var = m * p * (1 - p);
        CHECK(std::abs(mean - m * p) < 4.0 * std::sqrt(expected_var / draws) + 1e-9);
        CHECK(var == doctest::Approx(expected_var).epsilon(0.15));
    }
    CHECK(sample_binomial(rng, 10, 0.0) == 0);
    CHECK(sample_binomial(rng, 10, 1.0) == 10);
    CHECK(sample_binomial(rng, 0, 0.5) == 0);
}

TEST_CASE("distinct selection")
{
    Rng rng(8);
    for (std::uint64_t count : {0ull, 1ull, 5ull, 60ull, 99ull, 100ull}) {
        const auto v = sample_distinct(rng, 100, count);
        CHECK(v.size() == count);
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        if (!v.empty())
            CHECK(v.back() < 100);
    }
    CHECK_THROWS_AS(sample_distinct(rng, 3, 4), DomainError);
}

TEST_CASE("ER sampler extremes")
{
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        CHECK(sample_er_network({3, 0.0, seed}).empty());
        const auto full = sample_er_network({3, 1.0, seed});
        CHECK(full.vertices().size() == universe_size(3));
        CHECK(full.reaction_count() == 2 * pair_count(universe_size(3)));
        CHECK(count_isolated(full) == 0);
    }
    CHECK_THROWS_AS(sample_er_network({2, 1.5, 0}), DomainError);
    CHECK_THROWS_AS(sample_er_network({2, -0.1, 0}), DomainError);
    CHECK_THROWS_AS(sample_er_network({0, 0.1, 0}), DomainError);
}

TEST_CASE("ER sampler is deterministic per seed")
{
    const ErTrialConfig cfg{6, 0.01, 1234};
    CHECK(sample_er_edges(cfg) == sample_er_edges(cfg));
    CHECK(sample_er_network(cfg) == sample_er_network(cfg));
    CHECK(sample_er_edges({6, 0.05, 1}) != sample_er_edges({6, 0.05, 2}));
}

TEST_CASE("ER edge count mean, n = 2, p = 0.1")
{
    const int draws = 10000;
    double sum = 0;
    for (int s = 0; s < draws; ++s)
        sum += static_cast<double>(sample_er_edges({2, 0.1, derive_seed(42, s)}).size());
    const double se = std::sqrt(15 * 0.1 * 0.9 / draws);
    CHECK(std::abs(sum / draws - 1.5) < 3 * se);
}

TEST_CASE("sparse sampler matches per-pair Bernoulli in law, n = 1")
{
    const int draws = 100000;
    for (double p : {0.2, 0.5}) {
        std::vector<double> sparse(8, 0), naive(8, 0), expected(8, 0);
        Rng naive_rng(derive_seed(5, static_cast<std::uint64_t>(p * 100)));
        for (int s = 0; s < draws; ++s) {
            sparse[edge_mask(sample_er_edges({1, p, derive_seed(17, s)}))] += 1;
            naive[naive_edge_mask(1, p, naive_rng)] += 1;
        }
        for (int mask = 0; mask < 8; ++mask) {
            const int e = __builtin_popcount(mask);
            expected[mask] = draws * std::pow(p, e) * std::pow(1 - p, 3 - e);
        }
        CHECK(chi_square(sparse, expected) < kChi2Df7);
        CHECK(chi_square(naive, expected) < kChi2Df7);
        // Two-sample homogeneity between the samplers.
        double two_sample = 0;
        for (int mask = 0; mask < 8; ++mask)
            two_sample += (sparse[mask] - naive[mask]) * (sparse[mask] - naive[mask]) / (sparse[mask] + naive[mask]);
        CHECK(two_sample < kChi2Df7);
    }
}

TEST_CASE("count_isolated")
{
    CHECK(count_isolated(ReactionNetwork(2)) == 6);
    CHECK(count_isolated(testing::two_paired_network()) == 2);
}

TEST_CASE("k-paired sampler structure")
{
    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(15));
        const auto k = static_cast<std::uint32_t>(rng.below(universe_size(n) / 2 + 1));
        const auto net = sample_k_paired(n, k, rng());
        CHECK(net.vertices().size() == 2ull * k);
        CHECK(is_paired(net) == PairedStatus{true, k});
    }
    CHECK(sample_k_paired(5, 0, 1).empty());
    CHECK_THROWS_AS(sample_k_paired(1, 2, 0), DomainError);
    CHECK_NOTHROW(sample_k_paired(1, 1, 0));
}

TEST_CASE("k-paired sampler is uniform")
{
    const int draws = 100000;
    // n = 1: three possible single pairs.
    {
        std::vector<double> counts(3, 0);
        for (int s = 0; s < draws; ++s) {
            auto [u, v] = sample_k_pairing(1, 1, derive_seed(3, s)).front();
            counts[rank_pair(u, v)] += 1;
        }
        for (double c : counts)
            CHECK(std::abs(c / draws - 1.0 / 3.0) < 3 * std::sqrt((1.0 / 3) * (2.0 / 3) / draws));
        CHECK(chi_square(counts, std::vector<double>(3, draws / 3.0)) < kChi2Df2);
    }
    // n = 2: fifteen possible single pairs.
    {
        std::vector<double> counts(15, 0);
        for (int s = 0; s < draws; ++s) {
            auto [u, v] = sample_k_pairing(2, 1, derive_seed(4, s)).front();
            counts[rank_pair(u, v)] += 1;
        }
        CHECK(chi_square(counts, std::vector<double>(15, draws / 15.0)) < kChi2Df14);
    }
    // n = 1 has N = 3, so k = 1 is the largest pairing; for n = 2, k = 2 gives 45 pairings.
    {
        std::map<std::set<std::pair<std::uint64_t, std::uint64_t>>, double> counts;
        for (int s = 0; s < 45000; ++s) {
            std::set<std::pair<std::uint64_t, std::uint64_t>> key;
            for (auto [u, v] : sample_k_pairing(2, 2, derive_seed(6, s)))
                key.insert({std::min(u, v), std::max(u, v)});
            counts[key] += 1;
        }
        // 6! / (2! 2^2 2!) = 45 two-paired graphs on six vertices.
        CHECK(counts.size() == 45);
        std::vector<double> observed;
        for (auto& [_, c] : counts)
            observed.push_back(c);
        // df = 44, critical value at 1e-3.
        CHECK(chi_square(observed, std::vector<double>(45, 1000.0)) < 78.75);
    }
}

TEST_CASE("four-species paired reactions have the D_n sign structure")
{
    Rng rng(12);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        const auto net = sample_k_paired(12, 3, rng());
        for (const Edge& e : net.edges()) {
            const auto v = reaction_vector(net, e);
            int plus = 0, minus = 0, other = 0;
            for (auto x : v) {
                plus += x == 1;
                minus += x == -1;
                other += x != 0 && x != 1 && x != -1;
            }
            if (plus + minus + other == 4) {
                CHECK(other == 0);
                CHECK(plus == 2);
                CHECK(minus == 2);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("D_n matrix sampling")
{
    const auto one = sample_dn_matrix(4, 1, 0);
    REQUIRE(one.cols() == 1);
    CHECK(one.columns()[0].rows == std::array<std::uint32_t, 4>{0, 1, 2, 3});

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto m = sample_dn_matrix(10, 2, seed);
        CHECK(m.columns()[0].rows != m.columns()[1].rows);
        for (const auto& c : m.columns()) {
            int sum = 0, nonzero = 0;
            for (auto s : c.signs) {
                sum += s;
                nonzero += s != 0;
            }
            CHECK(sum == 0);
            CHECK(nonzero == 4);
        }
    }
    const auto all = sample_dn_matrix(7, 35, 3);
    CHECK(all.cols() == 35);
    CHECK_THROWS_AS(sample_dn_matrix(7, 36, 3), DomainError);
    CHECK_THROWS_AS(sample_dn_matrix(3, 1, 3), DomainError);
}

TEST_CASE("D_n supports and sign pairings are uniform")
{
    const int draws = 30000;
    std::vector<double> supports(5, 0);
    std::vector<double> partner(3, 0);
    for (int s = 0; s < draws; ++s) {
        const auto c = sample_dn_matrix(5, 1, derive_seed(9, s)).columns()[0];
        // The missing row identifies the support among the five 4-subsets.
        std::uint32_t missing = 0 + 1 + 2 + 3 + 4;
        for (auto r : c.rows)
            missing -= r;
        supports[missing] += 1;
        for (std::size_t i = 1; i < 4; ++i)
            if (c.signs[i] == c.signs[0])
                partner[i - 1] += 1;
    }
    CHECK(chi_square(supports, std::vector<double>(5, draws / 5.0)) < 18.467); // df = 4
    CHECK(chi_square(partner, std::vector<double>(3, draws / 3.0)) < kChi2Df2);
}

TEST_CASE("D_n column independence")
{
    CHECK(is_columns_independent(sample_dn_matrix(6, 1, 1)));
    const DnColumn col{{0, 1, 2, 3}, {1, 1, -1, -1}};
    const DnMatrix twice(6, {col, col}, DnMatrix::Supports::AllowRepeated);
    CHECK_FALSE(is_columns_independent(twice));
    CHECK_THROWS_AS(DnMatrix(6, {col, col}), DomainError);
    CHECK_FALSE(is_columns_independent(sample_dn_matrix(8, 9, 2)));
    CHECK_THROWS_AS(DnMatrix(6, {DnColumn{{0, 1, 2, 3}, {1, 1, 1, -1}}}), DomainError);
    CHECK_THROWS_AS(DnMatrix(3, {col}), DomainError);
}

TEST_CASE("seed derivation")
{
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 123) == derive_seed(7, 123));
    Rng a(5), b(5);
    for (int i = 0; i < 10; ++i)
        CHECK(a() == b());
}
