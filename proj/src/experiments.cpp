#include "defzero/experiments.hpp"

#include "defzero/errors.hpp"
#include "defzero/stats.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace defzero {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_trials(std::uint64_t trials)
{
    if (trials == 0)
        throw DomainError("trials must be at least 1");
}

// Calls body(i) for i in [0, count) over `threads` workers with a static
// interleaved split. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i)
            body(i, 0u);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::uint64_t i = t; i < count; i += threads)
                    body(i, t);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace

EstimateRow make_estimate_row(std::uint32_t n, double p, std::uint64_t trials, std::uint64_t successes)
{
    EstimateRow row;
    row.n = n;
    row.p = p;
    row.trials = trials;
    row.successes = successes;
    row.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    const Interval iv = wilson_interval(successes, trials);
    row.ci_low = iv.low;
    row.ci_high = iv.high;
    return row;
}

std::uint64_t count_successes(std::uint64_t trials, std::uint64_t master_seed, ExecutionOptions opts,
                              const std::function<bool(std::uint64_t)>& trial)
{
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<std::uint64_t> per_thread(threads, 0);
    parallel_for(trials, threads, [&](std::uint64_t i, unsigned t) {
        if (trial(derive_seed(master_seed, i)))
            ++per_thread[t];
    });
    std::uint64_t total = 0;
    for (auto c : per_thread)
        total += c;
    return total;
}

ConditionalCount count_conditional(std::uint64_t trials, std::uint64_t master_seed, ExecutionOptions opts,
                                   const std::function<TrialOutcome(std::uint64_t)>& trial)
{
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<ConditionalCount> per_thread(threads);
    parallel_for(trials, threads, [&](std::uint64_t i, unsigned t) {
        const TrialOutcome o = trial(derive_seed(master_seed, i));
        if (o.conditioned) {
            ++per_thread[t].conditioning_events;
            if (o.success)
                ++per_thread[t].successes;
        }
    });
    ConditionalCount total;
    for (const auto& c : per_thread) {
        total.conditioning_events += c.conditioning_events;
        total.successes += c.successes;
    }
    return total;
}

EstimateRow estimate_def_zero_prob(const ErTrialConfig& cfg, std::uint64_t trials, ExecutionOptions opts)
{
    require_trials(trials);
    cfg.validate();
    const auto start = Clock::now();
    const auto successes = count_successes(trials, cfg.seed, opts, [&](std::uint64_t seed) {
        return has_deficiency_zero(sample_er_network({cfg.n, cfg.p, seed}));
    });
    EstimateRow row = make_estimate_row(cfg.n, cfg.p, trials, successes);
    row.wall_time_ms = elapsed_ms(start);
    return row;
}

namespace {

std::vector<std::uint64_t> enumerate_def_zero_counts(std::uint32_t n)
{
    const std::uint64_t pairs = pair_count(universe_size(n));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
    for (std::uint64_t r = 0; r < pairs; ++r)
        all.push_back(unrank_pair(r));

    std::vector<std::uint64_t> counts(pairs + 1, 0);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        edges.clear();
        for (std::uint64_t r = 0; r < pairs; ++r)
            if (mask >> r & 1)
                edges.push_back(all[r]);
        if (deficiency(from_edge_list(n, edges)).deficiency == 0)
            ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
    return counts;
}

} // namespace

const std::vector<std::uint64_t>& def_zero_counts_by_edges(std::uint32_t n)
{
    if (n == 1) {
        static const auto counts = enumerate_def_zero_counts(1);
        return counts;
    }
    if (n == 2) {
        static const auto counts = enumerate_def_zero_counts(2);
        return counts;
    }
    throw UnsupportedError("exact enumeration is only available for n = 1 or n = 2 (2^M edge sets)");
}

double exact_def_zero_prob_small(std::uint32_t n, double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1]");
    const auto& counts = def_zero_counts_by_edges(n);
    const auto pairs = static_cast<int>(counts.size() - 1);
    double total = 0.0;
    for (int e = 0; e <= pairs; ++e)
        total += static_cast<double>(counts[static_cast<std::size_t>(e)]) * std::pow(p, e) * std::pow(1.0 - p, pairs - e);
    return total;
}

void SweepSpec::validate() const
{
    if (n_grid.empty())
        throw DomainError("sweep needs at least one n");
    for (auto n : n_grid)
        if (n < 1)
            throw DomainError("every n in the grid must be at least 1");
    if (!(c > 0.0) || !std::isfinite(c))
        throw DomainError("c must be a positive finite number");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError("beta must be a positive finite number");
    require_trials(trials);
}

double SweepSpec::p_for(std::uint32_t n) const
{
    return std::min(1.0, c * std::pow(static_cast<double>(n), -beta));
}

std::uint64_t SweepSpec::row_seed(std::uint32_t n) const
{
    return derive_seed(master_seed, n);
}

std::vector<EstimateRow> sweep_threshold(const SweepSpec& spec, ExecutionOptions opts)
{
    spec.validate();
    auto grid = spec.n_grid;
    std::sort(grid.begin(), grid.end());
    std::vector<EstimateRow> rows;
    rows.reserve(grid.size());
    for (auto n : grid)
        rows.push_back(estimate_def_zero_prob({n, spec.p_for(n), spec.row_seed(n)}, spec.trials, opts));
    return rows;
}

double IsolatedTailSpec::p() const
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("alpha must be a positive finite number");
    const double vertices = static_cast<double>(universe_size(n));
    const double p = (2.0 * n + alpha) / (vertices * (vertices - 1.0));
    return std::min(1.0, p);
}

EstimateRow estimate_isolated_tail(const IsolatedTailSpec& spec, ExecutionOptions opts)
{
    require_trials(spec.trials);
    const double p = spec.p();
    const std::uint64_t threshold = universe_size(spec.n) - 2ull * spec.n;
    const auto start = Clock::now();
    const auto successes = count_successes(spec.trials, spec.seed, opts, [&](std::uint64_t seed) {
        return count_isolated(sample_er_network({spec.n, p, seed})) >= threshold;
    });
    EstimateRow row = make_estimate_row(spec.n, p, spec.trials, successes);
    row.wall_time_ms = elapsed_ms(start);
    return row;
}

std::size_t reaction_support_size(const ReactionNetwork& net, const Edge& e)
{
    auto src = net.vertices()[e.source].terms();
    auto prod = net.vertices()[e.product].terms();
    // Merge the two sorted term lists; a species counts unless its counts cancel.
    std::size_t i = 0, j = 0, support = 0;
    while (i < src.size() || j < prod.size()) {
        if (j == prod.size() || (i < src.size() && src[i].species < prod[j].species)) {
            ++support;
            ++i;
        } else if (i == src.size() || prod[j].species < src[i].species) {
            ++support;
            ++j;
        } else {
            support += src[i].count != prod[j].count;
            ++i;
            ++j;
        }
    }
    return support;
}

bool all_reactions_four_species(const ReactionNetwork& net)
{
    const auto edges = net.edges();
    return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return reaction_support_size(net, e) == 4; });
}

EstimateRow estimate_four_species_given_paired(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                               std::uint64_t seed, ExecutionOptions opts)
{
    require_trials(trials);
    if (2ull * k > universe_size(n))
        throw DomainError("2k exceeds the number of complexes");
    const auto start = Clock::now();
    const auto successes = count_successes(trials, seed, opts, [&](std::uint64_t s) {
        return all_reactions_four_species(sample_k_paired(n, k, s));
    });
    EstimateRow row = make_estimate_row(n, 0.0, trials, successes);
    row.k = k;
    row.wall_time_ms = elapsed_ms(start);
    return row;
}

EstimateRow estimate_matrix_independence(std::uint32_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed,
                                         ExecutionOptions opts)
{
    require_trials(trials);
    if (n < 4)
        throw DomainError("D_n matrices need n >= 4");
    if (k > binomial_coefficient(n, 4))
        throw DomainError("k exceeds C(n, 4)");
    const auto start = Clock::now();
    const auto successes = count_successes(trials, seed, opts, [&](std::uint64_t s) {
        return is_columns_independent(sample_dn_matrix(n, k, s));
    });
    EstimateRow row = make_estimate_row(n, 0.0, trials, successes);
    row.k = k;
    row.wall_time_ms = elapsed_ms(start);
    return row;
}

TrialOutcome classify_paired_given_def_zero(const ReactionNetwork& net)
{
    if (net.empty() || !has_deficiency_zero(net))
        return {};
    return {true, is_paired(net).paired};
}

ConditionalEstimate estimate_paired_given_def_zero(const ErTrialConfig& cfg, std::uint64_t trials,
                                                   ExecutionOptions opts)
{
    require_trials(trials);
    cfg.validate();
    const auto start = Clock::now();
    const auto counts = count_conditional(trials, cfg.seed, opts, [&](std::uint64_t seed) {
        return classify_paired_given_def_zero(sample_er_network({cfg.n, cfg.p, seed}));
    });
    ConditionalEstimate out;
    out.trials = trials;
    out.conditioning_events = counts.conditioning_events;
    if (counts.conditioning_events > 0) {
        out.row = make_estimate_row(cfg.n, cfg.p, counts.conditioning_events, counts.successes);
        out.row->wall_time_ms = elapsed_ms(start);
    }
    return out;
}

} // namespace defzero
