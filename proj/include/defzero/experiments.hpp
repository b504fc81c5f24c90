#pragma once

#include "defzero/network.hpp"
#include "defzero/sampler.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace defzero {

/// Parallelism for trial loops. Results never depend on `threads`.
struct ExecutionOptions {
    unsigned threads = 1;
};

/// One Monte Carlo estimate with its 95% Wilson interval.
struct EstimateRow {
    std::uint32_t n = 0;
    double p = 0.0;
    /// Set for experiments parameterised by a component/column count instead of p.
    std::optional<std::uint64_t> k;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double wall_time_ms = 0.0;
};

EstimateRow make_estimate_row(std::uint32_t n, double p, std::uint64_t trials, std::uint64_t successes);

/// Runs trial(derive_seed(master_seed, i)) for every i < trials and counts true
/// results. Work is split across threads but the count is schedule-independent.
std::uint64_t count_successes(std::uint64_t trials, std::uint64_t master_seed, ExecutionOptions opts,
                              const std::function<bool(std::uint64_t trial_seed)>& trial);

struct TrialOutcome {
    bool conditioned = false;
    bool success = false;
};

struct ConditionalCount {
    std::uint64_t conditioning_events = 0;
    std::uint64_t successes = 0;
};

ConditionalCount count_conditional(std::uint64_t trials, std::uint64_t master_seed, ExecutionOptions opts,
                                   const std::function<TrialOutcome(std::uint64_t trial_seed)>& trial);

/// P(deficiency zero) under G(N_n, p); cfg.seed is the master seed.
EstimateRow estimate_def_zero_prob(const ErTrialConfig& cfg, std::uint64_t trials, ExecutionOptions opts = {});

/// For n in {1, 2}: entry E is the number of graphs on C0_n with E edges whose
/// network has deficiency zero (exhaustive over all 2^M edge sets).
const std::vector<std::uint64_t>& def_zero_counts_by_edges(std::uint32_t n);

/// Exact P(deficiency zero) for n in {1, 2}; throws UnsupportedError otherwise.
double exact_def_zero_prob_small(std::uint32_t n, double p);

/// Threshold sweep with p_n = min(1, c n^-beta).
struct SweepSpec {
    std::vector<std::uint32_t> n_grid;
    double c = 1.0;
    double beta = 3.0;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;

    void validate() const;
    double p_for(std::uint32_t n) const;
    /// Master seed of the row for n; shared across c and beta so curves are coupled.
    std::uint64_t row_seed(std::uint32_t n) const;
};

/// One row per n, ordered by n.
std::vector<EstimateRow> sweep_threshold(const SweepSpec& spec, ExecutionOptions opts = {});

/// p = (2n + alpha) / (N_n (N_n - 1)), clamped to 1; alpha must be positive.
struct IsolatedTailSpec {
    std::uint32_t n = 1;
    double alpha = 1.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    double p() const;
};

/// Estimates P(|I| >= N_n - 2n).
EstimateRow estimate_isolated_tail(const IsolatedTailSpec& spec, ExecutionOptions opts = {});

/// Number of non-zero entries of the reaction vector of `e`.
std::size_t reaction_support_size(const ReactionNetwork& net, const Edge& e);

/// Every reaction vector of the network has exactly four non-zero entries.
bool all_reactions_four_species(const ReactionNetwork& net);

/// Fraction of uniform k-paired networks in which every reaction touches four species.
EstimateRow estimate_four_species_given_paired(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                               std::uint64_t seed, ExecutionOptions opts = {});

/// Fraction of random D_n matrices with k columns whose columns are independent.
EstimateRow estimate_matrix_independence(std::uint32_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed,
                                         ExecutionOptions opts = {});

/// Conditioned on a non-empty network with deficiency zero: is it paired?
TrialOutcome classify_paired_given_def_zero(const ReactionNetwork& net);

struct ConditionalEstimate {
    std::uint64_t trials = 0;
    std::uint64_t conditioning_events = 0;
    /// Absent when no trial met the condition; the estimate is then undefined.
    std::optional<EstimateRow> row;
};

ConditionalEstimate estimate_paired_given_def_zero(const ErTrialConfig& cfg, std::uint64_t trials,
                                                   ExecutionOptions opts = {});

} // namespace defzero
