#pragma once

#include "defzero/netparse.hpp"
#include "defzero/network.hpp"
#include "defzero/sampler.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace defzero::testing {

inline const char* const kEnzymeKinetics = "S + E <-> SE\n"
                                           "SE <-> P + E\n"
                                           "E <-> 0\n"
                                           "0 <-> S\n";

inline const char* const kThreePaired = "S1 + S2 <-> S3 + S4\n"
                                        "S1 + S3 <-> S5 + S6\n"
                                        "S6 + S7 <-> S8 + S9\n";

inline Complex sp(std::uint32_t a) { return Complex::unary(SpeciesId{a}); }
inline Complex sp2(std::uint32_t a, std::uint32_t b) { return Complex::binary(SpeciesId{a}, SpeciesId{b}); }

/// 0 -> S1 + S2 -> S2 -> 0, 2S1 <-> 2S2.
inline ReactionNetwork two_species_network()
{
    return ReactionNetwork(2, {
                                  {Complex::zero(), sp2(1, 2)},
                                  {sp2(1, 2), sp(2)},
                                  {sp(2), Complex::zero()},
                                  {sp2(1, 1), sp2(2, 2)},
                                  {sp2(2, 2), sp2(1, 1)},
                              });
}

/// 0 <-> 2B, B <-> A + B on species {A, B}.
inline ReactionNetwork two_paired_network()
{
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> edges = {
        {complex_to_index(2, Complex::zero()), complex_to_index(2, sp2(2, 2))},
        {complex_to_index(2, sp(2)), complex_to_index(2, sp2(1, 2))},
    };
    return from_edge_list(2, edges);
}

inline ReactionNetwork parse(const std::string& text)
{
    return to_reaction_network(parse_network(text));
}

/// Random ER network with 1 <= n <= max_n and a density spread from very
/// sparse to a few edges per species.
inline ReactionNetwork random_er_network(Rng& rng, std::uint32_t max_n)
{
    const auto n = static_cast<std::uint32_t>(1 + rng.below(max_n));
    const double vertices = static_cast<double>(universe_size(n));
    const double target_edges = rng.uniform() * 3.0 * n + 0.5;
    const double p = std::min(1.0, target_edges / (vertices * (vertices - 1.0) / 2.0));
    return sample_er_network({n, p, rng()});
}

inline ReactionNetwork random_paired_network(Rng& rng, std::uint32_t max_n)
{
    const auto n = static_cast<std::uint32_t>(1 + rng.below(max_n));
    const auto max_k = std::min<std::uint64_t>(universe_size(n) / 2, n + 2);
    const auto k = static_cast<std::uint32_t>(rng.below(max_k + 1));
    return sample_k_paired(n, k, rng());
}

/// A random binary reaction on C0_n that is not yet in the network, or
/// nullopt when every directed pair is already present.
inline std::optional<Reaction> random_new_reaction(Rng& rng, const ReactionNetwork& net)
{
    const std::uint32_t n = net.species_count();
    const ComplexUniverse u(n);
    if (net.reaction_count() >= u.size() * (u.size() - 1))
        return std::nullopt;
    for (;;) {
        const auto a = rng.below(u.size());
        const auto b = rng.below(u.size());
        if (a == b)
            continue;
        Reaction r(u.at(a), u.at(b));
        if (!net.contains(r))
            return r;
    }
}

} // namespace defzero::testing
