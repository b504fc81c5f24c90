#pragma once

#include "defzero/complex_space.hpp"
#include "defzero/composition.hpp"
#include "defzero/rank.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace defzero {

/// A directed reaction source -> product between distinct complexes.
struct Reaction {
    Composition source;
    Composition product;

    Reaction() = default;
    Reaction(Composition s, Composition p) : source(std::move(s)), product(std::move(p)) {}
    Reaction(const Complex& s, const Complex& p)
        : source(Composition::from_complex(s)), product(Composition::from_complex(p))
    {
    }

    Reaction reversed() const { return {product, source}; }

    bool operator==(const Reaction&) const = default;
};

/// Directed edge between vertex indices of a ReactionNetwork.
struct Edge {
    std::uint32_t source;
    std::uint32_t product;

    auto operator<=>(const Edge&) const = default;
};

/// An immutable reaction network {S, C, R}.
///
/// Vertices are exactly the complexes that occur in some reaction, kept in
/// canonical order; reactions are kept sorted by (source index, product
/// index). The empty reaction set gives the empty network.
class ReactionNetwork {
public:
    /// Throws DomainError on a self-reaction, a duplicate reaction, or a
    /// species id outside 1..species_count.
    ReactionNetwork(std::uint32_t species_count, std::vector<Reaction> reactions);

    /// Empty network on species_count species.
    explicit ReactionNetwork(std::uint32_t species_count = 0) : n_(species_count) {}

    std::uint32_t species_count() const { return n_; }
    std::span<const Composition> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t reaction_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    Reaction reaction(std::size_t i) const;
    std::vector<Reaction> reactions() const;

    bool contains(const Reaction& r) const;

    /// Every complex has molecularity at most two.
    bool is_binary() const;

    /// Same network with every reaction direction flipped.
    ReactionNetwork reversed() const;

    bool operator==(const ReactionNetwork&) const = default;

private:
    std::uint32_t n_ = 0;
    std::vector<Composition> vertices_;
    std::vector<Edge> edges_;
};

struct ComponentReport {
    std::size_t complex_count = 0;
    std::size_t rank = 0;
    std::size_t deficiency = 0;

    bool operator==(const ComponentReport&) const = default;
};

struct DeficiencyReport {
    std::size_t num_complexes = 0;
    std::size_t num_components = 0;
    std::size_t rank = 0;
    std::size_t deficiency = 0;
    std::vector<ComponentReport> components;
    bool is_paired = true;

    bool operator==(const DeficiencyReport&) const = default;
};

/// Connected components of the undirected support graph as lists of vertex
/// indices. Components are ordered by their smallest vertex index, members
/// ascending.
std::vector<std::vector<std::uint32_t>> connected_components(const ReactionNetwork& net);

/// Reaction vector product - source as a dense vector of length n.
std::vector<std::int64_t> reaction_vector(const ReactionNetwork& net, const Edge& e);

/// Stoichiometric matrix: one row per species, one column per directed reaction.
IntMatrix stoich_matrix(const ReactionNetwork& net);

/// Dimension of the stoichiometric subspace.
std::size_t stoich_rank(const ReactionNetwork& net);

DeficiencyReport deficiency(const ReactionNetwork& net);

/// deficiency(net).deficiency == 0, skipping the rank work when
/// |C| > 2n already rules it out.
bool has_deficiency_zero(const ReactionNetwork& net);

struct PairedStatus {
    bool paired = true;
    std::size_t components = 0;

    bool operator==(const PairedStatus&) const = default;
};

/// paired iff every component has exactly two vertices; components = l.
PairedStatus is_paired(const ReactionNetwork& net);

/// For a paired network: whether one reaction vector per component is a
/// linearly independent set (equivalent to deficiency zero).
/// Throws ContractError if the network is not paired.
bool paired_def_zero(const ReactionNetwork& net);

/// New network with r added. Throws DomainError if r is already present or is
/// a self-reaction.
ReactionNetwork add_reaction(const ReactionNetwork& net, const Reaction& r);

/// Network of an undirected graph on the complex universe C0_n: every edge
/// {u, v} becomes the reversible pair u -> v, v -> u. Repeated edges collapse.
/// Throws RangeError for an index >= N_n and DomainError for a self-pair.
ReactionNetwork from_edge_list(std::uint32_t n, std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

} // namespace defzero
