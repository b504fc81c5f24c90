#include "defzero/network.hpp"

#include "defzero/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace defzero {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

void check_species(const Composition& c, std::uint32_t n)
{
    if (c.max_species() > n)
        throw DomainError("complex references species S" + std::to_string(c.max_species()) + " but the network has " +
                          std::to_string(n) + " species");
}

/// Rank of the reaction vectors of the given edges, each undirected pair counted once.
std::size_t rank_of_edges(const ReactionNetwork& net, std::vector<Edge> edges)
{
    for (Edge& e : edges)
        if (e.source > e.product)
            std::swap(e.source, e.product);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty())
        return 0;

    // Columns only for species that actually occur.
    auto verts = net.vertices();
    std::vector<std::uint32_t> species;
    for (const Edge& e : edges)
        for (std::uint32_t v : {e.source, e.product})
            for (const auto& t : verts[v].terms())
                species.push_back(t.species);
    std::sort(species.begin(), species.end());
    species.erase(std::unique(species.begin(), species.end()), species.end());
    auto column = [&](std::uint32_t s) {
        return static_cast<std::size_t>(std::lower_bound(species.begin(), species.end(), s) - species.begin());
    };

    IntMatrix m(edges.size(), species.size());
    for (std::size_t r = 0; r < edges.size(); ++r) {
        for (const auto& t : verts[edges[r].product].terms())
            m(r, column(t.species)) += t.count;
        for (const auto& t : verts[edges[r].source].terms())
            m(r, column(t.species)) -= t.count;
    }
    return exact_rank(m);
}

} // namespace

ReactionNetwork::ReactionNetwork(std::uint32_t species_count, std::vector<Reaction> reactions) : n_(species_count)
{
    vertices_.reserve(reactions.size() * 2);
    for (const Reaction& r : reactions) {
        check_species(r.source, n_);
        check_species(r.product, n_);
        if (r.source == r.product)
            throw DomainError("a complex cannot be both source and product of one reaction");
        vertices_.push_back(r.source);
        vertices_.push_back(r.product);
    }
    std::sort(vertices_.begin(), vertices_.end(), CanonicalLess{});
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    auto index_of = [&](const Composition& c) {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c, CanonicalLess{});
        return static_cast<std::uint32_t>(it - vertices_.begin());
    };
    edges_.reserve(reactions.size());
    for (const Reaction& r : reactions)
        edges_.push_back({index_of(r.source), index_of(r.product)});
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("duplicate reaction");
}

Reaction ReactionNetwork::reaction(std::size_t i) const
{
    if (i >= edges_.size())
        throw RangeError("reaction index out of range");
    return {vertices_[edges_[i].source], vertices_[edges_[i].product]};
}

std::vector<Reaction> ReactionNetwork::reactions() const
{
    std::vector<Reaction> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_)
        out.emplace_back(vertices_[e.source], vertices_[e.product]);
    return out;
}

bool ReactionNetwork::contains(const Reaction& r) const
{
    auto find = [&](const Composition& c) -> std::optional<std::uint32_t> {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c, CanonicalLess{});
        if (it == vertices_.end() || !(*it == c))
            return std::nullopt;
        return static_cast<std::uint32_t>(it - vertices_.begin());
    };
    auto s = find(r.source);
    auto p = find(r.product);
    if (!s || !p)
        return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge{*s, *p});
}

bool ReactionNetwork::is_binary() const
{
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Composition& c) { return c.molecularity() <= 2; });
}

ReactionNetwork ReactionNetwork::reversed() const
{
    ReactionNetwork out = *this;
    for (Edge& e : out.edges_)
        std::swap(e.source, e.product);
    std::sort(out.edges_.begin(), out.edges_.end());
    return out;
}

std::vector<std::vector<std::uint32_t>> connected_components(const ReactionNetwork& net)
{
    const auto nv = net.vertices().size();
    DisjointSets sets(nv);
    for (const Edge& e : net.edges())
        sets.unite(e.source, e.product);

    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<std::int64_t> slot(nv, -1);
    for (std::uint32_t v = 0; v < nv; ++v) {
        const auto root = sets.find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::int64_t>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[root])].push_back(v);
    }
    return comps;
}

std::vector<std::int64_t> reaction_vector(const ReactionNetwork& net, const Edge& e)
{
    std::vector<std::int64_t> v(net.species_count(), 0);
    for (const auto& t : net.vertices()[e.product].terms())
        v[t.species - 1] += t.count;
    for (const auto& t : net.vertices()[e.source].terms())
        v[t.species - 1] -= t.count;
    return v;
}

IntMatrix stoich_matrix(const ReactionNetwork& net)
{
    IntMatrix m(net.species_count(), net.reaction_count());
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        auto v = reaction_vector(net, net.edges()[j]);
        for (std::size_t i = 0; i < v.size(); ++i)
            m(i, j) = v[i];
    }
    return m;
}

std::size_t stoich_rank(const ReactionNetwork& net)
{
    auto edges = net.edges();
    return rank_of_edges(net, {edges.begin(), edges.end()});
}

DeficiencyReport deficiency(const ReactionNetwork& net)
{
    DeficiencyReport report;
    const auto comps = connected_components(net);
    report.num_complexes = net.vertices().size();
    report.num_components = comps.size();
    report.rank = stoich_rank(net);
    report.deficiency = report.num_complexes - report.num_components - report.rank;

    std::vector<std::uint32_t> comp_of(net.vertices().size());
    for (std::uint32_t c = 0; c < comps.size(); ++c)
        for (std::uint32_t v : comps[c])
            comp_of[v] = c;
    std::vector<std::vector<Edge>> comp_edges(comps.size());
    for (const Edge& e : net.edges())
        comp_edges[comp_of[e.source]].push_back(e);

    report.components.reserve(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        ComponentReport cr;
        cr.complex_count = comps[c].size();
        cr.rank = rank_of_edges(net, std::move(comp_edges[c]));
        cr.deficiency = cr.complex_count - 1 - cr.rank;
        report.components.push_back(cr);
        if (cr.complex_count != 2)
            report.is_paired = false;
    }
    return report;
}

bool has_deficiency_zero(const ReactionNetwork& net)
{
    if (net.vertices().size() > 2ull * net.species_count())
        return false;
    return deficiency(net).deficiency == 0;
}

PairedStatus is_paired(const ReactionNetwork& net)
{
    const auto comps = connected_components(net);
    const bool paired = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 2; });
    return {paired, comps.size()};
}

bool paired_def_zero(const ReactionNetwork& net)
{
    const auto comps = connected_components(net);
    if (!std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 2; }))
        throw ContractError("paired_def_zero requires a paired network");

    // In a paired network each component is one undirected edge; pick one
    // directed reaction per component.
    std::vector<std::uint32_t> comp_of(net.vertices().size());
    for (std::uint32_t c = 0; c < comps.size(); ++c)
        for (std::uint32_t v : comps[c])
            comp_of[v] = c;
    std::vector<bool> taken(comps.size(), false);
    std::vector<Edge> chosen;
    for (const Edge& e : net.edges()) {
        const auto c = comp_of[e.source];
        if (!taken[c]) {
            taken[c] = true;
            chosen.push_back(e);
        }
    }
    return rank_of_edges(net, std::move(chosen)) == comps.size();
}

ReactionNetwork add_reaction(const ReactionNetwork& net, const Reaction& r)
{
    if (r.source == r.product)
        throw DomainError("a complex cannot be both source and product of one reaction");
    if (net.contains(r))
        throw DomainError("reaction already present in the network");
    auto reactions = net.reactions();
    reactions.push_back(r);
    return ReactionNetwork(net.species_count(), std::move(reactions));
}

ReactionNetwork from_edge_list(std::uint32_t n, std::span<const std::pair<std::uint64_t, std::uint64_t>> edges)
{
    const ComplexUniverse universe(n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= universe.size() || v >= universe.size())
            throw RangeError("edge endpoint out of range for n=" + std::to_string(n));
        if (u == v)
            throw DomainError("self-pair {" + std::to_string(u) + "," + std::to_string(u) + "} is not an edge");
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<Reaction> reactions;
    reactions.reserve(pairs.size() * 2);
    for (auto [u, v] : pairs) {
        Reaction r(universe.at(u), universe.at(v));
        reactions.push_back(r.reversed());
        reactions.push_back(std::move(r));
    }
    return ReactionNetwork(n, std::move(reactions));
}

} // namespace defzero
