#pragma once

#include "defzero/complex_space.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace defzero {

/// A complex of arbitrary molecularity, stored as sparse (species, count)
/// terms sorted by species with no zero counts.
///
/// Binary complexes from the ER model and general complexes read from network
/// files share this representation inside ReactionNetwork.
class Composition {
public:
    struct Term {
        std::uint32_t species; // 1-based
        std::uint32_t count;

        bool operator==(const Term&) const = default;
    };

    Composition() = default;

    /// Merges repeated species and drops zero counts.
    static Composition from_terms(std::vector<Term> terms);
    static Composition from_complex(const Complex& c);

    std::span<const Term> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::uint64_t molecularity() const;
    std::uint32_t max_species() const { return terms_.empty() ? 0 : terms_.back().species; }

    bool operator==(const Composition&) const = default;

private:
    std::vector<Term> terms_;
};

/// Canonical vertex order: molecularity, then number of distinct species,
/// then the expanded sorted species sequence lexicographically. Restricted to
/// binary complexes this is exactly the ComplexUniverse index order.
std::strong_ordering canonical_compare(const Composition& a, const Composition& b);

struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const { return canonical_compare(a, b) < 0; }
};

} // namespace defzero
