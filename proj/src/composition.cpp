#include "defzero/composition.hpp"

#include "defzero/errors.hpp"

#include <algorithm>

namespace defzero {

Composition Composition::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.species < b.species; });
    Composition out;
    for (const Term& t : terms) {
        if (t.species == 0)
            throw DomainError("species ids are 1-based");
        if (t.count == 0)
            continue;
        if (!out.terms_.empty() && out.terms_.back().species == t.species)
            out.terms_.back().count += t.count;
        else
            out.terms_.push_back(t);
    }
    return out;
}

Composition Composition::from_complex(const Complex& c)
{
    Composition out;
    switch (c.kind()) {
    case Complex::Kind::ZeroOrder:
        break;
    case Complex::Kind::Unary:
        out.terms_.push_back({c.first().value, 1});
        break;
    case Complex::Kind::Binary:
        if (c.first() == c.second()) {
            out.terms_.push_back({c.first().value, 2});
        } else {
            out.terms_.push_back({c.first().value, 1});
            out.terms_.push_back({c.second().value, 1});
        }
        break;
    }
    return out;
}

std::uint64_t Composition::molecularity() const
{
    std::uint64_t m = 0;
    for (const Term& t : terms_)
        m += t.count;
    return m;
}

std::strong_ordering canonical_compare(const Composition& a, const Composition& b)
{
    if (auto c = a.molecularity() <=> b.molecularity(); c != 0)
        return c;
    if (auto c = a.terms().size() <=> b.terms().size(); c != 0)
        return c;

    // Walk both expanded species sequences (S_i repeated count times) in step.
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t ia = 0, ib = 0;
    std::uint32_t used_a = 0, used_b = 0;
    while (ia < ta.size() && ib < tb.size()) {
        if (auto c = ta[ia].species <=> tb[ib].species; c != 0)
            return c;
        if (++used_a == ta[ia].count) {
            ++ia;
            used_a = 0;
        }
        if (++used_b == tb[ib].count) {
            ++ib;
            used_b = 0;
        }
    }
    return std::strong_ordering::equal;
}

} // namespace defzero
