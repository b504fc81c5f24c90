#include "defzero/complex_space.hpp"

#include "defzero/errors.hpp"

namespace defzero {

std::string Complex::to_string() const
{
    switch (kind_) {
    case Kind::ZeroOrder:
        return "0";
    case Kind::Unary:
        return "S" + std::to_string(a_.value);
    case Kind::Binary:
        if (a_ == b_)
            return "2 S" + std::to_string(a_.value);
        return "S" + std::to_string(a_.value) + " + S" + std::to_string(b_.value);
    }
    return {};
}

ComplexUniverse::ComplexUniverse(std::uint32_t n) : n_(n), size_(universe_size(n)) {}

Complex ComplexUniverse::at(std::uint64_t idx) const
{
    if (idx >= size_)
        throw RangeError("complex index " + std::to_string(idx) + " out of range for n=" + std::to_string(n_));
    if (idx == 0)
        return Complex::zero();
    if (idx <= n_)
        return Complex::unary(SpeciesId{static_cast<std::uint32_t>(idx)});
    if (idx <= 2ull * n_) {
        SpeciesId a{static_cast<std::uint32_t>(idx - n_)};
        return Complex::binary(a, a);
    }

    // Mixed pairs: row i holds S_i + S_j for j = i+1..n, i.e. n - i entries.
    std::uint64_t rank = idx - 1 - 2ull * n_;
    std::uint32_t i = 1;
    while (rank >= n_ - i) {
        rank -= n_ - i;
        ++i;
    }
    return Complex::binary(SpeciesId{i}, SpeciesId{static_cast<std::uint32_t>(i + 1 + rank)});
}

std::uint64_t ComplexUniverse::index_of(const Complex& c) const
{
    if (c.max_species() > n_ || (c.kind() != Complex::Kind::ZeroOrder && c.first().value == 0))
        throw DomainError("complex " + c.to_string() + " references a species outside 1.." + std::to_string(n_));
    switch (c.kind()) {
    case Complex::Kind::ZeroOrder:
        return 0;
    case Complex::Kind::Unary:
        return c.first().value;
    case Complex::Kind::Binary:
        break;
    }
    const std::uint64_t i = c.first().value;
    const std::uint64_t j = c.second().value;
    if (i == j)
        return n_ + i;
    const std::uint64_t row_offset = (i - 1) * n_ - (i - 1) * i / 2;
    return 1 + 2ull * n_ + row_offset + (j - i - 1);
}

Complex index_to_complex(std::uint32_t n, std::uint64_t idx)
{
    return ComplexUniverse(n).at(idx);
}

std::uint64_t complex_to_index(std::uint32_t n, const Complex& c)
{
    return ComplexUniverse(n).index_of(c);
}

std::vector<int> complex_vector(std::uint32_t n, const Complex& c)
{
    if (c.max_species() > n)
        throw DomainError("complex " + c.to_string() + " references a species beyond n=" + std::to_string(n));
    std::vector<int> v(n, 0);
    if (c.kind() != Complex::Kind::ZeroOrder)
        ++v[c.first().value - 1];
    if (c.kind() == Complex::Kind::Binary)
        ++v[c.second().value - 1];
    return v;
}

} // namespace defzero
