#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace defzero {

/// 1-based species index S_1..S_n.
struct SpeciesId {
    std::uint32_t value = 1;

    constexpr auto operator<=>(const SpeciesId&) const = default;
};

/// A complex of molecularity at most two: 0, S_a, or S_a + S_b (a <= b, a == b meaning 2S_a).
class Complex {
public:
    enum class Kind : std::uint8_t { ZeroOrder, Unary, Binary };

    constexpr Complex() = default;

    static constexpr Complex zero() { return Complex{}; }
    static constexpr Complex unary(SpeciesId a) { return Complex{Kind::Unary, a, a}; }
    static constexpr Complex binary(SpeciesId a, SpeciesId b)
    {
        return a <= b ? Complex{Kind::Binary, a, b} : Complex{Kind::Binary, b, a};
    }

    constexpr Kind kind() const { return kind_; }
    constexpr SpeciesId first() const { return a_; }
    constexpr SpeciesId second() const { return b_; }
    constexpr int molecularity() const { return static_cast<int>(kind_); }

    /// Largest species id referenced, 0 for the zero complex.
    constexpr std::uint32_t max_species() const { return kind_ == Kind::ZeroOrder ? 0 : b_.value; }

    constexpr bool operator==(const Complex&) const = default;

    std::string to_string() const;

private:
    constexpr Complex(Kind k, SpeciesId a, SpeciesId b) : kind_(k), a_(a), b_(b) {}

    Kind kind_ = Kind::ZeroOrder;
    SpeciesId a_{0};
    SpeciesId b_{0};
};

/// The universe of all zeroth-order, unary and binary complexes on n species.
///
/// Canonical index order: 0 is the zero complex, 1..n are S_1..S_n, then the
/// doubles 2S_1..2S_n, then the mixed pairs S_i + S_j (i < j) in lexicographic
/// order of (i, j). For n = 2 this gives {0, A, B, 2A, 2B, A+B}. The order is
/// part of the reproducibility contract of the samplers.
class ComplexUniverse {
public:
    explicit ComplexUniverse(std::uint32_t n);

    std::uint32_t species_count() const { return n_; }
    std::uint64_t size() const { return size_; }

    Complex at(std::uint64_t idx) const;
    std::uint64_t index_of(const Complex& c) const;

private:
    std::uint32_t n_;
    std::uint64_t size_;
};

/// (n^2 + 3n + 2) / 2
constexpr std::uint64_t universe_size(std::uint64_t n)
{
    return (n * n + 3 * n + 2) / 2;
}

Complex index_to_complex(std::uint32_t n, std::uint64_t idx);
std::uint64_t complex_to_index(std::uint32_t n, const Complex& c);
std::vector<int> complex_vector(std::uint32_t n, const Complex& c);

} // namespace defzero
