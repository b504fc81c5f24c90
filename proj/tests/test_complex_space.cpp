#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defzero/complex_space.hpp"
#include "defzero/errors.hpp"

#include <numeric>
#include <set>

using namespace defzero;

TEST_CASE("universe size")
{
    CHECK(universe_size(2) == 6);
    CHECK(universe_size(0) == 1);
    CHECK(universe_size(10) == 66);
    CHECK(ComplexUniverse(7).size() == universe_size(7));
}

TEST_CASE("universe size matches direct enumeration of valid complexes")
{
    for (std::uint32_t n = 0; n <= 50; ++n) {
        std::set<std::vector<int>> vectors{std::vector<int>(n, 0)};
        for (std::uint32_t a = 1; a <= n; ++a) {
            vectors.insert(complex_vector(n, Complex::unary(SpeciesId{a})));
            for (std::uint32_t b = 1; b <= n; ++b)
                vectors.insert(complex_vector(n, Complex::binary(SpeciesId{a}, SpeciesId{b})));
        }
        CHECK(vectors.size() == universe_size(n));
        CHECK(universe_size(n) == 1 + n + n * (n + 1) / 2);
    }
}

TEST_CASE("index order for n = 2")
{
    // {0, A, B, 2A, 2B, A+B}
    CHECK(index_to_complex(2, 0) == Complex::zero());
    CHECK(index_to_complex(2, 1) == Complex::unary(SpeciesId{1}));
    CHECK(index_to_complex(2, 2) == Complex::unary(SpeciesId{2}));
    CHECK(index_to_complex(2, 3) == Complex::binary(SpeciesId{1}, SpeciesId{1}));
    CHECK(index_to_complex(2, 4) == Complex::binary(SpeciesId{2}, SpeciesId{2}));
    CHECK(index_to_complex(2, 5) == Complex::binary(SpeciesId{1}, SpeciesId{2}));
}

TEST_CASE("index examples")
{
    CHECK(index_to_complex(3, 4) == Complex::binary(SpeciesId{1}, SpeciesId{1}));
    CHECK(complex_to_index(2, Complex::zero()) == 0);
    CHECK(complex_to_index(1, Complex::binary(SpeciesId{1}, SpeciesId{1})) == 2);
    CHECK(index_to_complex(4, universe_size(4) - 1) == Complex::binary(SpeciesId{3}, SpeciesId{4}));
}

TEST_CASE("bijection for every n up to 50")
{
    for (std::uint32_t n = 0; n <= 50; ++n) {
        const ComplexUniverse u(n);
        std::set<std::vector<int>> seen;
        for (std::uint64_t idx = 0; idx < u.size(); ++idx) {
            const Complex c = u.at(idx);
            REQUIRE(u.index_of(c) == idx);
            seen.insert(complex_vector(n, c));
        }
        CHECK(seen.size() == u.size());
    }
}

TEST_CASE("binary stores the smaller species first")
{
    const auto c = Complex::binary(SpeciesId{5}, SpeciesId{2});
    CHECK(c.first().value == 2);
    CHECK(c.second().value == 5);
    CHECK(c == Complex::binary(SpeciesId{2}, SpeciesId{5}));
}

TEST_CASE("complex vectors")
{
    CHECK(complex_vector(2, Complex::binary(SpeciesId{1}, SpeciesId{2})) == std::vector<int>{1, 1});
    CHECK(complex_vector(2, Complex::binary(SpeciesId{2}, SpeciesId{2})) == std::vector<int>{0, 2});
    CHECK(complex_vector(3, Complex::zero()) == std::vector<int>{0, 0, 0});
    for (std::uint64_t idx = 0; idx < universe_size(6); ++idx) {
        auto v = complex_vector(6, index_to_complex(6, idx));
        const int sum = std::accumulate(v.begin(), v.end(), 0);
        CHECK(sum == index_to_complex(6, idx).molecularity());
        CHECK(sum <= 2);
    }
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(index_to_complex(2, 6), RangeError);
    CHECK_THROWS_AS(index_to_complex(0, 1), RangeError);
    CHECK_THROWS_AS(complex_to_index(2, Complex::unary(SpeciesId{3})), DomainError);
    CHECK_THROWS_AS(complex_to_index(2, Complex::binary(SpeciesId{1}, SpeciesId{3})), DomainError);
    CHECK_THROWS_AS(complex_to_index(2, Complex::unary(SpeciesId{0})), DomainError);
}
