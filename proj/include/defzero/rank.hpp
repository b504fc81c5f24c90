#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace defzero {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const std::int64_t> data() const { return data_; }

    IntMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact rank over the rationals.
///
/// A rank modulo 2^61 - 1 is tried first; it is a lower bound on the rational
/// rank, so when it already equals min(rows, cols) it is returned directly.
/// Otherwise fraction-free (Bareiss) elimination runs on 64-bit integers and
/// restarts with arbitrary precision if any intermediate overflows.
std::size_t exact_rank(const IntMatrix& m);

/// Bareiss elimination only, no modular short-circuit.
std::size_t bareiss_rank(const IntMatrix& m);

/// Rank over GF(prime). prime must be below 2^63.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t prime);

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

} // namespace defzero
