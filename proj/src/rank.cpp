#include "defzero/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>

namespace defzero {

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

namespace {

struct Checked64 {
    // Returns nullopt on overflow.
    static std::optional<std::int64_t> cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                             std::int64_t divisor)
    {
        std::int64_t ab = 0, cd = 0, diff = 0;
        if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
            __builtin_sub_overflow(ab, cd, &diff))
            return std::nullopt;
        return diff / divisor;
    }
};

struct BigInt {
    using value_type = boost::multiprecision::cpp_int;

    static std::optional<value_type> cross(const value_type& a, const value_type& b, const value_type& c,
                                           const value_type& d, const value_type& divisor)
    {
        return (a * b - c * d) / divisor;
    }
};

// Fraction-free elimination. After processing pivot k every live entry is a
// (k+1)x(k+1) minor of the input, so each division by the previous pivot is exact.
template <typename T, typename Ops>
std::optional<std::size_t> bareiss(std::vector<T> a, std::size_t rows, std::size_t cols)
{
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
    T prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(at(pivot, j), at(rank, j));

        const T p = at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const T lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                auto v = Ops::cross(p, at(i, j), lead, at(rank, j), prev);
                if (!v)
                    return std::nullopt;
                at(i, j) = std::move(*v);
            }
            at(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return result;
}

} // namespace

std::size_t bareiss_rank(const IntMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    // Eliminate along the shorter dimension.
    const IntMatrix& src = m.rows() <= m.cols() ? m : m.transposed();
    std::vector<std::int64_t> data(src.data().begin(), src.data().end());
    if (auto r = bareiss<std::int64_t, Checked64>(data, src.rows(), src.cols()))
        return *r;

    std::vector<BigInt::value_type> big(data.begin(), data.end());
    return *bareiss<BigInt::value_type, BigInt>(std::move(big), src.rows(), src.cols());
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t prime)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        std::int64_t v = m.data()[i] % static_cast<std::int64_t>(prime);
        a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(prime) : v);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(at(pivot, j), at(rank, j));
        const std::uint64_t inv = powmod(at(rank, c), prime - 2, prime);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (at(i, c) == 0)
                continue;
            const std::uint64_t f = mulmod(at(i, c), inv, prime);
            for (std::size_t j = c; j < cols; ++j)
                at(i, j) = (at(i, j) + prime - mulmod(f, at(rank, j), prime)) % prime;
        }
        ++rank;
    }
    return rank;
}

std::size_t exact_rank(const IntMatrix& m)
{
    const std::size_t full = std::min(m.rows(), m.cols());
    if (full == 0)
        return 0;
    if (rank_mod_prime(m, kMersenne61) == full)
        return full;
    return bareiss_rank(m);
}

} // namespace defzero
