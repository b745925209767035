// Independent reference computations used only by tests. Nothing here goes
// through the elimination engine.
#ifndef DELPROD_TESTS_ORACLES_HPP
#define DELPROD_TESTS_ORACLES_HPP

#include "delprod/integer.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using delprod::Integer;
using Dense = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) elimination over Q; returns the rank.
inline std::size_t rational_rank(Dense a)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < n && rank < m; ++col)
    {
        std::size_t piv = rank;
        while (piv < m && a[piv][col] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < m; ++i)
        {
            for (std::size_t j = col + 1; j < n; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Bareiss determinant of a square matrix.
inline Integer determinant(Dense a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a[k][k] == 0)
        {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Rank over Z/p for a prime p by plain Gaussian elimination.
inline std::size_t rank_mod_prime(Dense a, long p)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    auto mod = [p](const Integer& x) {
        long r = static_cast<long>(x % p);
        return r < 0 ? r + p : r;
    };
    std::vector<std::vector<long>> b(m, std::vector<long>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] = mod(a[i][j]);
    auto inverse = [p](long x) {
        long r = 1, e = p - 2, base = x;
        while (e)
        {
            if (e & 1)
                r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col)
    {
        std::size_t piv = rank;
        while (piv < m && b[piv][col] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(b[piv], b[rank]);
        long inv = inverse(b[rank][col]);
        for (std::size_t i = 0; i < m; ++i)
        {
            if (i == rank || b[i][col] == 0)
                continue;
            long f = b[i][col] * inv % p;
            for (std::size_t j = col; j < n; ++j)
                b[i][j] = ((b[i][j] - f * b[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace oracle

#endif
