// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/combinadic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gdc
{

std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i)
    {
        // result here is C(n-k+i-1, i-1), so the product below is divisible
        // by i and the quotient is the next partial coefficient. A 128-bit
        // intermediate keeps the step exact even when the product passes
        // 64 bits; the partials only grow, so overflow of one step means
        // the final value overflows too and saturating is correct.
        const auto wide = static_cast<unsigned __int128>(result) * (n - k + i) / i;
        if (wide > cap)
            return cap; // saturate, callers treat this as "too many"
        result = static_cast<std::uint64_t>(wide);
    }
    return result;
}

std::vector<unsigned> combinadic_decode(std::uint64_t z, unsigned k)
{
    // Greedy colex decode: the a-th element (a = k..1) is the largest c
    // with C(c, a) <= remaining index. Output is strictly descending.
    std::vector<unsigned> cells;
    cells.reserve(k);
    for (unsigned a = k; a >= 1; --a)
    {
        unsigned c = a - 1;
        while (binomial(c + 1, a) <= z)
            ++c;
        cells.push_back(c);
        z -= binomial(c, a);
    }
    return cells;
}

std::uint64_t combinadic_encode(const std::vector<unsigned> &cells)
{
    std::vector<unsigned> sorted(cells);
    std::sort(sorted.begin(), sorted.end(), std::greater<unsigned>());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("combinadic_encode: repeated cell index");
    std::uint64_t z = 0;
    unsigned a = static_cast<unsigned>(sorted.size());
    for (unsigned c : sorted)
    {
        z += binomial(c, a);
        --a;
    }
    return z;
}

} // namespace gdc
