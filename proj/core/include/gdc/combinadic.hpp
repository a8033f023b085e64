// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <vector>

namespace gdc
{

// Binomial coefficient, saturating at the uint64 maximum instead of
// overflowing. Saturation is safe for this library's uses: indices that
// large are rejected by resource caps long before arithmetic matters.
std::uint64_t binomial(unsigned n, unsigned k);

// Combinatorial number system of degree k ("combinadic"): a bijection
// between z in [0, C(n,k)) and the k-subsets of {0..n-1}, enumerated in
// colexicographic order. decode returns the subset as a strictly
// descending cell list c_k > c_{k-1} > ... > c_1 with
// z = sum_a C(c_a, a).
std::vector<unsigned> combinadic_decode(std::uint64_t z, unsigned k);

// Inverse of combinadic_decode; cells may be passed in any order.
std::uint64_t combinadic_encode(const std::vector<unsigned> &cells);

} // namespace gdc
