#pragma once

#include <cstddef>

#include "mislab/bignat.hpp"

namespace mislab {

/// Largest product of positive integers summing to n (as many 3s as possible).
/// Throws std::invalid_argument for n == 0.
BigNat ell(std::size_t n);

/// Minimum number of sets in a separating cover on m elements, from the
/// three-case closed form (s(1) = 1, s(2) = 2). Throws for m == 0.
std::size_t s_of(const BigNat& m);

/// Perrin-type numbers P(j) = P(j-2) + P(j-3), seeded P(1)=0, P(2)=2, P(3)=3,
/// so that perrin(j) is the number of maximal independent sets of the j-cycle.
BigNat perrin(std::size_t j);

/// Largest integer expressible with exactly n ones under + and *, computed by
/// E(n) = max_{a+b=n} max(E(a)+E(b), E(a)E(b)); no closed form involved.
BigNat max_with_ones(std::size_t n);

}  // namespace mislab
