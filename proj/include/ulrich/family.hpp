#ifndef ULRICH_FAMILY_HPP
#define ULRICH_FAMILY_HPP

#include "ulrich/semigroup.hpp"

#include <vector>

namespace ulrich {

/// All numerical semigroups H != N with Frobenius number at most
/// max_frobenius, by recursion on gap sets: membership of 1..N is decided
/// one degree at a time, with sums of chosen elements forced in. Sorted by
/// minimal generator list.
std::vector<NumericalSemigroup> semigroups_with_frobenius_at_most(long long max_frobenius);

} // namespace ulrich

#endif
