// Test-only brute-force oracles on plain integer sets. Everything here is
// deliberately independent of the RelativeIdeal machinery: windows are
// explicit, operations are double loops, normal forms are greedy scans.
#ifndef ULRICH_TESTS_ORACLES_HPP
#define ULRICH_TESTS_ORACLES_HPP

#include "ulrich/semigroup.hpp"

#include <set>
#include <vector>

namespace oracle {

using Set = std::set<long long>;

// E = union of (g + H) truncated to [lo, hi].
inline Set ideal_set(const ulrich::NumericalSemigroup& H, const std::vector<long long>& gens,
                     long long lo, long long hi)
{
    Set out;
    for (long long z = lo; z <= hi; ++z)
        for (long long g : gens)
            if (H.contains(z - g)) {
                out.insert(z);
                break;
            }
    return out;
}

inline Set sumset(const Set& a, const Set& b, long long hi)
{
    Set out;
    for (long long x : a)
        for (long long y : b)
            if (x + y <= hi)
                out.insert(x + y);
    return out;
}

inline Set colon_set(const ulrich::NumericalSemigroup& H, const Set& e,
                     const std::vector<long long>& f_gens, long long lo, long long hi,
                     long long e_hi)
{
    // z + F subset E decided through the generators of F; membership in E
    // via the truncated set, valid while z + g stays below e_hi.
    Set out;
    for (long long z = lo; z <= hi; ++z) {
        bool ok = true;
        for (long long g : f_gens) {
            if (z + g > e_hi || !e.count(z + g)) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.insert(z);
    }
    return out;
}

// Greedy minimal generators of an ideal given as a truncated set.
inline std::vector<long long> min_gens(const ulrich::NumericalSemigroup& H, const Set& e)
{
    std::vector<long long> kept;
    for (long long z : e) {
        bool redundant = false;
        for (long long k : kept)
            if (H.contains(z - k)) {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(z);
    }
    return kept;
}

} // namespace oracle

#endif
