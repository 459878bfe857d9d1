#include "ulrich/family.hpp"

#include "ulrich/errors.hpp"

#include <algorithm>

namespace ulrich {

namespace {

void recurse(std::vector<bool>& member, long long z, long long limit,
             std::vector<NumericalSemigroup>& out)
{
    if (z > limit) {
        bool full = true;
        for (long long i = 1; i <= limit; ++i)
            if (!member[static_cast<size_t>(i)]) {
                full = false;
                break;
            }
        if (!full)
            out.push_back(NumericalSemigroup::from_membership(member, limit));
        return;
    }
    bool forced = false;
    for (long long x = 1; x + x <= z; ++x)
        if (member[static_cast<size_t>(x)] && member[static_cast<size_t>(z - x)]) {
            forced = true;
            break;
        }
    member[static_cast<size_t>(z)] = true;
    recurse(member, z + 1, limit, out);
    if (!forced) {
        member[static_cast<size_t>(z)] = false;
        recurse(member, z + 1, limit, out);
        member[static_cast<size_t>(z)] = true;
    }
}

} // namespace

std::vector<NumericalSemigroup> semigroups_with_frobenius_at_most(long long max_frobenius)
{
    if (max_frobenius < 1)
        raise(errc::internal, "the family needs max Frobenius >= 1");
    std::vector<NumericalSemigroup> out;
    std::vector<bool> member(static_cast<size_t>(max_frobenius) + 1, false);
    member[0] = true;
    recurse(member, 1, max_frobenius, out);
    std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators() < b.generators();
    });
    return out;
}

} // namespace ulrich
