#include "ulrich/semigroup.hpp"

#include "ulrich/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace ulrich {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Least element of the semigroup in each residue class mod a1, computed by
// the round-robin shortest-path over residues. Linear-ish in a1 * |gens|,
// which keeps construction cheap when enumeration suites churn through
// thousands of semigroups.
std::vector<long long> apery_by_round_robin(long long a1, const std::vector<long long>& gens)
{
    std::vector<long long> least(static_cast<size_t>(a1), kInf);
    least[0] = 0;
    for (long long g : gens) {
        if (g == a1)
            continue;
        long long d = std::gcd(g, a1);
        for (long long r0 = 0; r0 < d; ++r0) {
            // cycle r0 -> r0+g -> ... (mod a1) of length a1/d; start at its
            // minimum and relax around the cycle once.
            long long cycle_len = a1 / d;
            long long best_r = -1;
            long long best = kInf;
            long long r = r0;
            for (long long i = 0; i < cycle_len; ++i) {
                if (least[static_cast<size_t>(r)] < best) {
                    best = least[static_cast<size_t>(r)];
                    best_r = r;
                }
                r = (r + g) % a1;
            }
            if (best_r < 0 || best == kInf)
                continue;
            r = best_r;
            for (long long i = 0; i < cycle_len; ++i) {
                long long next = (r + g) % a1;
                long long cand = least[static_cast<size_t>(r)] == kInf
                                     ? kInf
                                     : least[static_cast<size_t>(r)] + g;
                if (cand < least[static_cast<size_t>(next)])
                    least[static_cast<size_t>(next)] = cand;
                r = next;
            }
        }
    }
    return least;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long long> gens)
{
    if (gens.empty())
        raise(errc::empty_generators, "a numerical semigroup needs at least one generator");
    for (long long g : gens)
        if (g < 1)
            raise(errc::invalid_generator, "generators must be positive, got " + std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    long long d = 0;
    for (long long g : gens)
        d = std::gcd(d, g);
    if (d != 1)
        raise(errc::not_coprime, "gcd of generators is " + std::to_string(d));

    long long a1 = gens.front();
    std::vector<long long> least = apery_by_round_robin(a1, gens);

    NumericalSemigroup H;
    long long frob = -1;
    for (long long r = 0; r < a1; ++r)
        frob = std::max(frob, least[static_cast<size_t>(r)] - a1);
    H.frobenius_ = frob;

    H.member_.assign(static_cast<size_t>(std::max<long long>(frob, 0)) + 2, false);
    for (long long z = 0; z < static_cast<long long>(H.member_.size()); ++z)
        H.member_[static_cast<size_t>(z)] = least[static_cast<size_t>(z % a1)] <= z;
    for (long long z = 1; z <= frob; ++z)
        if (!H.member_[static_cast<size_t>(z)])
            H.gaps_.push_back(z);

    // Minimal generating system: elements of H \ {0} that are not sums of
    // two nonzero elements. Every such element is at most F + a1.
    for (long long z = 1; z <= std::max<long long>(frob, 0) + a1; ++z) {
        if (!H.contains(z))
            continue;
        bool decomposable = false;
        for (long long x = a1; x + a1 <= z; ++x)
            if (H.contains(x) && H.contains(z - x)) {
                decomposable = true;
                break;
            }
        if (!decomposable)
            H.gens_.push_back(z);
    }
    return H;
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<bool>& member, long long limit)
{
    if (member.empty() || !member[0])
        raise(errc::internal, "membership table must contain 0");
    auto in = [&](long long z) {
        if (z < 0)
            return false;
        if (z > limit)
            return true;
        return static_cast<size_t>(z) < member.size() && member[static_cast<size_t>(z)];
    };

    NumericalSemigroup H;
    long long frob = -1;
    for (long long z = 1; z <= limit; ++z)
        if (!in(z))
            frob = z;
    H.frobenius_ = frob;
    H.member_.assign(static_cast<size_t>(std::max<long long>(frob, 0)) + 2, false);
    for (long long z = 0; z < static_cast<long long>(H.member_.size()); ++z)
        H.member_[static_cast<size_t>(z)] = in(z);
    for (long long z = 1; z <= frob; ++z)
        if (!H.member_[static_cast<size_t>(z)])
            H.gaps_.push_back(z);

    long long top = frob + 2;
    long long a1 = 0;
    for (long long z = 1; z <= top; ++z)
        if (H.contains(z)) {
            a1 = z;
            break;
        }
    for (long long z = 1; z <= std::max<long long>(frob, 0) + a1; ++z) {
        if (!H.contains(z))
            continue;
        bool decomposable = false;
        for (long long x = a1; x + a1 <= z; ++x)
            if (H.contains(x) && H.contains(z - x)) {
                decomposable = true;
                break;
            }
        if (!decomposable)
            H.gens_.push_back(z);
    }
    long long d = 0;
    for (long long g : H.gens_)
        d = std::gcd(d, g);
    if (d != 1)
        raise(errc::internal, "membership table does not describe a numerical semigroup");
    return H;
}

std::vector<long long> apery_set(const NumericalSemigroup& H, long long n)
{
    if (n < 1 || !H.contains(n))
        raise(errc::not_member, std::to_string(n) + " is not a positive element of the semigroup");
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(n));
    for (long long r = 0; r < n; ++r) {
        long long z = r;
        while (!H.contains(z))
            z += n;
        out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> pseudo_frobenius(const NumericalSemigroup& H)
{
    if (H.is_full())
        raise(errc::full_semigroup, "PF(H) is undefined for the full semigroup N");
    std::vector<long long> out;
    for (long long f : H.gaps()) {
        bool ok = true;
        for (long long g : H.generators())
            if (!H.contains(f + g)) {
                ok = false;
                break;
            }
        // f + g in H for every generator g forces f + h in H for every
        // nonzero h in H, by splitting h into a generator plus a rest.
        if (ok)
            out.push_back(f);
    }
    if (out.empty() || out.back() != H.frobenius())
        raise(errc::internal, "PF(H) must contain the Frobenius number");
    return out;
}

long long semigroup_type(const NumericalSemigroup& H)
{
    return static_cast<long long>(pseudo_frobenius(H).size());
}

bool is_symmetric(const NumericalSemigroup& H)
{
    if (H.is_full())
        return true; // F = -1 pairs z with -1-z; exactly one is non-negative
    long long frob = H.frobenius();
    bool pairing = true;
    for (long long z = 0; z <= frob; ++z)
        if (H.contains(z) == H.contains(frob - z)) {
            pairing = false;
            break;
        }
    bool by_type = semigroup_type(H) == 1;
    if (pairing != by_type)
        raise(errc::internal, "symmetry pairing test and type test disagree");
    return pairing;
}

} // namespace ulrich
