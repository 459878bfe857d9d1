#include "ulrich/doubling.hpp"

#include <string>

namespace ulrich {

DoublingInstance doubled_semigroup(const NumericalSemigroup& L, long long b)
{
    long long n = L.embedding_dimension();
    if (n < 3 || L.multiplicity() != n)
        raise(errc::not_max_embedding_dim,
              "the base needs v = e = n >= 3, got v = " + std::to_string(n)
                  + ", e = " + std::to_string(L.multiplicity()));
    if (b % 2 == 0)
        raise(errc::even_b, "b = " + std::to_string(b) + " must be odd");
    if (!L.contains(b))
        raise(errc::b_not_in_base, "b = " + std::to_string(b) + " does not lie in the base");
    long long a1 = L.generators().front();
    long long an = L.generators().back();
    if (b < an + a1 + 1)
        raise(errc::b_too_small, "b = " + std::to_string(b) + " violates the bound b >= "
                                     + std::to_string(an + a1 + 1));
    // Maximal embedding dimension pins the conductor at a_n - a_1 + 1.
    if (L.conductor() != an - a1 + 1)
        raise(errc::internal, "conductor of a maximal-embedding-dimension base is off");

    std::vector<long long> gens;
    for (long long a : L.generators())
        gens.push_back(2 * a);
    gens.push_back(b);
    std::sort(gens.begin(), gens.end());
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    if (H.generators() != gens)
        raise(errc::internal, "the doubled generators failed to be minimal");

    RelativeIdeal ideal_i = ideal_from_generators(H, {2 * a1, b});
    RelativeIdeal ideal_j = ideal_from_generators(H, [&] {
        std::vector<long long> js;
        for (long long a : L.generators())
            js.push_back(2 * a);
        return js;
    }());
    return DoublingInstance{L, b, std::move(H), std::move(ideal_i), std::move(ideal_j)};
}

construction_failure::construction_failure(std::string detail, UlrichCertificate cert)
    : error(errc::construction_failed, std::move(detail)), cert_(std::move(cert))
{
}

std::pair<UlrichCertificate, UlrichCertificate> doubling_ulrich_pair(const DoublingInstance& inst)
{
    long long n = inst.base.embedding_dimension();
    UlrichCertificate ci = is_ulrich(inst.doubled, inst.ideal_i);
    if (!ci.ulrich() || ci.nu != 2)
        throw construction_failure("the two-generator ideal of the doubling failed", ci);
    UlrichCertificate cj = is_ulrich(inst.doubled, inst.ideal_j);
    if (!cj.ulrich() || cj.nu != n)
        throw construction_failure("the extended-maximal-ideal of the doubling failed", cj);
    return {std::move(ci), std::move(cj)};
}

std::vector<long long> admissible_doubling_b(const NumericalSemigroup& L, long long b_max)
{
    long long a1 = L.generators().front();
    long long an = L.generators().back();
    std::vector<long long> out;
    for (long long b = an + a1 + 1; b <= b_max; ++b)
        if (b % 2 != 0 && L.contains(b))
            out.push_back(b);
    return out;
}

} // namespace ulrich
