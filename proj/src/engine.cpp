#include "ulrich/engine.hpp"

#include "ulrich/config.hpp"
#include "ulrich/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace ulrich {

namespace {

// Bit set over degrees [0, size), the working representation for the
// windowed set checks of the Ulrich test.
struct BitWindow {
    std::vector<uint64_t> words;
    long long size;

    explicit BitWindow(long long n)
        : words(static_cast<size_t>((n + 63) / 64), 0), size(n)
    {
    }
    void set(long long i) { words[static_cast<size_t>(i >> 6)] |= 1ull << (i & 63); }
    bool test(long long i) const
    {
        if (i < 0 || i >= size)
            return false;
        return (words[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1;
    }
};

// dst |= src << shift, truncated to dst.size.
void or_shifted(const BitWindow& src, long long shift, BitWindow& dst)
{
    long long word_shift = shift >> 6;
    int bit_shift = static_cast<int>(shift & 63);
    size_t nd = dst.words.size();
    for (size_t i = 0; i < src.words.size(); ++i) {
        uint64_t w = src.words[i];
        if (w == 0)
            continue;
        size_t lo = i + static_cast<size_t>(word_shift);
        if (lo < nd)
            dst.words[lo] |= w << bit_shift;
        if (bit_shift && lo + 1 < nd)
            dst.words[lo + 1] |= w >> (64 - bit_shift);
    }
    // mask stray bits above size
    if (dst.size & 63)
        dst.words.back() &= (1ull << (dst.size & 63)) - 1;
}

long long count_and_not(const BitWindow& a, const BitWindow& b)
{
    long long c = 0;
    for (size_t i = 0; i < a.words.size(); ++i)
        c += __builtin_popcountll(a.words[i] & ~b.words[i]);
    return c;
}

} // namespace

UlrichCertificate is_ulrich(const NumericalSemigroup& H, const RelativeIdeal& E)
{
    if (!(E.ambient() == H))
        raise(errc::ambient_mismatch, "ideal lives over a different semigroup");
    if (E.min_degree() <= 0)
        raise(errc::not_proper, "the Ulrich test needs a proper nonzero ideal, min degree "
                                    + std::to_string(E.min_degree()));

    long long frob = std::max<long long>(H.frobenius(), 0);
    long long max_gen = E.min_generators().back();
    // Conductors of E+E and a+E stay below 2 max_gen + F + 1, so factor 2
    // already decides both set equalities exactly.
    long long window = window_factor() * (max_gen + frob) + H.generators().back() + 2;

    BitWindow h_bits(window), e_bits(window);
    for (long long z = 0; z < window; ++z)
        if (H.contains(z))
            h_bits.set(z);
    for (long long g : E.min_generators())
        or_shifted(h_bits, g, e_bits);

    BitWindow square(window);
    for (long long z = 0; z < window; ++z)
        if (e_bits.test(z))
            or_shifted(e_bits, z, square);

    long long nu = E.num_generators();
    long long reduction = E.min_degree();
    bool stable = false;
    for (long long a : E.min_generators()) {
        BitWindow shifted(window);
        or_shifted(e_bits, a, shifted);
        if (shifted.words == square.words) {
            stable = true;
            reduction = a;
            break;
        }
    }

    long long colen = count_and_not(h_bits, e_bits);
    long long free_count = count_and_not(e_bits, square);
    bool free_ok = free_count == nu * colen;
    bool parameter = nu == 1;

    UlrichCertificate cert{
        E,
        reduction,
        nu,
        nu - 1,
        colen,
        stable,
        free_ok,
        parameter,
        Verdict::not_ulrich,
        "",
    };
    if (!stable)
        cert.reason = "unstable";
    else if (!free_ok)
        cert.reason = "not-free";
    else if (parameter)
        cert.reason = "parameter";
    else
        cert.verdict = Verdict::ulrich;
    return cert;
}

std::vector<UlrichCertificate> enumerate_parameter_ideals(const NumericalSemigroup& H,
                                                          long long bound)
{
    std::vector<UlrichCertificate> out;
    for (long long a = 1; a <= bound; ++a)
        if (H.contains(a))
            out.push_back(is_ulrich(H, principal_ideal(H, a)));
    return out;
}

namespace {

// Down-sets of the free part of the Apery poset: z may join the co-ideal
// only when every free predecessor (z - z' in H) is already in.
void down_sets(const std::vector<long long>& free, const std::vector<std::vector<size_t>>& preds,
               size_t at, std::vector<bool>& in, const std::function<void(const std::vector<bool>&)>& emit)
{
    if (at == free.size()) {
        emit(in);
        return;
    }
    in[at] = false;
    down_sets(free, preds, at + 1, in, emit);
    for (size_t p : preds[at])
        if (!in[p])
            return;
    in[at] = true;
    down_sets(free, preds, at + 1, in, emit);
    in[at] = false;
}

} // namespace

std::vector<UlrichCertificate> enumerate_ulrich(const NumericalSemigroup& H, long long bound)
{
    if (bound < H.multiplicity())
        raise(errc::bound_too_small, "bound " + std::to_string(bound)
                                         + " is below the multiplicity "
                                         + std::to_string(H.multiplicity()));
    long long frob = H.frobenius();
    std::set<std::vector<long long>> seen;
    std::vector<UlrichCertificate> out;

    for (long long a = 1; a <= bound; ++a) {
        if (!H.contains(a))
            continue;
        // Candidates with min(E) = a: the co-ideal G contains all of
        // H in [0, a) and a subset of the Apery elements above a. Every
        // ideal is met exactly once because its reduction degree is its
        // least degree.
        std::vector<long long> free;
        for (long long z = a + 1; z <= a + frob; ++z)
            if (H.contains(z) && !H.contains(z - a))
                free.push_back(z);
        std::vector<std::vector<size_t>> preds(free.size());
        for (size_t j = 0; j < free.size(); ++j)
            for (size_t i = 0; i < j; ++i)
                if (H.contains(free[j] - free[i]))
                    preds[j].push_back(i);

        std::vector<bool> in(free.size(), false);
        std::function<void(const std::vector<bool>&)> emit = [&](const std::vector<bool>& chosen) {
            std::vector<long long> gens{a};
            size_t fi = 0;
            for (long long z = a + 1; z <= a + frob; ++z) {
                if (!H.contains(z))
                    continue;
                bool excluded = false;
                if (fi < free.size() && free[fi] == z)
                    excluded = chosen[fi++];
                if (!excluded)
                    gens.push_back(z);
            }
            UlrichCertificate cert = is_ulrich(H, ideal_from_generators(H, std::move(gens)));
            if (!cert.ulrich())
                return;
            if (seen.insert(cert.ideal.min_generators()).second)
                out.push_back(std::move(cert));
        };
        down_sets(free, preds, 0, in, emit);
    }

    std::sort(out.begin(), out.end(), [](const UlrichCertificate& x, const UlrichCertificate& y) {
        return x.ideal.min_generators() < y.ideal.min_generators();
    });
    return out;
}

} // namespace ulrich
