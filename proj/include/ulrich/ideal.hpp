#ifndef ULRICH_IDEAL_HPP
#define ULRICH_IDEAL_HPP

#include "ulrich/semigroup.hpp"

#include <vector>

namespace ulrich {

/// A relative ideal of a numerical semigroup H: a set E of integers with
/// E + H contained in E, stored as the union of shifted copies g_i + H over
/// its minimal generators. Minimality means g_i - g_j is never in H for
/// i != j, which makes the generator list a normal form: two relative
/// ideals are equal iff their minimal generators coincide.
///
/// Generators may be negative (fractional ideals show up in canonical-ideal
/// arithmetic); operations that need E inside H check for it and reject.
/// When E is contained in H and nonzero, |min_generators| is the minimal
/// number of generators nu(I) of the corresponding monomial ideal.
class RelativeIdeal {
public:
    const NumericalSemigroup& ambient() const { return ambient_; }
    const std::vector<long long>& min_generators() const { return gens_; }
    long long min_degree() const { return gens_.front(); }

    /// nu(I), valid for integral ideals: the size of the minimal system.
    long long num_generators() const { return static_cast<long long>(gens_.size()); }

    /// Least c with [c, oo) contained in E.
    long long conductor() const { return gens_.back() + ambient_.frobenius() + 1; }

    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b)
    {
        return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
    }

private:
    friend RelativeIdeal ideal_from_generators(const NumericalSemigroup&, std::vector<long long>);
    RelativeIdeal(NumericalSemigroup H, std::vector<long long> minimal_gens)
        : ambient_(std::move(H)), gens_(std::move(minimal_gens))
    {
    }

    NumericalSemigroup ambient_;
    std::vector<long long> gens_;
};

/// Normalizes any nonempty generating list to the minimal system.
/// Every integer list is valid; no errors besides an empty list.
RelativeIdeal ideal_from_generators(const NumericalSemigroup& H, std::vector<long long> gens);

/// (a) + H.
RelativeIdeal principal_ideal(const NumericalSemigroup& H, long long a);

/// (0) + H, the unit ideal.
RelativeIdeal unit_ideal(const NumericalSemigroup& H);

/// The maximal ideal: generated by the minimal generators of H.
RelativeIdeal maximal_ideal(const NumericalSemigroup& H);

/// z in E, i.e. z - g in H for some minimal generator g.
bool membership(const RelativeIdeal& E, long long z);

/// True iff inner is contained in outer (same ambient required); decided
/// exactly on the minimal generators of inner.
bool is_subset(const RelativeIdeal& inner, const RelativeIdeal& outer);

/// Product ideal, generated by all pairwise sums of generators.
/// Errors: AmbientMismatch.
RelativeIdeal multiply(const RelativeIdeal& E, const RelativeIdeal& F);

/// Colon ideal E : F = { z : z + F contained in E }. Reducing F to its
/// minimal generators is enough because E is an ideal. The result may
/// contain negative degrees. Errors: AmbientMismatch.
RelativeIdeal colon(const RelativeIdeal& E, const RelativeIdeal& F);

/// |H \ E| for E contained in H; the length of R/I for the monomial ideal.
/// Errors: NotIntegral when some generator lies outside H.
long long colength(const RelativeIdeal& E);

/// The canonical ideal K = { F - z : z not in H }, normalized so that
/// 0 is the least element. nu(K) equals the type of H, and K = H iff H is
/// symmetric.
RelativeIdeal canonical_ideal(const NumericalSemigroup& H);

/// Almost symmetry of H (the ring-theoretic almost Gorenstein property in
/// dimension one): M + K contained in M, for M = H \ {0} and K the
/// canonical ideal. A second, independent criterion on the pseudo-Frobenius
/// numbers is evaluated as a cross-check; the two must agree.
/// Errors: CriteriaDisagree when the two tests differ (an implementation
/// bug, never silently resolved).
bool is_almost_symmetric(const NumericalSemigroup& H);

} // namespace ulrich

#endif
