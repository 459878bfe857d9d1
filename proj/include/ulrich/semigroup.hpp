#ifndef ULRICH_SEMIGROUP_HPP
#define ULRICH_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

namespace ulrich {

/// A numerical semigroup H: a cofinite additive submonoid of the
/// non-negative integers, the value semigroup of the one-dimensional local
/// ring k[[t^h : h in H]].
///
/// Instances are immutable after construction and cheap to copy; every
/// operation on them is a pure function, so values can be shared freely
/// across concurrent workers.
///
/// Stored data: the minimal generating system (recomputed on construction,
/// whatever generating set was supplied), the Frobenius number
/// F = max(Z \ H) (-1 when H = N), the gap set, and a membership table for
/// [0, F+1]. Membership beyond F is automatic.
class NumericalSemigroup {
public:
    /// Builds H from any generating set of positive integers.
    /// The stored generators are the minimal system: no generator is a sum
    /// of two nonzero elements of H.
    ///
    /// Errors: Empty when gens is empty, InvalidGenerator on a value < 1,
    /// NotCoprime when gcd(gens) != 1.
    static NumericalSemigroup from_generators(std::vector<long long> gens);

    /// Builds H from a membership table for [0, limit] where every z > limit
    /// lies in H. Used by the family enumerator, which already knows the
    /// member set; semantics identical to from_generators on the minimal
    /// generating system of that set.
    static NumericalSemigroup from_membership(const std::vector<bool>& member, long long limit);

    /// z in H. Negative z is never a member; z > frobenius() always is.
    bool contains(long long z) const
    {
        if (z < 0)
            return false;
        if (z > frobenius_)
            return true;
        return member_[static_cast<size_t>(z)];
    }

    const std::vector<long long>& generators() const { return gens_; }
    const std::vector<long long>& gaps() const { return gaps_; }
    long long frobenius() const { return frobenius_; }
    /// Conductor c = F + 1: least c with [c, oo) contained in H.
    long long conductor() const { return frobenius_ + 1; }
    long long multiplicity() const { return gens_.front(); }
    long long embedding_dimension() const { return static_cast<long long>(gens_.size()); }
    long long genus() const { return static_cast<long long>(gaps_.size()); }
    bool is_full() const { return frobenius_ == -1; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b)
    {
        return a.gens_ == b.gens_;
    }

private:
    NumericalSemigroup() = default;

    std::vector<long long> gens_;
    long long frobenius_ = -1;
    std::vector<long long> gaps_;
    std::vector<bool> member_;
};

/// Apery set of n in H: the least element of H in each residue class
/// mod n, returned sorted. |result| = n and 0 is always a member.
/// Errors: NotMember when n is not a positive element of H.
std::vector<long long> apery_set(const NumericalSemigroup& H, long long n);

/// Pseudo-Frobenius numbers PF(H) = { f not in H : f + h in H for all
/// nonzero h in H }, sorted. max PF(H) = F and |PF(H)| is the
/// Cohen-Macaulay type of the semigroup ring.
/// Errors: FullSemigroup when H = N.
std::vector<long long> pseudo_frobenius(const NumericalSemigroup& H);

/// Cohen-Macaulay type r(R) = |PF(H)|. Errors as pseudo_frobenius.
long long semigroup_type(const NumericalSemigroup& H);

/// True iff for every integer z exactly one of z, F - z lies in H.
/// Equivalent to type 1; both tests are evaluated and must agree.
bool is_symmetric(const NumericalSemigroup& H);

} // namespace ulrich

#endif
