#ifndef ULRICH_DOUBLING_HPP
#define ULRICH_DOUBLING_HPP

#include "ulrich/engine.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/ideal.hpp"
#include "ulrich/semigroup.hpp"

#include <utility>
#include <vector>

namespace ulrich {

/// The doubling construction: from a base semigroup L = <a_1, ..., a_n> of
/// maximal embedding dimension (v = e = n >= 3) and an admissible odd b in
/// L with b >= a_n + a_1 + 1, the semigroup H = 2L + <b> carries the pair
/// of Ulrich ideals I = (2 a_1, b) with two generators and J = (2 a_i)
/// with n generators: generator counts of Ulrich ideals need not match.
struct DoublingInstance {
    NumericalSemigroup base;    // L
    long long b;                // odd, in L, >= a_n + a_1 + 1
    NumericalSemigroup doubled; // H = 2L + <b>, minimally generated by n+1 elements
    RelativeIdeal ideal_i;      // (2 a_1, b)
    RelativeIdeal ideal_j;      // (2 a_i : 1 <= i <= n)
};

/// Validates the hypotheses strictly (b is never repaired) and assembles
/// the instance. Errors: NotMaxEmbeddingDim, EvenB, BNotInL, BTooSmall,
/// each naming the violated requirement.
DoublingInstance doubled_semigroup(const NumericalSemigroup& L, long long b);

/// Thrown when a certified ideal of a valid instance fails the Ulrich test
/// or the generator count; carries the offending certificate.
class construction_failure : public error {
public:
    construction_failure(std::string detail, UlrichCertificate cert);
    const UlrichCertificate& certificate() const { return cert_; }

private:
    UlrichCertificate cert_;
};

/// Runs the Ulrich test on both ideals of the instance and checks
/// nu(I) = 2, nu(J) = n. Errors: construction_failure.
std::pair<UlrichCertificate, UlrichCertificate> doubling_ulrich_pair(const DoublingInstance& inst);

/// The admissible b for a base L, up to b_max inclusive.
std::vector<long long> admissible_doubling_b(const NumericalSemigroup& L, long long b_max);

} // namespace ulrich

#endif
