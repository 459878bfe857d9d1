#ifndef ULRICH_ENGINE_HPP
#define ULRICH_ENGINE_HPP

#include "ulrich/ideal.hpp"
#include "ulrich/semigroup.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ulrich {

enum class Verdict { ulrich, not_ulrich };

/// Full evidence record for the Ulrich test of a monomial ideal I:
/// reduction Q = (t^a), stability I^2 = QI, freeness of I/I^2 over R/I,
/// and the non-parameter requirement.
struct UlrichCertificate {
    RelativeIdeal ideal;
    long long reduction_degree; // a with Q = (t^a)
    long long nu;               // minimal number of generators
    long long t;                // nu - 1 in dimension one
    long long colength;         // l(R/I)
    bool stability_ok;
    bool freeness_ok;
    bool is_parameter;
    Verdict verdict;
    std::string reason; // empty when Ulrich; else "unstable", "not-free", "parameter"

    bool ulrich() const { return verdict == Verdict::ulrich; }
};

/// Ulrich test for a proper nonzero monomial ideal (m-primary is automatic
/// in dimension one). The reduction degree is min(E); when stability fails
/// there, every other minimal generator is tried before declaring failure
/// (a positive verdict cannot depend on the choice of minimal reduction,
/// and in fact min(E+E) = 2 min(E) forces a = min(E); the fallback guards
/// that argument).
///
/// stability_ok: E+E = a+E on the verification window.
/// freeness_ok: |E \ (E+E)| = nu(I) * |H \ E|, the length form of the
/// freeness certificate for I/I^2 at rank nu(I).
/// Errors: NotProper when min(E) <= 0.
UlrichCertificate is_ulrich(const NumericalSemigroup& H, const RelativeIdeal& E);

/// Every non-parameter monomial Ulrich ideal with reduction degree at most
/// `bound`, sorted by minimal generator list. Search: for each a in
/// H and [1, bound], candidate co-ideals G = H \ E inside the Apery set of
/// a, downward closed under subtracting semigroup elements; each candidate
/// goes through is_ulrich and survivors are deduplicated by their minimal
/// generators. Completeness holds for reduction degree <= bound; reports
/// must always carry the bound.
/// Errors: BoundTooSmall when bound < multiplicity.
std::vector<UlrichCertificate> enumerate_ulrich(const NumericalSemigroup& H, long long bound);

/// Parameter (principal) ideals (t^a), a in H and [1, bound]: each is
/// stable and free but excluded from the Ulrich list; reported separately
/// on request.
std::vector<UlrichCertificate> enumerate_parameter_ideals(const NumericalSemigroup& H,
                                                          long long bound);

/// The monomial part of the core of Ulrich ideals: the sum of the colon
/// ideals ((z) : K) over monomial degrees z in the canonical ideal K.
/// Equals the unit ideal when H is symmetric. Contained in every Ulrich
/// ideal with at least three generators; over an almost symmetric
/// non-symmetric H it is contained in every Ulrich ideal.
RelativeIdeal monomial_core(const NumericalSemigroup& H);

/// The measured homological profile of an Ulrich ideal: the colon identity
/// Q : I = I, the Ext ranks in degrees one and two read off the exact
/// sequence 0 -> (Q:I)/Q -> R/Q -> Hom(I/Q, R/Q) -> Ext^2 -> 0, and the
/// type identity t * r(R/I) = r(I/Q) = r(R).
struct HomologicalProfile {
    long long reduction_degree; // a
    long long quotient_length;  // l(R/I)
    long long rq_length;        // l(R/Q)
    bool colon_ok;              // Q : I = I
    long long ext1_length;      // l((Q:I)/Q)
    bool ext1_free;             // (Q:I)/Q free of rank t over R/I
    long long hom_dim;          // dim Hom(I/Q, R/Q) = t^2 l(R/I)
    bool hom_dim_ok;
    long long ext2_length;      // dim coker(R/Q -> Hom(I/Q, R/Q))
    bool ext2_free;             // free of rank t^2 - 1 (zero module when t = 1)
    bool bookkeeping_ok;        // hom_dim - l(R/Q) + ext1_length = ext2_length
    bool rq_length_ok;          // l(R/Q) = a = (t+1) l(R/I)
    long long r_ring;           // |PF(H)|
    long long r_quotient;       // socle dim of R/I
    long long r_iq;             // socle dim of I/Q
    bool type_identity_ok;      // r_ring = t * r_quotient = r_iq
    bool pass;
};

/// Errors: NotUlrichInput when the certificate verdict is not Ulrich.
HomologicalProfile verify_homological_profile(const NumericalSemigroup& H,
                                              const UlrichCertificate& cert);

/// One verification record: which check ran, on what inputs, every measured
/// quantity, and the verdict. Failures are reports with pass = false, never
/// crashes.
struct VerificationReport {
    std::string check;
    nlohmann::json inputs;
    nlohmann::json measured;
    bool pass = false;
    std::string trace;
};

/// Runs the per-semigroup checks over a family: enumeration (with the given
/// completeness bound), the homological profile of every Ulrich ideal
/// found, and, where the hypotheses apply, the maximal-ideal uniqueness
/// check, the generator-count laws, and the core containment.
std::vector<VerificationReport> theorem_suite(const std::vector<NumericalSemigroup>& family,
                                              long long bound);

} // namespace ulrich

#endif
