#ifndef ULRICH_MODULE_HPP
#define ULRICH_MODULE_HPP

#include "ulrich/ideal.hpp"
#include "ulrich/ratmat.hpp"
#include "ulrich/semigroup.hpp"

#include <optional>
#include <vector>

namespace ulrich {

/// A finite-length module over the semigroup ring, presented by one action
/// matrix per minimal generator of H (the generators generate the algebra,
/// so this pins down the full module structure). Actions must pairwise
/// commute and be nilpotent; both are checked at construction.
///
/// Two flavours share the type:
///  - monomial-basis modules carry integer basis labels and index-map
///    actions (0/1 matrices with at most one 1 per column: t^g either
///    shifts a basis degree or annihilates it);
///  - generic modules (Hom modules, cokernels) carry dense exact-rational
///    matrices and no labels.
class FiniteLengthModule {
public:
    static FiniteLengthModule monomial(NumericalSemigroup H, std::vector<long long> labels);
    static FiniteLengthModule dense(NumericalSemigroup H, std::vector<RatMat> actions);

    const NumericalSemigroup& ambient() const { return ambient_; }
    int dimension() const { return dim_; }

    bool has_labels() const { return labels_.has_value(); }
    const std::vector<long long>& basis_labels() const { return *labels_; }

    /// Monomial form of the action of the i-th generator:
    /// target[j] = image row of basis column j, or -1 for annihilation.
    const std::vector<int>& index_action(size_t gen_index) const
    {
        return index_actions_[gen_index];
    }

    /// Dense matrix of the action of the i-th generator (materialized from
    /// the index map for monomial modules).
    RatMat action_matrix(size_t gen_index) const;

private:
    explicit FiniteLengthModule(NumericalSemigroup H) : ambient_(std::move(H)) {}
    void check_invariants() const;

    NumericalSemigroup ambient_;
    int dim_ = 0;
    std::optional<std::vector<long long>> labels_;
    std::vector<std::vector<int>> index_actions_; // monomial form, else empty
    std::vector<RatMat> dense_actions_;           // dense form, else empty
};

/// E/(t^q): basis E \ (q + H), the action of t^g shifting degrees.
/// With E = H this is R/Q, with E = I it is I/Q.
/// Errors: NotInIdeal when q_degree is not in E.
FiniteLengthModule quotient_module(const NumericalSemigroup& H, const RelativeIdeal& E,
                                   long long q_degree);

/// General quotient of nested relative ideals: basis numer \ denom.
/// Covers R/I (numer = (0), denom = I) and I/I^2.
FiniteLengthModule ideal_quotient_module(const NumericalSemigroup& H, const RelativeIdeal& numer,
                                         const RelativeIdeal& denom);

/// The Hom module Hom(M, N) over the common quotient ring, with enough
/// structure kept around to express further commutant elements in its
/// basis (the Ext pipeline needs coordinates of multiplication maps).
class HomSpace {
public:
    const FiniteLengthModule& module() const { return *module_; }
    int dim() const { return module_->dimension(); }
    const std::vector<RatMat>& basis() const { return basis_; }

    /// Coordinates of a commutant matrix (dim N x dim M) in basis().
    /// Raises Internal when phi does not commute with the actions.
    std::vector<mpq_class> coordinates(const RatMat& phi) const;

private:
    HomSpace() = default;
    friend HomSpace hom_space(const FiniteLengthModule&, const FiniteLengthModule&);
    friend HomSpace hom_space_dense(const FiniteLengthModule&, const FiniteLengthModule&);

    std::optional<FiniteLengthModule> module_;
    std::vector<RatMat> basis_;
    // transport route: class id per position of the (dim N x dim M) grid,
    // -1 for positions forced to zero
    std::vector<int> class_of_;
    std::vector<size_t> class_size_;
    int n_ = 0, m_ = 0;
    // dense route
    std::optional<SpanSolver> solver_;
};

/// Commutant { phi : phi A_M(g) = A_N(g) phi for all generators g },
/// computed as the null space of the stacked per-generator system. Between
/// monomial modules every constraint row has at most two +-1 entries, and
/// the null space falls out of transport propagation over positions;
/// generic inputs go through the dense system.
/// Errors: AmbientMismatch.
HomSpace hom_space(const FiniteLengthModule& M, const FiniteLengthModule& N);

/// Reference implementation on the dense stacked system, independent of
/// the transport route; small instances only.
HomSpace hom_space_dense(const FiniteLengthModule& M, const FiniteLengthModule& N);

/// Hom(M, N) as a module: action of t^g post-composes with the action on N.
FiniteLengthModule hom_module(const FiniteLengthModule& M, const FiniteLengthModule& N);

/// dim of the socle (0 : m) = intersection of the action kernels.
long long socle_dimension(const FiniteLengthModule& M);

/// nu(M) = dim M/mM: dimension minus the rank of the stacked action images.
long long minimal_generator_count(const FiniteLengthModule& M);

/// Freeness certificate over the Artinian quotient ring A of length
/// quotient_length: nu(M) = expected_rank together with
/// dim M = expected_rank * quotient_length force A^rank -> M to be an
/// isomorphism. expected_rank must be positive (a zero module is checked by
/// dim alone).
bool is_free_over_quotient(const FiniteLengthModule& M, long long quotient_length,
                           long long expected_rank);

/// Quotient of M by the span of the given coordinate vectors, which must be
/// invariant under the actions; actions are induced on the quotient.
FiniteLengthModule cokernel_module(const FiniteLengthModule& M,
                                   const std::vector<std::vector<mpq_class>>& span);

} // namespace ulrich

#endif
