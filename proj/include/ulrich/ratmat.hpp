#ifndef ULRICH_RATMAT_HPP
#define ULRICH_RATMAT_HPP

#include <gmpxx.h>

#include <vector>

namespace ulrich {

/// Dense matrix over exact rationals. Instances stay small (module
/// dimensions, not semigroup windows); every rank-type computation must be
/// exact, so no floating point anywhere.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols))
    {
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpq_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;

    friend bool operator==(const RatMat& x, const RatMat& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> a_;
};

RatMat mul(const RatMat& x, const RatMat& y);

/// Rank by fraction Gaussian elimination (destructive on the copy).
int rank(RatMat a);

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row, in order.
std::vector<int> rref_inplace(RatMat& a);

/// Basis of the right null space { v : a v = 0 }.
std::vector<std::vector<mpq_class>> nullspace(const RatMat& a);

/// True iff the matrix is nilpotent. Decided structurally (acyclic nonzero
/// pattern) when all entries are non-negative, by exact powering otherwise.
bool is_nilpotent(const RatMat& a);

/// Solves coordinates in the span of a fixed list of vectors.
class SpanSolver {
public:
    /// vectors: list of length-d columns spanning the subspace.
    explicit SpanSolver(const std::vector<std::vector<mpq_class>>& vectors);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Coordinates x with sum x_i vectors_i = v; raises Internal when v is
    /// not in the span.
    std::vector<mpq_class> coordinates(const std::vector<mpq_class>& v) const;
    bool contains(const std::vector<mpq_class>& v) const;

private:
    int dim_ = 0;
    int count_ = 0;
    RatMat rref_;              // rref of [vectors | I] augmented bookkeeping
    std::vector<int> pivots_;
};

} // namespace ulrich

#endif
