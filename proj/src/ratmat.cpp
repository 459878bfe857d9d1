#include "ulrich/ratmat.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

bool RatMat::is_zero() const
{
    for (const mpq_class& x : a_)
        if (x != 0)
            return false;
    return true;
}

RatMat mul(const RatMat& x, const RatMat& y)
{
    if (x.cols() != y.rows())
        raise(errc::internal, "matrix shape mismatch in mul");
    RatMat out(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const mpq_class& xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (int j = 0; j < y.cols(); ++j) {
                const mpq_class& ykj = y.at(k, j);
                if (ykj == 0)
                    continue;
                out.at(i, j) += xik * ykj;
            }
        }
    return out;
}

namespace {

// Row echelon reduction with pivots restricted to the first pivot_cols
// columns; rows are reduced across their full width.
std::vector<int> rref_limited(RatMat& a, int pivot_cols)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < pivot_cols && row < a.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < a.rows(); ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(row, j));
        mpq_class inv = a.at(row, col);
        for (int j = 0; j < a.cols(); ++j)
            a.at(row, j) /= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col) == 0)
                continue;
            mpq_class factor = a.at(r, col);
            for (int j = 0; j < a.cols(); ++j)
                a.at(r, j) -= factor * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<int> rref_inplace(RatMat& a)
{
    return rref_limited(a, a.cols());
}

int rank(RatMat a)
{
    return static_cast<int>(rref_inplace(a).size());
}

std::vector<std::vector<mpq_class>> nullspace(const RatMat& a)
{
    RatMat r = a;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
    for (int p : pivots)
        is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<mpq_class>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)])
            continue;
        std::vector<mpq_class> v(static_cast<size_t>(a.cols()));
        v[static_cast<size_t>(f)] = 1;
        for (size_t row = 0; row < pivots.size(); ++row)
            v[static_cast<size_t>(pivots[row])] = -r.at(static_cast<int>(row), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_nilpotent(const RatMat& a)
{
    if (a.rows() != a.cols())
        raise(errc::internal, "nilpotency asked of a non-square matrix");
    int n = a.rows();
    if (n == 0)
        return true;

    // Cycle detection on the nonzero pattern. Acyclic implies nilpotent for
    // any entries; for non-negative entries the converse holds as well.
    bool nonnegative = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) < 0)
                nonnegative = false;
    std::vector<int> color(static_cast<size_t>(n), 0); // 0 white, 1 on stack, 2 done
    bool cyclic = false;
    auto dfs = [&](auto&& self, int v) -> void {
        color[static_cast<size_t>(v)] = 1;
        for (int w = 0; w < n && !cyclic; ++w) {
            if (a.at(w, v) == 0)
                continue; // edge v -> w: e_v maps onto e_w
            if (color[static_cast<size_t>(w)] == 1)
                cyclic = true;
            else if (color[static_cast<size_t>(w)] == 0)
                self(self, w);
        }
        color[static_cast<size_t>(v)] = 2;
    };
    for (int v = 0; v < n && !cyclic; ++v)
        if (color[static_cast<size_t>(v)] == 0)
            dfs(dfs, v);
    if (!cyclic)
        return true;
    if (nonnegative)
        return false;

    // Entries of mixed sign on a cyclic pattern: decide by exact powering.
    RatMat power = a;
    long long exponent = 1;
    while (exponent < n) {
        power = mul(power, power);
        exponent *= 2;
        if (power.is_zero())
            return true;
    }
    return power.is_zero();
}

SpanSolver::SpanSolver(const std::vector<std::vector<mpq_class>>& vectors)
{
    count_ = static_cast<int>(vectors.size());
    dim_ = vectors.empty() ? 0 : static_cast<int>(vectors.front().size());
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim_)
            raise(errc::internal, "span vectors of unequal length");

    // [B | I]: the identity block records the row operations, so queries
    // reduce to one matrix-vector product.
    rref_ = RatMat(dim_, count_ + dim_);
    for (int j = 0; j < count_; ++j)
        for (int i = 0; i < dim_; ++i)
            rref_.at(i, j) = vectors[static_cast<size_t>(j)][static_cast<size_t>(i)];
    for (int i = 0; i < dim_; ++i)
        rref_.at(i, count_ + i) = 1;
    pivots_ = rref_limited(rref_, count_);
}

std::vector<mpq_class> SpanSolver::coordinates(const std::vector<mpq_class>& v) const
{
    if (static_cast<int>(v.size()) != dim_)
        raise(errc::internal, "query vector of wrong length");
    std::vector<mpq_class> reduced(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < dim_; ++j) {
            const mpq_class& rij = rref_.at(i, count_ + j);
            if (rij != 0 && v[static_cast<size_t>(j)] != 0)
                s += rij * v[static_cast<size_t>(j)];
        }
        reduced[static_cast<size_t>(i)] = std::move(s);
    }
    for (int i = static_cast<int>(pivots_.size()); i < dim_; ++i)
        if (reduced[static_cast<size_t>(i)] != 0)
            raise(errc::internal, "vector lies outside the span");
    std::vector<mpq_class> coords(static_cast<size_t>(count_));
    for (size_t row = 0; row < pivots_.size(); ++row)
        coords[static_cast<size_t>(pivots_[row])] = reduced[row];
    return coords;
}

bool SpanSolver::contains(const std::vector<mpq_class>& v) const
{
    if (static_cast<int>(v.size()) != dim_)
        raise(errc::internal, "query vector of wrong length");
    for (int i = static_cast<int>(pivots_.size()); i < dim_; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < dim_; ++j)
            s += rref_.at(i, count_ + j) * v[static_cast<size_t>(j)];
        if (s != 0)
            return false;
    }
    return true;
}

} // namespace ulrich
