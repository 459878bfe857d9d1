#include "ulrich/module.hpp"

#include "ulrich/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ulrich {

namespace {

// Union-find over the positions of the Hom grid, with a "forced zero" mark
// per class.
struct Classes {
    std::vector<int> parent;
    std::vector<bool> zero;

    explicit Classes(size_t n) : parent(n), zero(n, false)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v)
    {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        parent[static_cast<size_t>(a)] = b;
        zero[static_cast<size_t>(b)] = zero[static_cast<size_t>(b)] || zero[static_cast<size_t>(a)];
    }
    void mark_zero(int v) { zero[static_cast<size_t>(find(v))] = true; }
};

} // namespace

FiniteLengthModule FiniteLengthModule::monomial(NumericalSemigroup H, std::vector<long long> labels)
{
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    FiniteLengthModule mod(std::move(H));
    mod.dim_ = static_cast<int>(labels.size());
    for (size_t gi = 0; gi < mod.ambient_.generators().size(); ++gi) {
        long long g = mod.ambient_.generators()[gi];
        std::vector<int> target(labels.size(), -1);
        for (size_t j = 0; j < labels.size(); ++j) {
            auto it = std::lower_bound(labels.begin(), labels.end(), labels[j] + g);
            if (it != labels.end() && *it == labels[j] + g)
                target[j] = static_cast<int>(it - labels.begin());
        }
        mod.index_actions_.push_back(std::move(target));
    }
    mod.labels_ = std::move(labels);
    mod.check_invariants();
    return mod;
}

FiniteLengthModule FiniteLengthModule::dense(NumericalSemigroup H, std::vector<RatMat> actions)
{
    FiniteLengthModule mod(std::move(H));
    if (actions.size() != mod.ambient_.generators().size())
        raise(errc::internal, "one action matrix per minimal generator required");
    mod.dim_ = actions.empty() ? 0 : actions.front().rows();
    for (const RatMat& a : actions)
        if (a.rows() != mod.dim_ || a.cols() != mod.dim_)
            raise(errc::internal, "action matrices must be square of equal size");
    mod.dense_actions_ = std::move(actions);
    mod.check_invariants();
    return mod;
}

RatMat FiniteLengthModule::action_matrix(size_t gen_index) const
{
    if (!dense_actions_.empty())
        return dense_actions_[gen_index];
    RatMat a(dim_, dim_);
    const std::vector<int>& target = index_actions_[gen_index];
    for (int j = 0; j < dim_; ++j)
        if (target[static_cast<size_t>(j)] >= 0)
            a.at(target[static_cast<size_t>(j)], j) = 1;
    return a;
}

void FiniteLengthModule::check_invariants() const
{
    size_t v = ambient_.generators().size();
    if (!index_actions_.empty()) {
        // Index maps come from degree shifts: nilpotency is structural
        // (labels strictly increase), commutation needs the annihilated set
        // to be stable, which fails exactly when the label set is not the
        // difference of two ideals.
        for (size_t g = 0; g < v; ++g)
            for (size_t h = g + 1; h < v; ++h) {
                const std::vector<int>& tg = index_actions_[g];
                const std::vector<int>& th = index_actions_[h];
                for (int j = 0; j < dim_; ++j) {
                    int gh = tg[static_cast<size_t>(j)] < 0
                                 ? -1
                                 : th[static_cast<size_t>(tg[static_cast<size_t>(j)])];
                    int hg = th[static_cast<size_t>(j)] < 0
                                 ? -1
                                 : tg[static_cast<size_t>(th[static_cast<size_t>(j)])];
                    if (gh != hg)
                        raise(errc::internal, "monomial actions do not commute");
                }
            }
        return;
    }
    for (size_t g = 0; g < v; ++g) {
        if (!is_nilpotent(dense_actions_[g]))
            raise(errc::internal, "action matrix is not nilpotent");
        for (size_t h = g + 1; h < v; ++h)
            if (!(mul(dense_actions_[g], dense_actions_[h]) ==
                  mul(dense_actions_[h], dense_actions_[g])))
                raise(errc::internal, "action matrices do not commute");
    }
}

FiniteLengthModule quotient_module(const NumericalSemigroup& H, const RelativeIdeal& E,
                                   long long q_degree)
{
    if (!membership(E, q_degree))
        raise(errc::not_in_ideal,
              "degree " + std::to_string(q_degree) + " does not lie in the ideal");
    return ideal_quotient_module(H, E, principal_ideal(H, q_degree));
}

FiniteLengthModule ideal_quotient_module(const NumericalSemigroup& H, const RelativeIdeal& numer,
                                         const RelativeIdeal& denom)
{
    if (!(numer.ambient() == H) || !(denom.ambient() == H))
        raise(errc::ambient_mismatch, "quotient over a different semigroup");
    if (!is_subset(denom, numer))
        raise(errc::not_in_ideal, "denominator ideal is not contained in the numerator");
    std::vector<long long> labels;
    for (long long z = numer.min_degree(); z < denom.conductor(); ++z)
        if (membership(numer, z) && !membership(denom, z))
            labels.push_back(z);
    return FiniteLengthModule::monomial(H, std::move(labels));
}

namespace {

void require_same_ambient(const FiniteLengthModule& M, const FiniteLengthModule& N)
{
    if (!(M.ambient() == N.ambient()))
        raise(errc::ambient_mismatch, "Hom of modules over different semigroups");
}

// Inverse of an injective partial index map: inv[y] = j with target[j] = y,
// else -1.
std::vector<int> invert(const std::vector<int>& target, int n)
{
    std::vector<int> inv(static_cast<size_t>(n), -1);
    for (size_t j = 0; j < target.size(); ++j)
        if (target[j] >= 0) {
            if (inv[static_cast<size_t>(target[j])] >= 0)
                raise(errc::internal, "index action is not injective");
            inv[static_cast<size_t>(target[j])] = static_cast<int>(j);
        }
    return inv;
}

} // namespace

HomSpace hom_space(const FiniteLengthModule& M, const FiniteLengthModule& N)
{
    require_same_ambient(M, N);
    if (!M.has_labels() || !N.has_labels())
        return hom_space_dense(M, N);

    const NumericalSemigroup& H = M.ambient();
    int m = M.dimension();
    int n = N.dimension();
    auto pos = [m](int y, int w) { return y * m + w; };

    // Each constraint row of the stacked system phi A_M(g) = A_N(g) phi has
    // at most two +-1 entries, so the null space is the span of the
    // indicator vectors of the equivalence classes that transport builds.
    Classes classes(static_cast<size_t>(n) * static_cast<size_t>(m));
    for (size_t gi = 0; gi < H.generators().size(); ++gi) {
        const std::vector<int>& sigma = M.index_action(gi);
        std::vector<int> inv = invert(N.index_action(gi), n);
        for (int w = 0; w < m; ++w)
            for (int y = 0; y < n; ++y) {
                int lhs = sigma[static_cast<size_t>(w)] < 0
                              ? -1
                              : pos(y, sigma[static_cast<size_t>(w)]);
                int rhs = inv[static_cast<size_t>(y)] < 0
                              ? -1
                              : pos(inv[static_cast<size_t>(y)], w);
                if (lhs >= 0 && rhs >= 0)
                    classes.unite(lhs, rhs);
                else if (lhs >= 0)
                    classes.mark_zero(lhs);
                else if (rhs >= 0)
                    classes.mark_zero(rhs);
            }
    }

    HomSpace hom;
    hom.n_ = n;
    hom.m_ = m;
    hom.class_of_.assign(static_cast<size_t>(n) * static_cast<size_t>(m), -1);
    std::vector<int> root_to_class(static_cast<size_t>(n) * static_cast<size_t>(m), -1);
    std::vector<int> reps;
    for (int p = 0; p < n * m; ++p) {
        int root = classes.find(p);
        if (classes.zero[static_cast<size_t>(root)])
            continue;
        if (root_to_class[static_cast<size_t>(root)] < 0) {
            root_to_class[static_cast<size_t>(root)] = static_cast<int>(reps.size());
            reps.push_back(p);
            hom.class_size_.push_back(0);
        }
        int c = root_to_class[static_cast<size_t>(root)];
        hom.class_of_[static_cast<size_t>(p)] = c;
        ++hom.class_size_[static_cast<size_t>(c)];
    }
    int h = static_cast<int>(reps.size());

    for (int c = 0; c < h; ++c) {
        RatMat b(n, m);
        for (int p = 0; p < n * m; ++p)
            if (hom.class_of_[static_cast<size_t>(p)] == c)
                b.at(p / m, p % m) = 1;
        hom.basis_.push_back(std::move(b));
    }

    // Action of t^g on Hom is post-composition with A_N(g); it permutes the
    // class indicators up to annihilation, covering whole classes or none.
    std::vector<RatMat> actions;
    for (size_t gi = 0; gi < H.generators().size(); ++gi) {
        const std::vector<int>& tau = N.index_action(gi);
        RatMat a(h, h);
        std::vector<long long> covered(static_cast<size_t>(h));
        for (int c = 0; c < h; ++c) {
            std::fill(covered.begin(), covered.end(), 0);
            long long annihilated = 0;
            for (int p = 0; p < n * m; ++p) {
                if (hom.class_of_[static_cast<size_t>(p)] != c)
                    continue;
                int y = p / m, w = p % m;
                int ty = tau[static_cast<size_t>(y)];
                if (ty < 0) {
                    ++annihilated;
                    continue;
                }
                int q = pos(ty, w);
                int cq = hom.class_of_[static_cast<size_t>(q)];
                if (cq < 0)
                    raise(errc::internal, "Hom action image hits a zero-forced position");
                ++covered[static_cast<size_t>(cq)];
            }
            for (int c2 = 0; c2 < h; ++c2) {
                if (covered[static_cast<size_t>(c2)] == 0)
                    continue;
                if (covered[static_cast<size_t>(c2)] !=
                    static_cast<long long>(hom.class_size_[static_cast<size_t>(c2)]))
                    raise(errc::internal, "Hom action image covers a class partially");
                a.at(c2, c) = 1;
            }
            (void)annihilated;
        }
        actions.push_back(std::move(a));
    }
    hom.module_ = FiniteLengthModule::dense(H, std::move(actions));
    return hom;
}

HomSpace hom_space_dense(const FiniteLengthModule& M, const FiniteLengthModule& N)
{
    require_same_ambient(M, N);
    const NumericalSemigroup& H = M.ambient();
    int m = M.dimension();
    int n = N.dimension();
    if (static_cast<long long>(n) * m > 4000)
        raise(errc::internal, "dense Hom solver limited to small instances");

    size_t v = H.generators().size();
    // Stacked system over the nm unknowns phi_{y,w}: one block per
    // generator, rows indexed by output positions (y, w).
    RatMat sys(static_cast<int>(v) * n * m, n * m);
    int row = 0;
    for (size_t gi = 0; gi < v; ++gi) {
        RatMat am = M.action_matrix(gi);
        RatMat an = N.action_matrix(gi);
        for (int y = 0; y < n; ++y)
            for (int w = 0; w < m; ++w, ++row) {
                for (int k = 0; k < m; ++k)
                    if (am.at(k, w) != 0)
                        sys.at(row, y * m + k) += am.at(k, w);
                for (int k = 0; k < n; ++k)
                    if (an.at(y, k) != 0)
                        sys.at(row, k * m + w) -= an.at(y, k);
            }
    }
    std::vector<std::vector<mpq_class>> kernel = nullspace(sys);

    HomSpace hom;
    hom.n_ = n;
    hom.m_ = m;
    for (const auto& vct : kernel) {
        RatMat b(n, m);
        for (int p = 0; p < n * m; ++p)
            b.at(p / m, p % m) = vct[static_cast<size_t>(p)];
        hom.basis_.push_back(std::move(b));
    }
    hom.solver_.emplace(kernel);

    int h = static_cast<int>(kernel.size());
    std::vector<RatMat> actions;
    for (size_t gi = 0; gi < v; ++gi) {
        RatMat an = N.action_matrix(gi);
        RatMat a(h, h);
        for (int c = 0; c < h; ++c) {
            RatMat image = mul(an, hom.basis_[static_cast<size_t>(c)]);
            std::vector<mpq_class> flat(static_cast<size_t>(n) * m);
            for (int p = 0; p < n * m; ++p)
                flat[static_cast<size_t>(p)] = image.at(p / m, p % m);
            std::vector<mpq_class> coords = hom.solver_->coordinates(flat);
            for (int c2 = 0; c2 < h; ++c2)
                a.at(c2, c) = coords[static_cast<size_t>(c2)];
        }
        actions.push_back(std::move(a));
    }
    hom.module_ = FiniteLengthModule::dense(H, std::move(actions));
    return hom;
}

std::vector<mpq_class> HomSpace::coordinates(const RatMat& phi) const
{
    if (phi.rows() != n_ || phi.cols() != m_)
        raise(errc::internal, "commutant element of wrong shape");
    if (solver_.has_value()) {
        std::vector<mpq_class> flat(static_cast<size_t>(n_) * m_);
        for (int p = 0; p < n_ * m_; ++p)
            flat[static_cast<size_t>(p)] = phi.at(p / m_, p % m_);
        return solver_->coordinates(flat);
    }
    // Transport route: commutant elements are constant on classes and zero
    // on zero-forced positions; validate while reading off.
    int h = dim();
    std::vector<mpq_class> coords(static_cast<size_t>(h));
    std::vector<bool> seen(static_cast<size_t>(h), false);
    for (int p = 0; p < n_ * m_; ++p) {
        const mpq_class& val = phi.at(p / m_, p % m_);
        int c = class_of_[static_cast<size_t>(p)];
        if (c < 0) {
            if (val != 0)
                raise(errc::internal, "matrix is nonzero on a zero-forced position");
            continue;
        }
        if (!seen[static_cast<size_t>(c)]) {
            coords[static_cast<size_t>(c)] = val;
            seen[static_cast<size_t>(c)] = true;
        } else if (coords[static_cast<size_t>(c)] != val) {
            raise(errc::internal, "matrix is not constant on a transport class");
        }
    }
    return coords;
}

FiniteLengthModule hom_module(const FiniteLengthModule& M, const FiniteLengthModule& N)
{
    return hom_space(M, N).module();
}

long long socle_dimension(const FiniteLengthModule& M)
{
    size_t v = M.ambient().generators().size();
    int n = M.dimension();
    if (M.has_labels()) {
        long long count = 0;
        for (int j = 0; j < n; ++j) {
            bool killed = true;
            for (size_t g = 0; g < v && killed; ++g)
                killed = M.index_action(g)[static_cast<size_t>(j)] < 0;
            if (killed)
                ++count;
        }
        return count;
    }
    RatMat stacked(static_cast<int>(v) * n, n);
    for (size_t g = 0; g < v; ++g) {
        RatMat a = M.action_matrix(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                stacked.at(static_cast<int>(g) * n + i, j) = a.at(i, j);
    }
    return n - rank(std::move(stacked));
}

long long minimal_generator_count(const FiniteLengthModule& M)
{
    size_t v = M.ambient().generators().size();
    int n = M.dimension();
    if (M.has_labels()) {
        std::set<int> hit;
        for (size_t g = 0; g < v; ++g)
            for (int j = 0; j < n; ++j)
                if (M.index_action(g)[static_cast<size_t>(j)] >= 0)
                    hit.insert(M.index_action(g)[static_cast<size_t>(j)]);
        return n - static_cast<long long>(hit.size());
    }
    RatMat stacked(n, static_cast<int>(v) * n);
    for (size_t g = 0; g < v; ++g) {
        RatMat a = M.action_matrix(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                stacked.at(i, static_cast<int>(g) * n + j) = a.at(i, j);
    }
    return n - rank(std::move(stacked));
}

bool is_free_over_quotient(const FiniteLengthModule& M, long long quotient_length,
                           long long expected_rank)
{
    if (quotient_length < 1 || expected_rank < 1)
        raise(errc::internal, "freeness test needs positive length and rank");
    if (M.dimension() != expected_rank * quotient_length)
        return false;
    return minimal_generator_count(M) == expected_rank;
}

FiniteLengthModule cokernel_module(const FiniteLengthModule& M,
                                   const std::vector<std::vector<mpq_class>>& span)
{
    int n = M.dimension();
    RatMat s(static_cast<int>(span.size()), n);
    for (size_t r = 0; r < span.size(); ++r) {
        if (static_cast<int>(span[r].size()) != n)
            raise(errc::internal, "span vector of wrong length");
        for (int j = 0; j < n; ++j)
            s.at(static_cast<int>(r), j) = span[r][static_cast<size_t>(j)];
    }
    std::vector<int> pivots = rref_inplace(s);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots)
        is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[static_cast<size_t>(j)])
            free_cols.push_back(j);
    int q = static_cast<int>(free_cols.size());

    // project(x): reduce by the rref rows, then read the free coordinates.
    auto project = [&](std::vector<mpq_class> x) {
        for (size_t r = 0; r < pivots.size(); ++r) {
            mpq_class factor = x[static_cast<size_t>(pivots[r])];
            if (factor == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                const mpq_class& sij = s.at(static_cast<int>(r), j);
                if (sij != 0)
                    x[static_cast<size_t>(j)] -= factor * sij;
            }
        }
        std::vector<mpq_class> out(static_cast<size_t>(q));
        for (int j = 0; j < q; ++j)
            out[static_cast<size_t>(j)] = x[static_cast<size_t>(free_cols[static_cast<size_t>(j)])];
        return out;
    };

    size_t v = M.ambient().generators().size();
    std::vector<RatMat> actions;
    for (size_t g = 0; g < v; ++g) {
        RatMat a = M.action_matrix(g);
        // the span must be action-invariant for the quotient to make sense
        for (size_t r = 0; r < span.size(); ++r) {
            std::vector<mpq_class> image(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                mpq_class acc = 0;
                for (int j = 0; j < n; ++j)
                    if (a.at(i, j) != 0 && span[r][static_cast<size_t>(j)] != 0)
                        acc += a.at(i, j) * span[r][static_cast<size_t>(j)];
                image[static_cast<size_t>(i)] = std::move(acc);
            }
            for (const mpq_class& c : project(std::move(image)))
                if (c != 0)
                    raise(errc::internal, "span is not invariant under the actions");
        }
        RatMat induced(q, q);
        for (int col = 0; col < q; ++col) {
            std::vector<mpq_class> x(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                x[static_cast<size_t>(i)] = a.at(i, free_cols[static_cast<size_t>(col)]);
            std::vector<mpq_class> proj = project(std::move(x));
            for (int i = 0; i < q; ++i)
                induced.at(i, col) = proj[static_cast<size_t>(i)];
        }
        actions.push_back(std::move(induced));
    }
    return FiniteLengthModule::dense(M.ambient(), std::move(actions));
}

} // namespace ulrich
