#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afspin/clifford.hpp"
#include "afspin/group.hpp"
#include "afspin/matrix.hpp"

namespace afspin {

/// True iff x' = x and x * conj(x) = 1 hold exactly.
template <class S>
bool is_spin(const CliffordElement<S>& x)
{
    return x.grade_involution() == x && x * x.conjugate() == CliffordElement<S>::one(x.dim());
}

/// Element of Spin(n), certified at construction.
template <class S>
class SpinElement {
public:
    explicit SpinElement(CliffordElement<S> x) : x_(std::move(x))
    {
        if (!is_spin(x_))
            throw InvariantViolation("element " + x_.str() + " is not in Spin(" + std::to_string(x_.dim()) + ")");
    }

    static SpinElement one(int n) { return SpinElement(CliffordElement<S>::one(n), trusted{}); }

    const CliffordElement<S>& value() const { return x_; }
    int dim() const { return x_.dim(); }

    /// Inverse in Spin(n) is the conjugate.
    SpinElement inverse() const { return SpinElement(x_.conjugate(), trusted{}); }
    SpinElement operator-() const { return SpinElement(-x_, trusted{}); }

    friend SpinElement operator*(const SpinElement& a, const SpinElement& b)
    {
        return SpinElement(a.x_ * b.x_, trusted{});
    }
    friend bool operator==(const SpinElement& a, const SpinElement& b) { return a.x_ == b.x_; }

    /// x^e for any integer e.
    SpinElement pow(long e) const
    {
        SpinElement base = e < 0 ? inverse() : *this;
        SpinElement r = one(dim());
        for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
            if (k & 1)
                r = r * base;
            if (k > 1)
                base = base * base;
        }
        return r;
    }

    bool is_plus_one() const { return x_ == CliffordElement<S>::one(dim()); }
    bool is_minus_one() const { return x_ == -CliffordElement<S>::one(dim()); }

    std::string str() const { return x_.str(); }

private:
    struct trusted {};
    SpinElement(CliffordElement<S> x, trusted) : x_(std::move(x)) {}

    CliffordElement<S> x_;
};

/// Covering map: column j of lambda(x) is x e_j conj(x).
template <class S>
Matrix<S> lambda(const SpinElement<S>& x)
{
    int n = x.dim();
    Matrix<S> m(n);
    CliffordElement<S> xb = x.value().conjugate();
    for (int j = 0; j < n; ++j) {
        std::vector<S> col = vector_extract(x.value() * CliffordElement<S>::basis(n, j + 1) * xb);
        for (int i = 0; i < n; ++i)
            m(i, j) = col[i];
    }
    return m;
}

template <class S>
bool is_orthogonal(const Matrix<S>& m)
{
    return m.transpose() * m == Matrix<S>::identity(m.size());
}

/// Signed permutation matrix: column j has the entry sign[j] in row perm[j] (0-based).
struct SignedPermMatrix {
    std::vector<int> perm;
    std::vector<int> sign;

    int size() const { return static_cast<int>(perm.size()); }

    template <class T>
    Matrix<T> to_matrix() const
    {
        Matrix<T> m(size());
        for (int j = 0; j < size(); ++j)
            m(perm[j], j) = T(sign[j]);
        return m;
    }

    int det() const
    {
        int d = std::accumulate(sign.begin(), sign.end(), 1, std::multiplies<int>());
        std::vector<char> seen(size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = 1;
                ++len;
            }
            if (len % 2 == 0)
                d = -d;
        }
        return d;
    }

    /// Reads a matrix with exactly one +-1 entry per row and column.
    template <class T>
    static SignedPermMatrix from_matrix(const Matrix<T>& m)
    {
        int n = m.size();
        SignedPermMatrix p{std::vector<int>(n, -1), std::vector<int>(n, 0)};
        std::vector<char> row_used(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const T& v = m(i, j);
                if (v == T(0))
                    continue;
                if (!(v == T(1) || v == T(-1)) || p.perm[j] >= 0 || row_used[i])
                    throw NotSignedPerm("matrix " + matrix_str(m) + " is not a signed permutation");
                p.perm[j] = i;
                p.sign[j] = v == T(1) ? 1 : -1;
                row_used[i] = 1;
            }
        for (int j = 0; j < n; ++j)
            if (p.perm[j] < 0)
                throw NotSignedPerm("matrix " + matrix_str(m) + " is singular");
        return p;
    }
};

/// All signed permutation matrices of size n, optionally only those of determinant +1.
inline std::vector<SignedPermMatrix> all_signed_perms(int n, bool det_plus_one)
{
    std::vector<SignedPermMatrix> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned s = 0; s < (1u << n); ++s) {
            SignedPermMatrix p{perm, std::vector<int>(n)};
            for (int j = 0; j < n; ++j)
                p.sign[j] = (s >> j & 1) ? -1 : 1;
            if (!det_plus_one || p.det() == 1)
                out.push_back(p);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Flips x so that its first nonzero coefficient in blade-lexicographic order is positive.
template <class S>
CliffordElement<S> canonical_sign(const CliffordElement<S>& x)
{
    if (x.is_zero() || x.terms().begin()->second.sign() > 0)
        return x;
    return -x;
}

template <class S>
using SpinPair = std::pair<SpinElement<S>, SpinElement<S>>;

template <class S>
SpinPair<S> make_pair_checked(const CliffordElement<S>& x, const Matrix<S>& target)
{
    SpinElement<S> s(canonical_sign(x));
    if (!(lambda(s) == target))
        throw InvariantViolation("preimage " + s.str() + " does not map to " + matrix_str(target));
    return {s, -s};
}

/// Preimage pair {x, -x} of a determinant +1 signed permutation matrix: one (1 + e_p e_q)/sqrt2
/// factor per transposition, then a blade e_{n1}...e_{nl} for the residual diagonal.
template <class S>
SpinPair<S> preimage_signed_perm(const SignedPermMatrix& m)
{
    int n = m.size();
    if (m.det() != 1)
        throw NotInSO("signed permutation has determinant -1");
    CliffordElement<S> x = CliffordElement<S>::one(n);
    // Factor perm into transpositions by sorting a working copy.
    std::vector<int> p = m.perm;
    std::vector<std::pair<int, int>> transpositions;
    for (int j = 0; j < n; ++j)
        while (p[j] != j) {
            int k = p[j];
            transpositions.emplace_back(j, k);
            std::swap(p[j], p[k]);
        }
    // the swaps give perm = t_m ... t_1, so the factors are multiplied on the left in order
    std::optional<S> root2;
    if (!transpositions.empty() && !(root2 = S(2).sqrt()))
        throw UnsupportedScalar("sqrt 2 is not in the scalar field");
    for (auto [a, b] : transpositions) {
        S inv_root2 = root2->inverse();
        CliffordElement<S> f = CliffordElement<S>::one(n) + CliffordElement<S>::monomial(n, {a + 1, b + 1});
        x = f.scaled(inv_root2) * x;
    }
    Matrix<S> target = m.to_matrix<S>();
    Matrix<S> r = lambda(SpinElement<S>(x));
    // residual diagonal D with target = D r
    std::vector<int> flips;
    for (int i = 0; i < n; ++i) {
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (!(r(i, j) == S(0)))
                col = j;
        if (!(r(i, col) == target(i, col)))
            flips.push_back(i + 1);
    }
    if (flips.size() % 2)
        throw InvariantViolation("odd residual diagonal in signed permutation preimage");
    CliffordElement<S> d = CliffordElement<S>::one(n);
    for (int i : flips)
        d = d * CliffordElement<S>::basis(n, i);
    return make_pair_checked(d * x, target);
}

/// Preimage pair of an arbitrary rotation with entries in S, by solving x e_j = (M e_j) x
/// over the even subalgebra and normalising by sqrt(x conj(x)).
template <class S>
SpinPair<S> preimage_general(const Matrix<S>& m)
{
    int n = m.size();
    if (!is_orthogonal(m))
        throw NotInSO("matrix " + matrix_str(m) + " is not orthogonal");
    if (!(m.det() == S(1)))
        throw NotInSO("matrix " + matrix_str(m) + " has determinant -1");
    std::vector<unsigned> even, odd;
    for (unsigned b = 0; b < (1u << n); ++b)
        (std::popcount(b) % 2 ? odd : even).push_back(b);
    std::vector<int> odd_index(1u << n, -1);
    for (std::size_t i = 0; i < odd.size(); ++i)
        odd_index[odd[i]] = static_cast<int>(i);
    int cols = static_cast<int>(even.size());
    std::vector<std::vector<S>> rows;
    for (int j = 0; j < n; ++j) {
        std::vector<S> mcol = m.column(j);
        CliffordElement<S> v = vector_embed(mcol, n);
        CliffordElement<S> ej = CliffordElement<S>::basis(n, j + 1);
        std::vector<std::vector<S>> block(odd.size(), std::vector<S>(cols));
        for (int c = 0; c < cols; ++c) {
            CliffordElement<S> u = CliffordElement<S>::blade(Blade(n, even[c]));
            CliffordElement<S> eq = u * ej - v * u;
            for (const auto& [mask, coef] : eq.terms())
                block[odd_index[mask]][c] = coef;
        }
        for (auto& r : block)
            rows.push_back(std::move(r));
    }
    // Gauss-Jordan elimination
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[rank], rows[piv]);
        S inv = rows[rank][c].inverse();
        for (auto& v : rows[rank])
            v *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c].is_zero())
                continue;
            S f = rows[r][c];
            for (int k = 0; k < cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank == cols)
        throw NotInImage("no nonzero even solution for " + matrix_str(m));
    if (rank != cols - 1)
        throw InvariantViolation("solution space of dimension " + std::to_string(cols - rank));
    int free_col = 0;
    for (int c = 0; c < cols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
            free_col = c;
    CliffordElement<S> y(n);
    y.add_term(even[free_col], S(1));
    for (int r = 0; r < rank; ++r)
        y.add_term(even[pivot_col[r]], -rows[r][free_col]);
    CliffordElement<S> s = y * y.conjugate();
    if (!s.is_scalar() || s.scalar_part().sign() <= 0)
        throw InvariantViolation("y conj(y) is not a positive scalar for " + matrix_str(m));
    auto root = s.scalar_part().sqrt();
    if (!root)
        throw UnsupportedScalar("normalising scalar " + s.scalar_part().str() + " has no square root in the field");
    return make_pair_checked(y.scaled(root->inverse()), m);
}

/// Finite subgroup of Spin(n), elements in breadth-first order from 1.
template <class S>
struct FiniteSpinGroup {
    std::vector<SpinElement<S>> generators;
    std::vector<SpinElement<S>> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const SpinElement<S>& x) const
    {
        return std::find(elements.begin(), elements.end(), x) != elements.end();
    }
    CayleyTable table() const
    {
        return cayley_table(elements, [](const auto& a, const auto& b) { return a * b; },
                            [](const auto& a) { return a.str(); });
    }
};

template <class S>
FiniteSpinGroup<S> subgroup_closure(const std::vector<SpinElement<S>>& gens, int n,
                                    std::size_t bound = default_closure_bound)
{
    std::vector<SpinElement<S>> all = gens;
    for (const auto& g : gens)
        all.push_back(g.inverse());
    auto c = bfs_closure(SpinElement<S>::one(n), all, [](const auto& a, const auto& b) { return a * b; },
                         [](const auto& a) { return a.str(); }, bound);
    return FiniteSpinGroup<S>{gens, std::move(c.elements)};
}

template <class S>
GroupName identify_group(const FiniteSpinGroup<S>& g)
{
    return identify_group(g.table());
}

} // namespace afspin
